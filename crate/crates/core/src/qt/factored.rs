//! Denominators kept as products of irreducible factors.
//!
//! Nearly every denominator met in this crate is a product of binomials
//! `1 - q^a t^b` or `q^a - t^b`, and these split over `Q` into cyclotomic
//! pieces `Phi_d(q^a t^b)` with `(a, b)` primitive. Keeping denominators in
//! that factored form turns lcm into a max over exponents and cancellation
//! into trial division, so no polynomial gcd is needed on the common path.
//! Anything else lands in a residual `other` factor handled with gcds.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::gcd::gcd;
use super::poly::QTPoly;

/// `Phi_d(v)` with `v = q^a t^b`, times `t^{|b| phi(d)}` when `b < 0`.
/// Normalized so that `gcd(a, |b|) = 1` and `a > 0`, or `a = 0, b > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Atom {
    d: u32,
    a: u32,
    b: i32,
}

fn cyclotomic(d: u32) -> Arc<Vec<i64>> {
    static MEMO: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(c) = memo.read().expect("poisoned").get(&d) {
        return c.clone();
    }
    // x^d - 1 divided by Phi_e for every proper divisor e
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in (1..d).filter(|e| d % e == 0) {
        num = div_monic(&num, &cyclotomic(e));
    }
    let c = Arc::new(num);
    memo.write().expect("poisoned").insert(d, c.clone());
    c
}

/// Quotient of integer polynomials (low degree first) by a monic divisor.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &x) in den.iter().enumerate() {
            rem[i + j] -= c * x;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

fn totient(d: u32) -> u32 {
    (1..=d).filter(|&k| k.gcd(&d) == 1).count() as u32
}

impl Atom {
    fn new(d: u32, a: u32, b: i32) -> Self {
        debug_assert!(a > 0 || b > 0);
        debug_assert_eq!(a.gcd(&b.unsigned_abs()), 1);
        Atom { d, a, b }
    }

    pub(crate) fn poly(&self) -> Arc<QTPoly> {
        static MEMO: OnceLock<RwLock<HashMap<Atom, Arc<QTPoly>>>> = OnceLock::new();
        let memo = MEMO.get_or_init(Default::default);
        if let Some(p) = memo.read().expect("poisoned").get(self) {
            return p.clone();
        }
        let coeffs = cyclotomic(self.d);
        let phi = coeffs.len() as i64 - 1;
        let lift = if self.b < 0 { -(self.b as i64) * phi } else { 0 };
        let p = QTPoly::from_counts(coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| {
            let k = k as i64;
            ((self.a * k as u32, (self.b as i64 * k + lift) as u32), c)
        }));
        let p = Arc::new(p);
        memo.write().expect("poisoned").insert(*self, p.clone());
        p
    }

    /// Factors of `Phi_d(v^r)`.
    fn dilate(&self, r: u32) -> Vec<Atom> {
        let dr = self.d * r;
        (1..=dr)
            .filter(|c| dr % c == 0 && c / c.gcd(&r) == self.d)
            .map(|c| Atom { d: c, ..*self })
            .collect()
    }

    /// The image under `q <-> t`, and whether it picks up a sign.
    fn swap(&self) -> (Atom, bool) {
        if self.b >= 0 {
            (Atom { d: self.d, a: self.b as u32, b: self.a as i32 }, false)
        } else {
            (Atom { d: self.d, a: self.b.unsigned_abs(), b: -(self.a as i32) }, self.d == 1)
        }
    }
}

/// `q^mono.0 t^mono.1 * prod atom^e * other`, with `other` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Den {
    mono: (u32, u32),
    atoms: BTreeMap<Atom, u32>,
    other: QTPoly,
}

impl Default for Den {
    fn default() -> Self {
        Self::one()
    }
}

/// Divides out the lex-leading coefficient; returns it with the monic part.
fn monic(p: QTPoly) -> (BigRational, QTPoly) {
    let lead = p.leading().expect("nonzero").1.clone();
    if lead.is_one() {
        (lead, p)
    } else {
        let inv = BigRational::one() / &lead;
        (lead, p.scale(&inv))
    }
}

impl Den {
    pub(crate) fn one() -> Self {
        Den { mono: (0, 0), atoms: BTreeMap::new(), other: QTPoly::one() }
    }

    pub(crate) fn is_one(&self) -> bool {
        self.mono == (0, 0) && self.atoms.is_empty() && self.other.is_one()
    }

    pub(crate) fn expand(&self) -> QTPoly {
        let mut p = self.other.shift(self.mono.0, self.mono.1);
        for (atom, &e) in &self.atoms {
            p = &p * &atom.poly().pow(e);
        }
        p
    }

    /// Writes a nonzero polynomial as `scalar * den`.
    pub(crate) fn factor(p: &QTPoly) -> (BigRational, Den) {
        let mut den = Den::one();
        let (i, j) = p.min_exponents().expect("nonzero");
        den.mono = (i, j);
        let mut rest = p.unshift(i, j);
        if let Some(c) = rest.as_constant() {
            return (c, den);
        }
        if let Some(atoms) = binomial_atoms(&rest) {
            for a in atoms {
                let q = rest.div_exact(&a.poly()).expect("binomial factor");
                rest = q;
                *den.atoms.entry(a).or_insert(0) += 1;
            }
        } else {
            for a in candidates(&rest) {
                let poly = a.poly();
                while let Some(q) = rest.div_exact(&poly) {
                    rest = q;
                    *den.atoms.entry(a).or_insert(0) += 1;
                }
            }
        }
        // whatever is left has no atom factor, but may still carry a monomial
        let (k, l) = rest.min_exponents().expect("nonzero");
        den.mono.0 += k;
        den.mono.1 += l;
        let rest = rest.unshift(k, l);
        match rest.as_constant() {
            Some(c) => (c, den),
            None => {
                let (c, m) = monic(rest);
                den.other = m;
                (c, den)
            }
        }
    }

    pub(crate) fn mul(&self, rhs: &Den) -> Den {
        let mut out = self.clone();
        out.mono.0 += rhs.mono.0;
        out.mono.1 += rhs.mono.1;
        for (a, e) in &rhs.atoms {
            *out.atoms.entry(*a).or_insert(0) += e;
        }
        if !rhs.other.is_one() {
            out.other = &out.other * &rhs.other;
        }
        out
    }

    pub(crate) fn pow(&self, n: u32) -> Den {
        Den {
            mono: (self.mono.0 * n, self.mono.1 * n),
            atoms: self.atoms.iter().map(|(a, e)| (*a, e * n)).filter(|(_, e)| *e > 0).collect(),
            other: self.other.pow(n),
        }
    }

    pub(crate) fn lcm(&self, rhs: &Den) -> Den {
        let mut out = self.clone();
        out.mono = (self.mono.0.max(rhs.mono.0), self.mono.1.max(rhs.mono.1));
        for (a, &e) in &rhs.atoms {
            let slot = out.atoms.entry(*a).or_insert(0);
            *slot = (*slot).max(e);
        }
        if !rhs.other.is_one() && self.other != rhs.other {
            let g = gcd(&self.other, &rhs.other);
            let prod = &self.other * &rhs.other.div_exact(&g).expect("gcd divides");
            out.other = monic(prod).1;
        }
        out
    }

    /// `self / part` as a polynomial; `part` must divide `self`.
    pub(crate) fn cofactor(&self, part: &Den) -> QTPoly {
        let mut p = if self.other == part.other {
            QTPoly::one()
        } else {
            self.other.div_exact(&part.other).expect("other part divides")
        };
        p = p.shift(self.mono.0 - part.mono.0, self.mono.1 - part.mono.1);
        for (a, &e) in &self.atoms {
            let diff = e - part.atoms.get(a).copied().unwrap_or(0);
            if diff > 0 {
                p = &p * &a.poly().pow(diff);
            }
        }
        p
    }

    /// Removes every factor shared with `num`, dividing it out of both.
    pub(crate) fn cancel(&mut self, num: &mut QTPoly) {
        if num.is_zero() {
            *self = Den::one();
            return;
        }
        let (i, j) = num.min_exponents().expect("nonzero");
        let (ci, cj) = (i.min(self.mono.0), j.min(self.mono.1));
        if ci > 0 || cj > 0 {
            *num = num.unshift(ci, cj);
            self.mono.0 -= ci;
            self.mono.1 -= cj;
        }
        for (a, e) in self.atoms.iter_mut() {
            let poly = a.poly();
            while *e > 0 {
                match num.div_exact(&poly) {
                    Some(q) => {
                        *num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.atoms.retain(|_, e| *e > 0);
        if !self.other.is_one() {
            let g = gcd(num, &self.other);
            if g.as_constant().is_none() {
                *num = num.div_exact(&g).expect("gcd divides");
                let rest = self.other.div_exact(&g).expect("gcd divides");
                let (c, m) = monic(rest);
                *num = num.scale(&(BigRational::one() / c));
                self.other = m;
            }
        }
    }

    /// Image under `q -> q^r, t -> t^r`, as `scalar * den`.
    pub(crate) fn dilate(&self, r: u32) -> (BigRational, Den) {
        let mut out = Den::one();
        out.mono = (self.mono.0 * r, self.mono.1 * r);
        for (a, &e) in &self.atoms {
            for b in a.dilate(r) {
                *out.atoms.entry(b).or_insert(0) += e;
            }
        }
        let mut scalar = BigRational::one();
        if !self.other.is_one() {
            let (c, d) = Den::factor(&self.other.dilate(r));
            scalar = c;
            out = out.mul(&d);
        }
        (scalar, out)
    }

    /// Image under `q <-> t`, as `scalar * den`.
    pub(crate) fn swap_qt(&self) -> (BigRational, Den) {
        let mut out = Den::one();
        out.mono = (self.mono.1, self.mono.0);
        let mut negate = false;
        for (a, &e) in &self.atoms {
            let (b, sign) = a.swap();
            negate ^= sign && e % 2 == 1;
            *out.atoms.entry(b).or_insert(0) += e;
        }
        let mut scalar = if negate { -BigRational::one() } else { BigRational::one() };
        if !self.other.is_one() {
            let (c, d) = Den::factor(&self.other.swap_qt());
            scalar *= c;
            out = out.mul(&d);
        }
        (scalar, out)
    }
}

/// Atoms of `c (1 +- q^x t^y)` (after stripping a monomial), if `p` has that shape.
fn binomial_atoms(p: &QTPoly) -> Option<Vec<Atom>> {
    if p.len() != 2 {
        return None;
    }
    let mut it = p.terms();
    let (e1, c1) = it.next()?;
    let (e2, c2) = it.next()?;
    let minus = if c2 == &-c1 {
        true
    } else if c2 == c1 {
        false
    } else {
        return None;
    };
    let dx = e2.0 as i64 - e1.0 as i64;
    let dy = e2.1 as i64 - e1.1 as i64;
    let g = dx.unsigned_abs().gcd(&dy.unsigned_abs()) as u32;
    let (a, b) = ((dx / g as i64) as u32, (dy / g as i64) as i32);
    // 1 - v^g = -prod_{d | g} Phi_d(v);  1 + v^g = prod_{d | 2g, d !| g} Phi_d(v)
    let ds: Vec<u32> = if minus {
        (1..=g).filter(|d| g % d == 0).collect()
    } else {
        (1..=2 * g).filter(|d| (2 * g) % d == 0 && g % d != 0).collect()
    };
    Some(ds.into_iter().map(|d| Atom::new(d, a, b)).collect())
}

/// Every atom whose degrees fit inside those of `p`.
fn candidates(p: &QTPoly) -> Vec<Atom> {
    let dq = p.degree_q().unwrap_or(0);
    let dt = p.degree_t().unwrap_or(0);
    let top = dq.max(dt);
    let mut out = Vec::new();
    if top == 0 {
        return out;
    }
    for d in 1..=2 * top * top + 2 {
        let phi = totient(d);
        if phi > top {
            continue;
        }
        for a in 0..=dq / phi {
            let bmax = (dt / phi) as i32;
            for b in -bmax..=bmax {
                if (a == 0 && b <= 0) || (b < 0 && a == 0) || a.gcd(&b.unsigned_abs()) != 1 {
                    continue;
                }
                out.push(Atom::new(d, a, b));
            }
        }
    }
    out
}
