use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QtError;

/// Exponent pair `(q, t)`.
pub type Exponent = (u32, u32);

/// A polynomial in `q` and `t` with exact rational coefficients.
///
/// Terms are kept in a map ordered by `(qexp, texp)`; zero coefficients are
/// never stored, so two polynomials are equal iff their term maps are.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl QTPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, qexp: u32, texp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qexp, texp), c);
        }
        Self { terms }
    }

    /// `q^a t^b` with unit coefficient.
    pub fn qt(qexp: u32, texp: u32) -> Self {
        Self::monomial(BigRational::one(), qexp, texp)
    }

    pub fn q() -> Self {
        Self::qt(1, 0)
    }

    pub fn t() -> Self {
        Self::qt(0, 1)
    }

    /// Builds a polynomial from `(qexp, texp, coeff)` triples, summing repeats.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigRational)>,
    {
        let mut p = Self::zero();
        for (a, b, c) in iter {
            p.add_term((a, b), c);
        }
        p
    }

    /// Builds a polynomial from integer counts keyed by exponent.
    pub fn from_counts<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, i64)>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, qexp: u32, texp: u32) -> BigRational {
        self.terms
            .get(&(qexp, texp))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Returns the constant if the polynomial has no `q` or `t` dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// True if the polynomial is a single term `c q^a t^b`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Leading term in lexicographic order with `q > t`.
    pub fn leading(&self) -> Option<(&Exponent, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// Largest `q^a t^b` dividing every term.
    pub fn min_exponents(&self) -> Option<Exponent> {
        let a = self.terms.keys().map(|e| e.0).min()?;
        let b = self.terms.keys().map(|e| e.1).min()?;
        Some((a, b))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ((e.0 + a, e.1 + b), v.clone()))
                .collect(),
        }
    }

    /// Divides by `q^a t^b`; every term must be divisible.
    pub fn unshift(&self, a: u32, b: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ((e.0 - a, e.1 - b), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `q -> q^r`, `t -> t^r`.
    pub fn dilate(&self, r: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ((e.0 * r, e.1 * r), v.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ((e.1, e.0), v.clone()))
                .collect(),
        }
    }

    /// Value at `q = t = 1`.
    pub fn at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Sets `t = 1`, keeping the `q` dependence.
    pub fn at_t_one(&self) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.add_term((e.0, 0), c.clone());
        }
        p
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True if every coefficient is a non-negative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &QTPoly) -> Option<QTPoly> {
        let (lead_e, lead_c) = divisor.leading()?;
        let (lead_e, lead_c) = (*lead_e, lead_c.clone());
        if divisor.is_monomial() {
            let mut out = BTreeMap::new();
            for (e, c) in &self.terms {
                if e.0 < lead_e.0 || e.1 < lead_e.1 {
                    return None;
                }
                out.insert((e.0 - lead_e.0, e.1 - lead_e.1), c / &lead_c);
            }
            return Some(QTPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot = QTPoly::zero();
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if e.0 < lead_e.0 || e.1 < lead_e.1 {
                return None;
            }
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1);
            let qc = c / &lead_c;
            for (de, dc) in &divisor.terms {
                rem.add_term((de.0 + qe.0, de.1 + qe.1), -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Multiplies by the lcm of denominators and returns the integer form.
    pub fn clear_denominators(&self) -> (BigInt, QTPoly) {
        let l = self.denominator_lcm();
        let lr = BigRational::from_integer(l.clone());
        (l, self.scale(&lr))
    }

    pub(crate) fn from_map(terms: BTreeMap<Exponent, BigRational>) -> Self {
        let mut terms = terms;
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }
}

impl From<i64> for QTPoly {
    fn from(c: i64) -> Self {
        QTPoly::from_int(c)
    }
}

impl From<BigRational> for QTPoly {
    fn from(c: BigRational) -> Self {
        QTPoly::constant(c)
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, rhs: &QTPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QTPoly> for QTPoly {
    fn sub_assign(&mut self, rhs: &QTPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        if self.is_zero() || rhs.is_zero() {
            return QTPoly::zero();
        }
        let mut acc: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = (ea.0 + eb.0, ea.1 + eb.1);
                let v = ca * cb;
                match acc.get_mut(&e) {
                    Some(x) => *x += v,
                    None => {
                        acc.insert(e, v);
                    }
                }
            }
        }
        QTPoly::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: &QTPoly) -> QTPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<QTPoly> for &QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_var(name: char, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

/// Canonical text: terms ascending in `(qexp, texp)`, e.g. `1 + q + 2*q*t^2`.
impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let vars: Vec<String> = [fmt_var('q', e.0), fmt_var('t', e.1)]
                .into_iter()
                .flatten()
                .collect();
            let mut parts = Vec::new();
            if !abs.is_one() || vars.is_empty() {
                parts.push(fmt_rational(&abs));
            }
            parts.extend(vars);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPoly({self})")
    }
}

fn parse_term(src: &str) -> Result<(Exponent, BigRational), QtError> {
    let bad = || QtError::Parse(src.to_string());
    let mut coeff = BigRational::one();
    let mut e = (0u32, 0u32);
    for factor in src.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(bad());
        }
        let first = factor.chars().next().ok_or_else(bad)?;
        if first == 'q' || first == 't' {
            let exp = match factor[1..].strip_prefix('^') {
                Some(rest) => rest.parse::<u32>().map_err(|_| bad())?,
                None if factor.len() == 1 => 1,
                None => return Err(bad()),
            };
            if first == 'q' {
                e.0 += exp;
            } else {
                e.1 += exp;
            }
        } else {
            let c = match factor.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.parse().map_err(|_| bad())?;
                    let d: BigInt = d.parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(factor.parse().map_err(|_| bad())?),
            };
            coeff *= c;
        }
    }
    Ok((e, coeff))
}

impl FromStr for QTPoly {
    type Err = QtError;

    /// Parses the canonical text form (and any sum of `c*q^a*t^b` terms).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(QtError::Parse(s.to_string()));
        }
        let mut p = QTPoly::zero();
        let mut sign = BigRational::one();
        let mut current = String::new();
        let mut chars = s.chars().peekable();
        let mut at_start = true;
        while let Some(ch) = chars.next() {
            match ch {
                '+' | '-' if !current.trim().is_empty() || at_start => {
                    if !current.trim().is_empty() {
                        let (e, c) = parse_term(current.trim())?;
                        p.add_term(e, c * &sign);
                        current.clear();
                    }
                    sign = if ch == '-' {
                        -BigRational::one()
                    } else {
                        BigRational::one()
                    };
                    at_start = false;
                }
                ' ' => {}
                _ => {
                    current.push(ch);
                    at_start = false;
                }
            }
        }
        if current.trim().is_empty() {
            return Err(QtError::Parse(s.to_string()));
        }
        let (e, c) = parse_term(current.trim())?;
        p.add_term(e, c * &sign);
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    #[test]
    fn renders_canonically() {
        let x = &(&QTPoly::one() + &QTPoly::q()) + &QTPoly::qt(1, 2).scale(&BigRational::from_integer(2.into()));
        assert_eq!(x.to_string(), "1 + q + 2*q*t^2");
        assert_eq!(QTPoly::zero().to_string(), "0");
        assert_eq!((-QTPoly::q()).to_string(), "-q");
        assert_eq!(p("1 - q").to_string(), "1 - q");
    }

    #[test]
    fn parses_rational_coefficients() {
        let x = p("-3/2*q^2*t + 1/3 - t^4");
        assert_eq!(x.coeff(2, 1), BigRational::new((-3).into(), 2.into()));
        assert_eq!(x.coeff(0, 0), BigRational::new(1.into(), 3.into()));
        assert_eq!(x.coeff(0, 4), BigRational::from_integer((-1).into()));
        assert_eq!(p(&x.to_string()), x);
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<QTPoly>().is_err());
        assert!("q^x".parse::<QTPoly>().is_err());
        assert!("1 +".parse::<QTPoly>().is_err());
        assert!("z".parse::<QTPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("1 - q^2");
        let b = p("1 - q");
        assert_eq!(a.div_exact(&b), Some(p("1 + q")));
        assert_eq!(b.div_exact(&a), None);
        let c = &p("q - t") * &p("1 + q*t + t^3");
        assert_eq!(c.div_exact(&p("q - t")), Some(p("1 + q*t + t^3")));
        assert_eq!(p("q^2*t").div_exact(&p("q*t")), Some(p("q")));
        assert_eq!(p("q").div_exact(&p("t")), None);
    }

    #[test]
    fn no_zero_terms_survive() {
        let a = p("q + t");
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z, QTPoly::zero());
    }
}
