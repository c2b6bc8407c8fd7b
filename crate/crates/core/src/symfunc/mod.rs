//! Homogeneous symmetric functions over `Q(q,t)`: the classical bases, the
//! modified Macdonald basis, plethystic substitutions and the diagonal
//! operators.

mod basis;
pub mod cache;
mod enk;
mod macdonald;
mod operators;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::partition::{partitions, Partition};
use crate::paths::GenPoly;
use crate::qt::{QTPoly, QTRational, QtError};

pub use enk::e_nk;
pub use macdonald::{constants, from_macdonald, macdonald, to_macdonald, MacdonaldConstants};
pub use operators::{
    apply_diagonal, delta, delta_prime, evaluate_at, nabla, pi, pi_inverse, theta, theta_e,
    DiagonalOp,
};

pub const DEFAULT_MAX_DEGREE: u32 = 8;

static MAX_DEGREE: AtomicU32 = AtomicU32::new(DEFAULT_MAX_DEGREE);

pub fn max_degree() -> u32 {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_degree(n: u32) {
    MAX_DEGREE.store(n, Ordering::Relaxed);
}

fn check_degree(n: u32) -> Result<(), SymError> {
    let max = max_degree();
    if n > max {
        return Err(SymError::DegreeTooLarge { degree: n, max });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeTooLarge { degree: u32, max: u32 },
    #[error("degrees {0} and {1} differ")]
    DegreeMismatch(u32, u32),
    #[error("partition {partition} does not have size {degree}")]
    WrongSize { partition: Partition, degree: u32 },
    #[error("unsupported alphabet transform: {0}")]
    UnsupportedTransform(String),
    #[error("singular transition matrix")]
    SingularMatrix,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error(transparent)]
    Arithmetic(#[from] QtError),
    #[error("cannot parse symmetric function: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Elementary,
    Homogeneous,
    Power,
    Schur,
    Macdonald,
}

impl Basis {
    pub const ALL: [Basis; 6] = [
        Basis::Monomial,
        Basis::Elementary,
        Basis::Homogeneous,
        Basis::Power,
        Basis::Schur,
        Basis::Macdonald,
    ];

    /// Prefix used in the text form, e.g. `s[2,1]`.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::Power => "p",
            Basis::Schur => "s",
            Basis::Macdonald => "H",
        }
    }

    fn from_symbol(s: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.symbol() == s)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Basis::Monomial => "monomial",
            Basis::Elementary => "elementary",
            Basis::Homogeneous => "homogeneous",
            Basis::Power => "power",
            Basis::Schur => "schur",
            Basis::Macdonald => "macdonald",
        };
        f.write_str(name)
    }
}

impl FromStr for Basis {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Basis::ALL
            .into_iter()
            .find(|b| b.to_string() == s || b.symbol() == s)
            .ok_or_else(|| SymError::Parse(format!("unknown basis {s:?}")))
    }
}

/// A homogeneous symmetric function, stored as its expansion in one basis.
/// Equality is structural; use [`SymFunc::equals`] to compare across bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: u32,
    coeffs: BTreeMap<Partition, QTRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        Self { basis, degree, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::basis_element(Basis::Monomial, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        Self { basis, degree, coeffs: BTreeMap::from([(lambda, QTRational::one())]) }
    }

    pub fn from_terms(
        basis: Basis,
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, QTRational)>,
    ) -> Result<Self, SymError> {
        let mut out = Self::zero(basis, degree);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(SymError::WrongSize { partition: p, degree });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn from_vec(basis: Basis, degree: u32, parts: &[Partition], v: Vec<QTRational>) -> Self {
        let coeffs = parts
            .iter()
            .cloned()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { basis, degree, coeffs }
    }

    fn to_vec(&self, parts: &[Partition]) -> Vec<QTRational> {
        parts.iter().map(|p| self.coeff(p)).collect()
    }

    fn add_term(&mut self, p: Partition, c: QTRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(p.clone()).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn e(n: u32) -> Self {
        Self::basis_element(Basis::Elementary, single(n))
    }

    pub fn h(n: u32) -> Self {
        Self::basis_element(Basis::Homogeneous, single(n))
    }

    pub fn p(n: u32) -> Self {
        Self::basis_element(Basis::Power, single(n))
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_element(Basis::Monomial, lambda)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> QTRational {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &QTRational) -> Self {
        let coeffs = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)).collect()
        };
        Self { basis: self.basis, degree: self.degree, coeffs }
    }

    pub fn scale_poly(&self, c: &QTPoly) -> Self {
        self.scale(&QTRational::from_poly(c.clone()))
    }

    /// `self + other`, in the basis of `self`.
    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc, SymError> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return convert(other, self.basis);
        }
        if self.degree != other.degree {
            return Err(SymError::DegreeMismatch(self.degree, other.degree));
        }
        let other = convert(other, self.basis)?;
        let mut out = self.clone();
        for (p, c) in other.coeffs {
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SymFunc) -> Result<SymFunc, SymError> {
        self.try_add(&-other)
    }

    /// Equality as symmetric functions, whatever the bases.
    pub fn equals(&self, other: &SymFunc) -> Result<bool, SymError> {
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() == other.is_zero());
        }
        if self.degree != other.degree {
            return Ok(false);
        }
        Ok(self.try_sub(other)?.is_zero())
    }

    pub fn swap_qt(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(p, c)| (p.clone(), c.swap_qt())).collect();
        Self { basis: self.basis, degree: self.degree, coeffs }
    }

    /// The monomial expansion as a generating polynomial; every coefficient
    /// must be a polynomial.
    pub fn to_genpoly(&self) -> Result<GenPoly, SymError> {
        let m = convert(self, Basis::Monomial)?;
        let mut out = GenPoly::zero();
        for (p, c) in m.coeffs {
            out.add_term(p, c.as_exact_poly()?);
        }
        Ok(out)
    }

    pub fn from_genpoly(g: &GenPoly, degree: u32) -> Result<SymFunc, SymError> {
        SymFunc::from_terms(
            Basis::Monomial,
            degree,
            g.terms().iter().map(|(p, c)| (p.clone(), QTRational::from_poly(c.clone()))),
        )
    }

    pub fn to_json(&self) -> String {
        let terms = self
            .ordered_terms()
            .map(|(p, c)| JsonTerm { partition: p.parts().to_vec(), coeff: c.to_string() })
            .collect();
        serde_json::to_string(&JsonSymFunc { basis: self.basis, degree: self.degree, terms })
            .expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<SymFunc, SymError> {
        let j: JsonSymFunc = serde_json::from_str(s).map_err(|e| SymError::Parse(e.to_string()))?;
        let mut terms = Vec::new();
        for t in j.terms {
            let p = Partition::new(t.partition).map_err(|e| SymError::Parse(e.to_string()))?;
            let c: QTRational = t.coeff.parse().map_err(|_| SymError::Parse(t.coeff.clone()))?;
            terms.push((p, c));
        }
        SymFunc::from_terms(j.basis, j.degree, terms)
    }

    /// Terms in decreasing lexicographic order of partitions.
    fn ordered_terms(&self) -> impl Iterator<Item = (&Partition, &QTRational)> {
        self.coeffs.iter().rev()
    }
}

fn single(n: u32) -> Partition {
    if n == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![n]).expect("single part")
    }
}

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        let coeffs = self.coeffs.iter().map(|(p, c)| (p.clone(), -c)).collect();
        SymFunc { basis: self.basis, degree: self.degree, coeffs }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonSymFunc {
    basis: Basis,
    degree: u32,
    terms: Vec<JsonTerm>,
}

/// Canonical text: `s[2] + (q + t)*s[1,1]`, partitions in decreasing order.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        let mut first = true;
        for (p, c) in self.ordered_terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{sym}{p}")?;
            } else {
                write!(f, "({c})*{sym}{p}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SymFunc {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymError::Parse(s.to_string());
        let s = s.trim();
        // split on top-level '+'
        let mut pieces = Vec::new();
        let (mut depth, mut start) = (0i32, 0usize);
        for (i, ch) in s.char_indices() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                '+' if depth == 0 => {
                    pieces.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&s[start..]);
        let mut terms: Vec<(Basis, Partition, QTRational)> = Vec::new();
        for piece in pieces {
            let piece = piece.trim();
            if piece == "0" {
                continue;
            }
            let (coeff, elem) = match piece.rfind(")*") {
                Some(i) if piece.starts_with('(') => {
                    (piece[1..i].parse::<QTRational>().map_err(|_| bad())?, &piece[i + 2..])
                }
                _ => match piece.strip_prefix('-') {
                    Some(rest) => (QTRational::from_int(-1), rest.trim()),
                    None => (QTRational::one(), piece),
                },
            };
            let open = elem.find('[').ok_or_else(bad)?;
            let basis = Basis::from_symbol(&elem[..open]).ok_or_else(bad)?;
            let p: Partition = elem[open..].parse().map_err(|_| bad())?;
            terms.push((basis, p, coeff));
        }
        let Some((basis, p, _)) = terms.first() else {
            return Ok(SymFunc::zero(Basis::Monomial, 0));
        };
        let (basis, degree) = (*basis, p.size());
        if terms.iter().any(|(b, _, _)| *b != basis) {
            return Err(bad());
        }
        SymFunc::from_terms(basis, degree, terms.into_iter().map(|(_, p, c)| (p, c)))
    }
}

/// Multiplies a coefficient vector (indexed like `rows`) by a rational matrix.
fn apply_matrix(v: &[QTRational], rows: &[Vec<BigRational>]) -> Vec<QTRational> {
    let n = rows.first().map_or(0, |r| r.len());
    (0..n)
        .map(|j| {
            let terms: Vec<QTRational> = v
                .iter()
                .zip(rows)
                .filter(|(c, row)| !c.is_zero() && !row[j].is_zero())
                .map(|(c, row)| c.scale(&row[j]))
                .collect();
            QTRational::sum(&terms)
        })
        .collect()
}

/// Rewrites `f` in `target`.
pub fn convert(f: &SymFunc, target: Basis) -> Result<SymFunc, SymError> {
    if f.basis == target {
        return Ok(f.clone());
    }
    check_degree(f.degree)?;
    if f.basis == Basis::Macdonald {
        return convert(&from_macdonald(f)?, target);
    }
    if target == Basis::Macdonald {
        return to_macdonald(f);
    }
    if f.is_zero() {
        return Ok(SymFunc::zero(target, f.degree));
    }
    let n = f.degree;
    let src = basis::transition(f.basis, n);
    let mono = apply_matrix(&f.to_vec(&src.parts), &src.to_m);
    if target == Basis::Monomial {
        return Ok(SymFunc::from_vec(target, n, &src.parts, mono));
    }
    let dst = basis::transition(target, n);
    let out = apply_matrix(&mono, &dst.from_m);
    Ok(SymFunc::from_vec(target, n, &dst.parts, out))
}

/// Product, computed in the power basis and returned in the basis of `f`.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc, SymError> {
    let degree = f.degree + g.degree;
    check_degree(degree)?;
    let a = convert(f, Basis::Power)?;
    let b = convert(g, Basis::Power)?;
    let mut grouped: BTreeMap<Partition, Vec<QTRational>> = BTreeMap::new();
    for (l, x) in &a.coeffs {
        for (m, y) in &b.coeffs {
            grouped.entry(l.union(m)).or_default().push(x * y);
        }
    }
    let out = SymFunc::from_terms(
        Basis::Power,
        degree,
        grouped.into_iter().map(|(p, v)| (p, QTRational::sum(&v))),
    )?;
    convert(&out, f.basis)
}

/// Alphabet substitutions `X -> X * g(q,t)`, acting by `p_r -> g(q^r,t^r) p_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// `X * g` for an arbitrary rational function `g`.
    Scale(QTRational),
    /// `X (1 - q^j)/(1 - q)`.
    QInteger(u32),
    /// `X / ((1-q)(1-t))`.
    OverM,
}

impl Transform {
    pub fn multiplier(&self) -> QTRational {
        match self {
            Transform::Scale(g) => g.clone(),
            Transform::QInteger(j) => QTRational::from_poly(crate::qt::q_analogue(*j)),
            Transform::OverM => {
                QTRational::recip_product(&[&QTPoly::one() - &QTPoly::q(), &QTPoly::one() - &QTPoly::t()])
                    .expect("M is nonzero")
            }
        }
    }
}

impl FromStr for Transform {
    type Err = SymError;
    /// `X/M`, `X*[j]` (the `q`-integer) or `X*(<rational function>)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || SymError::UnsupportedTransform(s.clone());
        if s == "X/M" {
            return Ok(Transform::OverM);
        }
        if s == "X" {
            return Ok(Transform::Scale(QTRational::one()));
        }
        let rest = s.strip_prefix("X*").ok_or_else(bad)?;
        if let Some(j) = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            return Ok(Transform::QInteger(j.parse().map_err(|_| bad())?));
        }
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        Ok(Transform::Scale(inner.parse().map_err(|_| bad())?))
    }
}

/// `(1-q)(1-t)`.
pub fn m_poly() -> QTPoly {
    let one = QTPoly::one();
    &(&one - &QTPoly::q()) * &(&one - &QTPoly::t())
}

/// `f[X g]`, returned in the basis of `f`.
pub fn plethysm_scaled_alphabet(f: &SymFunc, tr: &Transform) -> Result<SymFunc, SymError> {
    let g = tr.multiplier();
    if g.is_zero() {
        return Err(SymError::UnsupportedTransform("X*0".into()));
    }
    let pf = convert(f, Basis::Power)?;
    let mut dil: BTreeMap<u32, QTRational> = BTreeMap::new();
    let mut out = SymFunc::zero(Basis::Power, f.degree);
    for (lambda, c) in &pf.coeffs {
        let mut factor = c.clone();
        for &r in lambda.parts() {
            let gr = dil.entry(r).or_insert_with(|| g.dilate(r));
            factor = &factor * &*gr;
        }
        out.add_term(lambda.clone(), factor);
    }
    convert(&out, f.basis)
}

/// `omega p_lambda = (-1)^{|lambda| - l(lambda)} p_lambda`.
pub fn omega(f: &SymFunc) -> Result<SymFunc, SymError> {
    let pf = convert(f, Basis::Power)?;
    let coeffs = pf
        .coeffs
        .into_iter()
        .map(|(l, c)| {
            let odd = (l.size() as usize - l.len()) % 2 == 1;
            (l, if odd { -c } else { c })
        })
        .collect();
    convert(&SymFunc { basis: Basis::Power, degree: f.degree, coeffs }, f.basis)
}

/// Every partition of `n`, in the canonical (decreasing) order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions(n)
}

/// Numeric value of a rational coefficient at `q = t = 1`, when defined.
pub fn at_one(c: &QTRational) -> Option<BigRational> {
    let d = c.denom().at_one();
    if d.is_zero() {
        return None;
    }
    Some(c.numer().at_one() / d)
}

/// Whether every monomial coefficient is a polynomial with non-negative
/// integer coefficients.
pub fn is_monomial_positive(f: &SymFunc) -> Result<bool, SymError> {
    let m = convert(f, Basis::Monomial)?;
    Ok(m.coeffs.values().all(|c| {
        c.to_poly().is_some_and(|p| p.terms().all(|(_, v)| v.is_integer() && !v.is_negative()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sf(s: &str) -> SymFunc {
        s.parse().unwrap()
    }

    fn brute_kostka(shape: &[u32], content: &[u32]) -> u64 {
        // fill cells row by row with weakly increasing rows, strictly increasing columns
        fn rec(cells: &[(usize, usize)], i: usize, grid: &mut Vec<Vec<u32>>, left: &mut [u32]) -> u64 {
            if i == cells.len() {
                return 1;
            }
            let (r, c) = cells[i];
            let mut total = 0;
            for v in 0..left.len() as u32 {
                if left[v as usize] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                left[v as usize] -= 1;
                grid[r][c] = v;
                total += rec(cells, i + 1, grid, left);
                left[v as usize] += 1;
            }
            total
        }
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c)))
            .collect();
        let mut grid: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
        rec(&cells, 0, &mut grid, &mut content.to_vec())
    }

    #[test]
    fn classical_expansions() {
        assert_eq!(convert(&SymFunc::e(2), Basis::Monomial).unwrap(), sf("m[1,1]"));
        assert_eq!(convert(&SymFunc::h(2), Basis::Monomial).unwrap(), sf("m[2] + m[1,1]"));
        assert_eq!(
            convert(&SymFunc::s(p(&[2, 1])), Basis::Monomial).unwrap(),
            sf("m[2,1] + (2)*m[1,1,1]")
        );
    }

    #[test]
    fn schur_matches_tableau_counts() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                let m = convert(&SymFunc::s(lambda.clone()), Basis::Monomial).unwrap();
                for mu in partitions(n) {
                    let k = brute_kostka(lambda.parts(), mu.parts()) as i64;
                    assert_eq!(m.coeff(&mu), QTRational::from_int(k), "{lambda} {mu}");
                }
            }
        }
    }

    #[test]
    fn round_trips_between_bases() {
        for n in 0..=6 {
            for lambda in partitions(n) {
                for b in Basis::ALL.into_iter().filter(|&b| b != Basis::Macdonald) {
                    let f = SymFunc::basis_element(b, lambda.clone());
                    for target in Basis::ALL.into_iter().filter(|&b| b != Basis::Macdonald) {
                        let back = convert(&convert(&f, target).unwrap(), b).unwrap();
                        assert_eq!(back, f, "{b} -> {target} on {lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn products() {
        let e1 = SymFunc::e(1);
        assert_eq!(
            convert(&multiply(&e1, &e1).unwrap(), Basis::Monomial).unwrap(),
            sf("m[2] + (2)*m[1,1]")
        );
        let f = sf("(q)*s[2,1] + s[3]");
        assert!(multiply(&f, &SymFunc::one()).unwrap().equals(&f).unwrap());
        let e21 = multiply(&SymFunc::e(2), &e1).unwrap();
        assert!(e21.equals(&SymFunc::basis_element(Basis::Elementary, p(&[2, 1]))).unwrap());
        // brute force: e_2 e_1 has x^mu coefficient = 0-1 matrices
        let m = convert(&e21, Basis::Monomial).unwrap();
        assert_eq!(m, sf("m[2,1] + (3)*m[1,1,1]"));
    }

    #[test]
    fn plethystic_scaling() {
        let e2 = SymFunc::e(2);
        let one_plus_q = Transform::Scale(QTRational::from_poly("1 + q".parse().unwrap()));
        let got = convert(&plethysm_scaled_alphabet(&e2, &one_plus_q).unwrap(), Basis::Monomial).unwrap();
        assert_eq!(got, sf("(q)*m[2] + (1 + 2*q + q^2)*m[1,1]"));
        assert_eq!(plethysm_scaled_alphabet(&e2, &Transform::Scale(QTRational::one())).unwrap(), e2);
        let p2 = plethysm_scaled_alphabet(&SymFunc::p(2), &Transform::OverM).unwrap();
        let den: QTPoly = "1 - q^2 - t^2 + q^2*t^2".parse().unwrap();
        assert_eq!(p2.coeff(&p(&[2])), QTRational::new(QTPoly::one(), den).unwrap());
        assert_eq!(plethysm_scaled_alphabet(&e2, &Transform::QInteger(2)).unwrap(),
            plethysm_scaled_alphabet(&e2, &one_plus_q).unwrap());
        assert!("X*[x]".parse::<Transform>().is_err());
        assert_eq!("X/M".parse::<Transform>().unwrap(), Transform::OverM);
    }

    #[test]
    fn omega_rules() {
        for n in 1..=5 {
            assert!(omega(&SymFunc::e(n)).unwrap().equals(&SymFunc::h(n)).unwrap());
        }
        let f = sf("(q + t)*s[2,1] + (3)*s[1,1,1]");
        assert_eq!(omega(&omega(&f).unwrap()).unwrap(), f);
        assert_eq!(convert(&omega(&SymFunc::p(2)).unwrap(), Basis::Monomial).unwrap(), sf("-m[2]"));
    }

    #[test]
    fn text_and_json_round_trip() {
        let f = sf("s[2] + (q + t)*s[1,1]");
        assert_eq!(f.to_string().parse::<SymFunc>().unwrap(), f);
        assert_eq!(sf("(3)*h[1,1] + h[2]").to_string(), "h[2] + (3)*h[1,1]");
        assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
        assert_eq!(sf("0").to_string(), "0");
        assert!("s[2] + m[1,1]".parse::<SymFunc>().is_err());
        assert!("s[2] + s[1]".parse::<SymFunc>().is_err());
    }

    #[test]
    fn degree_guard() {
        let r = convert(&SymFunc::e(DEFAULT_MAX_DEGREE + 1), Basis::Monomial);
        assert!(matches!(r, Err(SymError::DegreeTooLarge { .. })));
        let r = multiply(&SymFunc::e(DEFAULT_MAX_DEGREE), &SymFunc::e(1));
        assert!(matches!(r, Err(SymError::DegreeTooLarge { .. })));
    }
}
