//! Operator-side values of the identities, memoized across checks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::paths::GenPoly;
use crate::qt::{exact_poly_quotient, q_analogue, t_analogue, QTPoly, QTRational, QtError};
use crate::symfunc::{
    convert, delta, delta_prime, e_nk, nabla, omega, theta_e, Basis, SymError, SymFunc,
};

type Slot = Arc<OnceLock<Result<SymFunc, SymError>>>;

fn memo() -> &'static Mutex<HashMap<String, Slot>> {
    static MEMO: OnceLock<Mutex<HashMap<String, Slot>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Computes `f` once per key, even under concurrent callers.
fn memoized(key: String, f: impl FnOnce() -> Result<SymFunc, SymError>) -> Result<SymFunc, SymError> {
    let slot = memo().lock().expect("poisoned").entry(key).or_default().clone();
    slot.get_or_init(f).clone()
}

/// Drops every memoized value.
pub fn clear_memo() {
    memo().lock().expect("poisoned").clear();
}

/// `e_j`, or `None` for negative `j` (where `e_j = 0`).
fn e(j: i64) -> Option<SymFunc> {
    u32::try_from(j).ok().map(SymFunc::e)
}

pub fn nabla_en(n: u32) -> Result<SymFunc, SymError> {
    memoized(format!("nabla e {n}"), || nabla(&SymFunc::e(n)))
}

/// `omega(p_n)`.
pub fn omega_pn(n: u32) -> Result<SymFunc, SymError> {
    memoized(format!("omega p {n}"), || omega(&SymFunc::p(n)))
}

pub fn nabla_omega_pn(n: u32) -> Result<SymFunc, SymError> {
    memoized(format!("nabla omega p {n}"), || nabla(&omega_pn(n)?))
}

/// `Theta_{e_k} nabla omega(p_j)`.
pub fn theta_nabla_pn(k: u32, j: u32) -> Result<SymFunc, SymError> {
    memoized(format!("theta {k} nabla omega p {j}"), || theta_e(k, &nabla_omega_pn(j)?))
}

/// `Theta_{e_k} nabla e_j`.
pub fn theta_nabla_en(k: u32, j: u32) -> Result<SymFunc, SymError> {
    memoized(format!("theta {k} nabla e {j}"), || theta_e(k, &nabla_en(j)?))
}

/// `Delta'_{e_{n-k-1}} e_n`; zero when `k >= n`.
pub fn delta_prime_en(n: u32, k: u32) -> Result<SymFunc, SymError> {
    memoized(format!("delta' e {} e {n}", n as i64 - k as i64 - 1), || {
        match e(n as i64 - k as i64 - 1) {
            Some(g) => delta_prime(&g, &SymFunc::e(n)),
            None => Ok(SymFunc::zero(Basis::Elementary, n)),
        }
    })
}

/// `Delta_{e_{n-k}} omega(p_n)`.
pub fn delta_omega_pn(n: u32, k: u32) -> Result<SymFunc, SymError> {
    memoized(format!("delta e {} omega p {n}", n as i64 - k as i64), || {
        match e(n as i64 - k as i64) {
            Some(g) => delta(&g, &omega_pn(n)?),
            None => Ok(SymFunc::zero(Basis::Power, n)),
        }
    })
}

pub fn enk(n: u32, k: u32) -> Result<SymFunc, SymError> {
    memoized(format!("E {n} {k}"), || e_nk(n, k))
}

/// `nabla E_{j,r}`.
pub fn nabla_enk(j: u32, r: u32) -> Result<SymFunc, SymError> {
    memoized(format!("nabla E {j} {r}"), || nabla(&enk(j, r)?))
}

/// `Theta_{e_k} nabla E_{j,r}`.
pub fn theta_nabla_enk(k: u32, j: u32, r: u32) -> Result<SymFunc, SymError> {
    memoized(format!("theta {k} nabla E {j} {r}"), || theta_e(k, &nabla_enk(j, r)?))
}

/// `Delta_{h_m} f`; the identity for `m = 0`.
pub fn delta_h(m: u32, f: &SymFunc) -> Result<SymFunc, SymError> {
    if m == 0 || f.is_zero() {
        return Ok(f.clone());
    }
    delta(&SymFunc::h(m), f)
}

/// `Delta_{h_m}` of a memoized value, itself memoized under `key`.
pub fn delta_h_memo(
    m: u32,
    key: &str,
    base: &dyn Fn() -> Result<SymFunc, SymError>,
) -> Result<SymFunc, SymError> {
    if m == 0 {
        return base();
    }
    memoized(format!("delta h {m} of {key}"), || delta_h(m, &base()?))
}

/// Error from evaluating a symmetric-function side.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SideError {
    #[error(transparent)]
    Sym(#[from] SymError),
    /// A ratio prefactor left a non-polynomial coefficient.
    #[error("coefficient of m{content:?} is not polynomial: {detail}")]
    NotPolynomial { content: Vec<u32>, detail: String },
}

impl From<QtError> for SideError {
    fn from(e: QtError) -> Self {
        SideError::Sym(SymError::from(e))
    }
}

/// A `q`- or `t`-integer, as used in the ratio prefactors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracket {
    Q(u32),
    T(u32),
}

impl Bracket {
    pub fn poly(self) -> QTPoly {
        match self {
            Bracket::Q(n) => q_analogue(n),
            Bracket::T(n) => t_analogue(n),
        }
    }
}

/// `num/den * f` rendered as a generating polynomial, each monomial
/// coefficient certified polynomial by exact division.
pub fn ratio_genpoly(num: Bracket, den: Bracket, f: &SymFunc) -> Result<GenPoly, SideError> {
    let m = convert(f, Basis::Monomial)?;
    let (a, b) = (QTRational::from_poly(num.poly()), QTRational::from_poly(den.poly()));
    let mut out = GenPoly::zero();
    for (lambda, c) in m.terms() {
        let scaled = c * &a;
        let p = exact_poly_quotient(&scaled, &b).map_err(|e| SideError::NotPolynomial {
            content: lambda.parts().to_vec(),
            detail: e.to_string(),
        })?;
        out.add_term(lambda.clone(), p);
    }
    Ok(out)
}

/// The monomial expansion of a side whose coefficients must be polynomials.
pub fn genpoly(f: &SymFunc) -> Result<GenPoly, SideError> {
    let m = convert(f, Basis::Monomial)?;
    let mut out = GenPoly::zero();
    for (lambda, c) in m.terms() {
        let p = c.as_exact_poly().map_err(|e| SideError::NotPolynomial {
            content: lambda.parts().to_vec(),
            detail: e.to_string(),
        })?;
        out.add_term(lambda.clone(), p);
    }
    Ok(out)
}
