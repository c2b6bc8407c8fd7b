//! Operators diagonal on the Macdonald basis, plethystic evaluation at
//! polynomial alphabets, and the Theta operators.

use std::collections::BTreeMap;

use super::macdonald::constants;
use super::{check_degree, convert, multiply, plethysm_scaled_alphabet, Basis, SymError, SymFunc, Transform};
use crate::partition::Partition;
use crate::qt::{QTPoly, QTRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagonalOp {
    /// Eigenvalue `T_mu`.
    Nabla,
    /// Eigenvalue `f[B_mu]`.
    Delta(SymFunc),
    /// Eigenvalue `f[B_mu - 1]`.
    DeltaPrime(SymFunc),
    /// Eigenvalue `Pi_mu`.
    Pi,
    /// Eigenvalue `1 / Pi_mu`.
    PiInverse,
}

/// `f[A]` for a polynomial alphabet `A`, using `p_r[A] = A(q^r, t^r)`.
pub fn evaluate_at(f: &SymFunc, alphabet: &QTPoly) -> Result<QTRational, SymError> {
    let pf = convert(f, Basis::Power)?;
    let mut powers: BTreeMap<u32, QTPoly> = BTreeMap::new();
    let mut terms = Vec::new();
    for (lambda, c) in pf.terms() {
        let mut v = QTPoly::one();
        for &r in lambda.parts() {
            let pr = powers.entry(r).or_insert_with(|| alphabet.dilate(r));
            v = &v * &*pr;
        }
        terms.push(c.mul_poly(&v));
    }
    let total = QTRational::sum(&terms);
    Ok(total)
}

impl DiagonalOp {
    pub fn eigenvalue(&self, mu: &Partition) -> Result<QTRational, SymError> {
        let c = constants(mu);
        Ok(match self {
            DiagonalOp::Nabla => QTRational::from_poly(c.t),
            DiagonalOp::Delta(f) => evaluate_at(f, &c.b)?,
            DiagonalOp::DeltaPrime(f) => evaluate_at(f, &(&c.b - &QTPoly::one()))?,
            DiagonalOp::Pi => QTRational::from_poly(c.pi),
            DiagonalOp::PiInverse => super::macdonald::reciprocals(mu).1.clone(),
        })
    }
}

/// Applies `op` and returns the result in the basis of `f`.
pub fn apply_diagonal(op: &DiagonalOp, f: &SymFunc) -> Result<SymFunc, SymError> {
    let h = scale_macdonald(op, &super::to_macdonald(f)?)?;
    convert(&h, f.basis())
}

fn scale_macdonald(op: &DiagonalOp, h: &SymFunc) -> Result<SymFunc, SymError> {
    let mut terms = Vec::with_capacity(h.terms().len());
    for (mu, c) in h.terms() {
        terms.push((mu.clone(), c * &op.eigenvalue(mu)?));
    }
    SymFunc::from_terms(Basis::Macdonald, h.degree(), terms)
}

pub fn nabla(f: &SymFunc) -> Result<SymFunc, SymError> {
    apply_diagonal(&DiagonalOp::Nabla, f)
}

pub fn delta(g: &SymFunc, f: &SymFunc) -> Result<SymFunc, SymError> {
    apply_diagonal(&DiagonalOp::Delta(g.clone()), f)
}

pub fn delta_prime(g: &SymFunc, f: &SymFunc) -> Result<SymFunc, SymError> {
    apply_diagonal(&DiagonalOp::DeltaPrime(g.clone()), f)
}

pub fn pi(f: &SymFunc) -> Result<SymFunc, SymError> {
    apply_diagonal(&DiagonalOp::Pi, f)
}

pub fn pi_inverse(f: &SymFunc) -> Result<SymFunc, SymError> {
    apply_diagonal(&DiagonalOp::PiInverse, f)
}

/// `Theta_g F = Pi g[X/M] Pi^{-1} F`, returned in the basis of `f`.
pub fn theta(g: &SymFunc, f: &SymFunc) -> Result<SymFunc, SymError> {
    check_degree(g.degree() + f.degree())?;
    let inner = scale_macdonald(&DiagonalOp::PiInverse, &super::to_macdonald(f)?)?;
    let inner = convert(&inner, Basis::Power)?;
    let gm = plethysm_scaled_alphabet(g, &Transform::OverM)?;
    let product = multiply(&inner, &gm)?;
    let out = scale_macdonald(&DiagonalOp::Pi, &super::to_macdonald(&product)?)?;
    convert(&out, f.basis())
}

/// `Theta_{e_k} F`.
pub fn theta_e(k: u32, f: &SymFunc) -> Result<SymFunc, SymError> {
    theta(&SymFunc::e(k), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn sf(s: &str) -> SymFunc {
        s.parse().unwrap()
    }

    #[test]
    fn nabla_small_cases() {
        assert!(nabla(&SymFunc::e(1)).unwrap().equals(&SymFunc::e(1)).unwrap());
        let got = convert(&nabla(&SymFunc::e(2)).unwrap(), Basis::Schur).unwrap();
        assert_eq!(got, sf("s[2] + (q + t)*s[1,1]"));
    }

    #[test]
    fn nabla_is_delta_en_on_its_degree() {
        for n in 1..=4 {
            for lambda in partitions(n) {
                let f = SymFunc::s(lambda);
                let a = nabla(&f).unwrap();
                let b = delta(&SymFunc::e(n), &f).unwrap();
                assert!(a.equals(&b).unwrap());
            }
        }
    }

    #[test]
    fn pi_and_its_inverse() {
        let f = sf("s[2,1] + (t)*s[3]");
        assert!(pi(&pi_inverse(&f).unwrap()).unwrap().equals(&f).unwrap());
    }

    #[test]
    fn evaluation_at_alphabets() {
        // e_2[1 + q + t] = q + t + qt
        let b: QTPoly = "1 + q + t".parse().unwrap();
        assert_eq!(evaluate_at(&SymFunc::e(2), &b).unwrap(), QTRational::from_poly("q + t + q*t".parse().unwrap()));
        // h_2[-1] = 0, e_2[-1] = 1
        let minus_one = -&QTPoly::one();
        assert!(evaluate_at(&SymFunc::h(2), &minus_one).unwrap().is_zero());
        assert!(evaluate_at(&SymFunc::e(2), &minus_one).unwrap().is_one());
    }

    #[test]
    fn theta_zero_is_identity() {
        let f = sf("s[2,1] + (q)*s[1,1,1]");
        assert!(theta_e(0, &f).unwrap().equals(&f).unwrap());
    }

    #[test]
    fn theta_raises_degree() {
        for n in 1..=4 {
            for k in 1..=5 - n {
                let out = theta_e(k, &SymFunc::e(n)).unwrap();
                assert_eq!(out.degree(), n + k);
            }
        }
    }
}
