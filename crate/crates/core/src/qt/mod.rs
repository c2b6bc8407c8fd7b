//! Exact arithmetic in `Q[q,t]` and `Q(q,t)`.

mod analogue;
mod factored;
mod gcd;
mod poly;
mod rational;

pub use analogue::{
    choose2, q_analogue, q_binomial, q_factorial, q_pochhammer, t_analogue, t_binomial,
};
pub use gcd::gcd;
pub use poly::{Exponent, QTPoly};
pub use rational::{exact_poly_quotient, QTRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QtError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("cannot parse polynomial text {0:?}")]
    Parse(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = QTPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -3i64..4), 0..5)
            .prop_map(|terms| QTPoly::from_counts(terms.into_iter().map(|(a, b, c)| ((a, b), c))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonicalization_is_idempotent(n in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            let r = QTRational::new(n, d).unwrap();
            let again = QTRational::new(r.numer().clone(), r.denom()).unwrap();
            prop_assert_eq!(&again, &r);
            prop_assert_eq!(again.numer(), r.numer());
            prop_assert_eq!(again.denom(), r.denom());
        }

        #[test]
        fn field_identities(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!c.is_zero());
            let x = QTRational::new(a.clone(), c.clone()).unwrap();
            let y = QTRational::new(b.clone(), (&c + &QTPoly::one()).clone()).unwrap_or_else(|_| QTRational::one());
            let s = &x + &y;
            prop_assert_eq!(&(&s - &y), &x);
            if !y.is_zero() {
                let m = &x * &y;
                prop_assert_eq!(&m.checked_div(&y).unwrap(), &x);
            }
        }

        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly(), f in small_poly()) {
            let fa = &f * &a;
            let fb = &f * &b;
            let g = gcd(&fa, &fb);
            if !g.is_zero() {
                prop_assert!(fa.div_exact(&g).is_some());
                prop_assert!(fb.div_exact(&g).is_some());
                if !f.is_zero() {
                    prop_assert!(g.div_exact(&f).is_some());
                }
            }
        }
    }
}
