//! Operator identities and the two classical theorems, checked exactly.

use deltasq::partition::{partitions, Partition};
use deltasq::paths::{family_genpoly, Family, FamilySpec};
use deltasq::qt::{q_analogue, t_analogue, QTPoly, QTRational};
use deltasq::symfunc::{
    at_one, convert, delta, delta_prime, e_nk, is_monomial_positive, macdonald, nabla, omega,
    theta_e, Basis, SymFunc,
};
use num_rational::BigRational;

fn frac(a: QTPoly, b: QTPoly) -> QTRational {
    QTRational::from_poly(a).div_poly(&b).unwrap()
}

#[test]
fn theta_of_nabla_e_is_delta_prime() {
    for n in 1..=5 {
        for k in 0..n {
            let lhs = theta_e(k, &nabla(&SymFunc::e(n - k)).unwrap()).unwrap();
            let rhs = delta_prime(&SymFunc::e(n - k - 1), &SymFunc::e(n)).unwrap();
            assert!(lhs.equals(&rhs).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn theta_of_nabla_omega_p_against_delta() {
    for n in 1..=5 {
        let wpn = omega(&SymFunc::p(n)).unwrap();
        for k in 0..n {
            let j = n - k;
            let theta = theta_e(k, &nabla(&omega(&SymFunc::p(j)).unwrap()).unwrap()).unwrap();
            let d = delta(&SymFunc::e(j), &wpn).unwrap();
            let lhs = theta.scale(&frac(q_analogue(n), q_analogue(j)));
            let rhs = d.scale(&frac(t_analogue(j), t_analogue(n)));
            assert!(lhs.equals(&rhs).unwrap(), "n={n} k={k}");
            // the same with q and t exchanged in the prefactors
            let lhs = theta.scale(&frac(t_analogue(n), t_analogue(j)));
            let rhs = d.scale(&frac(q_analogue(j), q_analogue(n)));
            assert!(lhs.equals(&rhs).unwrap(), "swapped n={n} k={k}");
        }
    }
}

#[test]
fn omega_p_splits_over_enk() {
    for n in 1..=5 {
        let mut rhs = SymFunc::zero(Basis::Power, n);
        for k in 1..=n {
            rhs = rhs.try_add(&e_nk(n, k).unwrap().scale(&frac(q_analogue(n), q_analogue(k)))).unwrap();
        }
        assert!(rhs.equals(&omega(&SymFunc::p(n)).unwrap()).unwrap(), "n={n}");
    }
}

#[test]
fn enk_sum_to_e() {
    for n in 1..=5 {
        let mut sum = SymFunc::zero(Basis::Power, n);
        for k in 0..=n {
            sum = sum.try_add(&e_nk(n, k).unwrap()).unwrap();
        }
        assert!(sum.equals(&SymFunc::e(n)).unwrap(), "n={n}");
    }
}

#[test]
fn nabla_e_is_monomial_positive() {
    for n in 1..=5 {
        assert!(is_monomial_positive(&nabla(&SymFunc::e(n)).unwrap()).unwrap(), "n={n}");
    }
}

#[test]
fn shuffle_theorem() {
    for n in 1..=5 {
        let sym = nabla(&SymFunc::e(n)).unwrap().to_genpoly().unwrap();
        let paths = family_genpoly(&FamilySpec::valley(Family::Ld, 0, n, 0)).unwrap();
        assert_eq!(sym, paths, "n={n}");
    }
}

#[test]
fn square_theorem() {
    for n in 1..=4 {
        let sym = nabla(&omega(&SymFunc::p(n)).unwrap()).unwrap().to_genpoly().unwrap();
        let paths = family_genpoly(&FamilySpec::valley(Family::Lsq, 0, n, 0)).unwrap();
        assert_eq!(sym, paths, "n={n}");
    }
}

fn multinomial(lambda: &Partition) -> BigRational {
    let fact = |k: u32| (1..=k as u64).product::<u64>();
    let n = fact(lambda.size());
    let d: u64 = lambda.parts().iter().map(|&p| fact(p)).product();
    BigRational::from_integer((n / d).into())
}

#[test]
fn macdonald_conjugation_and_specialization() {
    for n in 1..=6 {
        for mu in partitions(n) {
            let h = macdonald(&mu).unwrap();
            let hc = macdonald(&mu.conjugate()).unwrap().swap_qt();
            assert!(h.equals(&hc).unwrap(), "mu={mu}");
            let m = convert(&h, Basis::Monomial).unwrap();
            for lambda in partitions(n) {
                assert_eq!(at_one(&m.coeff(&lambda)), Some(multinomial(&lambda)), "mu={mu} lambda={lambda}");
            }
        }
    }
}
