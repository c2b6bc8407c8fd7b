//! Symmetric-function identities, and operator expressions against the
//! generating polynomials of the path families.

use super::combinatorial::{family, timed};
use super::report::{CheckName, CheckReport, CheckSpec, Diff, Outcome, Params, Status};
use super::symbolic::{self as sym, genpoly, ratio_genpoly, Bracket, SideError};
use crate::partition::Partition;
use crate::paths::{Family, FamilySpec, GenPoly};
use crate::qt::{q_analogue, t_analogue, QTPoly, QTRational};
use crate::symfunc::{SymError, SymFunc};

fn side_failure(e: SideError) -> Outcome {
    match e {
        SideError::NotPolynomial { content, detail } => Outcome {
            status: Status::Fail,
            lhs: String::new(),
            rhs: String::new(),
            diff: Some(Diff { content, q: None, t: None, lhs: detail, rhs: "a polynomial".into() }),
            note: Some("NotPolynomial".into()),
        },
        e => Outcome::failure(e.to_string()),
    }
}

fn ratio(num: QTPoly, den: QTPoly) -> QTRational {
    QTRational::from_poly(num).div_poly(&den).expect("brackets are nonzero")
}

/// The symmetric-function identities.
pub fn check_identity(name: CheckName, n: u32, k: u32) -> CheckReport {
    let params = match name {
        CheckName::PnEnk | CheckName::EnkSum => Params { n: Some(n), ..Default::default() },
        _ => Params { n: Some(n), k: Some(k), ..Default::default() },
    };
    timed(CheckSpec::new(name, params), || {
        identity_outcome(name, n, k).unwrap_or_else(|e| Outcome::failure(e.to_string()))
    })
}

fn identity_outcome(name: CheckName, n: u32, k: u32) -> Result<Outcome, SymError> {
    let j = n.saturating_sub(k);
    match name {
        CheckName::ThetaEn | CheckName::ThetaPn | CheckName::ThetaPnCorollary if k >= n => {
            Ok(Outcome::skipped("k >= n"))
        }
        CheckName::ThetaEn => Outcome::compare_sym(&sym::theta_nabla_en(k, j)?, &sym::delta_prime_en(n, k)?),
        CheckName::ThetaPn | CheckName::ThetaPnCorollary => {
            let (theta, delta) = (sym::theta_nabla_pn(k, j)?, sym::delta_omega_pn(n, k)?);
            let (a, b) = if name == CheckName::ThetaPn {
                (ratio(q_analogue(n), q_analogue(j)), ratio(t_analogue(j), t_analogue(n)))
            } else {
                (ratio(t_analogue(n), t_analogue(j)), ratio(q_analogue(j), q_analogue(n)))
            };
            Outcome::compare_sym(&theta.scale(&a), &delta.scale(&b))
        }
        CheckName::PnEnk => {
            let mut rhs = SymFunc::zero(crate::symfunc::Basis::Power, n);
            for i in 1..=n {
                rhs = rhs.try_add(&sym::enk(n, i)?.scale(&ratio(q_analogue(n), q_analogue(i))))?;
            }
            Outcome::compare_sym(&sym::omega_pn(n)?, &rhs)
        }
        CheckName::EnkSum => {
            let mut lhs = SymFunc::zero(crate::symfunc::Basis::Power, n);
            for i in 0..=n {
                lhs = lhs.try_add(&sym::enk(n, i)?)?;
            }
            Outcome::compare_sym(&lhs, &SymFunc::e(n))
        }
        other => Ok(Outcome::failure(format!("{other} is not a symmetric function identity"))),
    }
}

/// The path family a conjecture enumerates.
pub fn path_family(name: CheckName, m: u32, n: u32, k: u32, r: u32) -> Option<FamilySpec> {
    use Family::*;
    Some(match name {
        CheckName::Shuffle => FamilySpec::valley(Ld, 0, n, 0),
        CheckName::Square => FamilySpec::valley(Lsq, 0, n, 0),
        CheckName::ValleyDelta => FamilySpec::valley(Ld, m, n, k),
        CheckName::ValleyDeltaTouching => FamilySpec::valley(Ld, 0, n, k).with_touching(r),
        CheckName::GenValleyDeltaTouching => FamilySpec::valley(Ld, m, n, k).with_touching(r),
        CheckName::GenValleySquareRatio | CheckName::GenValleySquareTheta => FamilySpec::valley(Lsq, m, n, k),
        CheckName::ModifiedSquare => FamilySpec::valley(LsqPrime, 0, n, k),
        CheckName::GenModifiedSquare => FamilySpec::valley(LsqPrime, m, n, k),
        CheckName::RiseDelta => FamilySpec::rise(Ld, m, n, k),
        CheckName::RiseSquare => FamilySpec::rise(Lsq, m, n, k),
        _ => return None,
    })
}

fn empty_path_poly() -> GenPoly {
    GenPoly::from_terms([(Partition::empty(), QTPoly::one())])
}

/// The operator side of a conjecture as a generating polynomial.
pub fn symmetric_side(name: CheckName, m: u32, n: u32, k: u32, r: u32) -> Result<GenPoly, SideError> {
    let m = match name {
        CheckName::Shuffle | CheckName::Square | CheckName::ValleyDeltaTouching | CheckName::ModifiedSquare => 0,
        _ => m,
    };
    if n == 0 {
        // only the empty path has no positive labels
        let empty = m == 0 && k == 0 && r == 0;
        return Ok(if empty { empty_path_poly() } else { GenPoly::zero() });
    }
    let touching = matches!(name, CheckName::ValleyDeltaTouching | CheckName::GenValleyDeltaTouching);
    if (k >= n && !matches!(name, CheckName::Shuffle | CheckName::Square)) || (touching && (r == 0 || r > n - k)) {
        // no admissible decoration set, and E_{n-k,0} = 0 for n > k
        return Ok(GenPoly::zero());
    }
    let j = n - k;
    let dh = |key: &str, f: &dyn Fn() -> Result<SymFunc, SymError>| sym::delta_h_memo(m, key, f);
    match name {
        CheckName::Shuffle => genpoly(&sym::nabla_en(n)?),
        CheckName::Square => genpoly(&sym::nabla_omega_pn(n)?),
        CheckName::ValleyDelta | CheckName::RiseDelta => {
            genpoly(&dh(&format!("delta' {n} {k}"), &|| sym::delta_prime_en(n, k))?)
        }
        CheckName::ValleyDeltaTouching | CheckName::GenValleyDeltaTouching => {
            genpoly(&dh(&format!("theta E {k} {j} {r}"), &|| sym::theta_nabla_enk(k, j, r))?)
        }
        CheckName::GenValleySquareRatio => ratio_genpoly(
            Bracket::Q(j),
            Bracket::Q(n),
            &dh(&format!("delta omega p {n} {k}"), &|| sym::delta_omega_pn(n, k))?,
        ),
        CheckName::RiseSquare => ratio_genpoly(
            Bracket::T(j),
            Bracket::T(n),
            &dh(&format!("delta omega p {n} {k}"), &|| sym::delta_omega_pn(n, k))?,
        ),
        CheckName::GenValleySquareTheta => ratio_genpoly(
            Bracket::T(n),
            Bracket::T(j),
            &dh(&format!("theta p {k} {j}"), &|| sym::theta_nabla_pn(k, j))?,
        ),
        CheckName::ModifiedSquare | CheckName::GenModifiedSquare => {
            genpoly(&dh(&format!("theta p {k} {j}"), &|| sym::theta_nabla_pn(k, j))?)
        }
        other => Err(SideError::Sym(SymError::UnsupportedTransform(format!("{other} has no operator side")))),
    }
}

fn conjecture_params(name: CheckName, m: u32, n: u32, k: u32, r: u32) -> Params {
    match name {
        CheckName::Shuffle | CheckName::Square => Params { n: Some(n), ..Default::default() },
        CheckName::ValleyDeltaTouching => Params::mnk(0, n, k).with_r(r),
        CheckName::ModifiedSquare => Params::mnk(0, n, k),
        CheckName::GenValleyDeltaTouching => Params::mnk(m, n, k).with_r(r),
        _ => Params::mnk(m, n, k),
    }
}

/// Operator side against enumeration; a non-polynomial ratio is a failure.
pub fn check_conjecture(name: CheckName, m: u32, n: u32, k: u32, r: u32) -> CheckReport {
    timed(CheckSpec::new(name, conjecture_params(name, m, n, k, r)), || {
        let Some(spec) = path_family(name, m, n, k, r) else {
            return Outcome::failure(format!("{name} is not a conjecture check"));
        };
        let lhs = match symmetric_side(name, m, n, k, r) {
            Ok(g) => g,
            Err(e) => return side_failure(e),
        };
        match family(&spec) {
            Ok(rhs) => Outcome::compare(&lhs, &rhs),
            Err(e) => Outcome::failure(e.to_string()),
        }
    })
}

fn first_failing(mut stages: Vec<(&str, Outcome)>) -> Outcome {
    if let Some(i) = stages.iter().position(|(_, o)| o.status == Status::Fail) {
        let (label, o) = stages.swap_remove(i);
        return o.with_note(label);
    }
    stages.swap_remove(0).1
}

/// The ratio and Theta forms of the generalized valley square statement
/// agree as symmetric functions.
pub fn check_valley_square_forms(m: u32, n: u32, k: u32) -> CheckReport {
    timed(CheckSpec::new(CheckName::ValleySquareForms, Params::mnk(m, n, k)), || {
        let a = symmetric_side(CheckName::GenValleySquareRatio, m, n, k, 0);
        let b = symmetric_side(CheckName::GenValleySquareTheta, m, n, k, 0);
        match (a, b) {
            (Ok(a), Ok(b)) => Outcome::compare(&a, &b),
            (Err(e), _) | (_, Err(e)) => side_failure(e),
        }
    })
}

/// Summing the touching refinements over `r` recovers the unrefined
/// statement, on both sides.
pub fn check_additivity(m: u32, n: u32, k: u32) -> CheckReport {
    timed(CheckSpec::new(CheckName::AdditivityAudit, Params::mnk(m, n, k)), || {
        if k >= n {
            return Outcome::skipped("k >= n");
        }
        let run = || -> Result<Outcome, String> {
            let (mut sym_sum, mut path_sum) = (GenPoly::zero(), GenPoly::zero());
            for r in 1..=n - k {
                sym_sum.merge(&symmetric_side(CheckName::GenValleyDeltaTouching, m, n, k, r).map_err(|e| e.to_string())?);
                let spec = path_family(CheckName::GenValleyDeltaTouching, m, n, k, r).expect("conjecture");
                path_sum.merge(&family(&spec).map_err(|e| e.to_string())?);
            }
            let sym_full = symmetric_side(CheckName::ValleyDelta, m, n, k, 0).map_err(|e| e.to_string())?;
            let path_full = family(&FamilySpec::valley(Family::Ld, m, n, k)).map_err(|e| e.to_string())?;
            Ok(first_failing(vec![
                ("operator side summed over r", Outcome::compare(&sym_sum, &path_sum)),
                ("operator sum vs unrefined", Outcome::compare(&sym_sum, &sym_full)),
                ("path sum vs unrefined", Outcome::compare(&path_sum, &path_full)),
                ("unrefined statement", Outcome::compare(&sym_full, &path_full)),
            ]))
        };
        run().unwrap_or_else(Outcome::failure)
    })
}

/// Touching Dyck sums scaled by `[n-k]_q/[r]_q`, summed over `r`, give the
/// `LSQ'` sum, which equals `Delta_{h_m} Theta_{e_k} nabla omega(p_{n-k})`.
pub fn check_pipeline(m: u32, n: u32, k: u32) -> CheckReport {
    timed(CheckSpec::new(CheckName::PipelineReplay, Params::mnk(m, n, k)), || {
        if k >= n {
            return Outcome::skipped("k >= n");
        }
        let run = || -> Result<Outcome, Outcome> {
            let top = q_analogue(n - k);
            let mut scaled = GenPoly::zero();
            for r in 1..=n - k {
                let ld = family(&FamilySpec::valley(Family::Ld, m, n, k).with_touching(r))
                    .map_err(|e| Outcome::failure(e.to_string()))?;
                let bracket = q_analogue(r);
                for (lambda, c) in ld.terms() {
                    let p = (c * &top).div_exact(&bracket).ok_or_else(|| {
                        side_failure(SideError::NotPolynomial {
                            content: lambda.parts().to_vec(),
                            detail: format!("[{}]_q ({c}) / [{r}]_q", n - k),
                        })
                    })?;
                    scaled.add_term(lambda.clone(), p);
                }
            }
            let lsq = family(&FamilySpec::valley(Family::LsqPrime, m, n, k)).map_err(|e| Outcome::failure(e.to_string()))?;
            let op = symmetric_side(CheckName::GenModifiedSquare, m, n, k, 0).map_err(side_failure)?;
            Ok(first_failing(vec![
                ("scaled touching sum vs lsqprime", Outcome::compare(&scaled, &lsq)),
                ("lsqprime vs operator side", Outcome::compare(&lsq, &op)),
            ]))
        };
        run().unwrap_or_else(|o| o)
    })
}
