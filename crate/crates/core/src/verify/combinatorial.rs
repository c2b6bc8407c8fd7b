//! Checks whose both sides are path counts: the schedule formula, the
//! shift recursion, flattening and the square-to-Dyck relation.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use super::report::{CheckName, CheckReport, CheckSpec, Diff, Outcome, Params, Status};
use crate::paths::{enumerate, family_genpoly, DecoratedPath, Family, FamilySpec, GenPoly};
use crate::qt::{q_analogue, QTPoly};
use crate::schedule::{b_exponent, insertion_generate, run_multiplicities, schedule_product, MarkedWord};

/// Valley-decorated square paths of size `m + n`, grouped by
/// (diagonal word, shift), in a deterministic order.
pub type Classes = BTreeMap<(String, u32), (MarkedWord, Vec<DecoratedPath>)>;

pub fn classes(m: u32, n: u32, k: u32) -> Classes {
    let mut out = Classes::new();
    let Ok(paths) = enumerate(&FamilySpec::valley(Family::Lsq, m, n, k)) else {
        return out;
    };
    for p in paths {
        let z = p.diagonal_word();
        out.entry((z.to_string(), p.shift())).or_insert_with(|| (z, Vec::new())).1.push(p);
    }
    out
}

/// `sum q^dinv t^area`.
pub fn qt_sum(paths: &[DecoratedPath]) -> QTPoly {
    let mut tally: HashMap<(u32, u32), i64> = HashMap::new();
    for p in paths {
        let d = u32::try_from(p.dinv()).expect("dinv is non-negative");
        *tally.entry((d, p.area())).or_insert(0) += 1;
    }
    QTPoly::from_counts(tally)
}

fn class_params(m: u32, n: u32, k: u32, z: &MarkedWord, s: u32) -> Params {
    Params { s: Some(s), word: Some(z.to_string()), ..Params::mnk(m, n, k) }
}

pub(crate) fn timed(spec: CheckSpec, f: impl FnOnce() -> Outcome) -> CheckReport {
    let start = Instant::now();
    let out = f();
    out.into_report(spec, start.elapsed().as_millis() as u64)
}

/// Closed form against the brute-force class sum, and insertion against the
/// class itself, for every class of `LSQ(m, n)` with `k` decorated valleys.
pub fn check_schedule(m: u32, n: u32, k: u32) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for ((_, s), (z, mut paths)) in classes(m, n, k) {
        let params = class_params(m, n, k, &z, s);
        out.push(timed(CheckSpec::new(CheckName::Schedule, params.clone()), || {
            let (product, content) = schedule_product(&z, s);
            Outcome::compare_poly(&content, &product, &qt_sum(&paths))
        }));
        paths.sort();
        out.push(timed(CheckSpec::new(CheckName::ScheduleInsertion, params), || {
            insertion_outcome(&z, s, &paths)
        }));
    }
    out
}

fn insertion_outcome(z: &MarkedWord, s: u32, paths: &[DecoratedPath]) -> Outcome {
    let expected = qt_sum(paths);
    let show = |ps: &[DecoratedPath]| format!("{} paths: {}", ps.len(), qt_sum(ps));
    let generated = match insertion_generate(z, s) {
        Ok(g) => g,
        Err(e) => {
            return Outcome {
                status: Status::Fail,
                lhs: e.to_string(),
                rhs: show(paths),
                diff: Some(Diff {
                    content: z.content(),
                    q: None,
                    t: None,
                    lhs: e.to_string(),
                    rhs: expected.to_string(),
                }),
                note: None,
            }
        }
    };
    if generated == paths {
        return Outcome { status: Status::Pass, lhs: show(&generated), rhs: show(paths), diff: None, note: None };
    }
    let got = qt_sum(&generated);
    if got != expected {
        let mut o = Outcome::compare_poly(&z.content(), &got, &expected);
        o.lhs = show(&generated);
        o.rhs = show(paths);
        return o.with_note("multisets differ");
    }
    // same statistics, different objects: report the first differing path
    let i = generated.iter().zip(paths).position(|(a, b)| a != b).unwrap_or(generated.len().min(paths.len()));
    let line = |ps: &[DecoratedPath]| ps.get(i).map_or_else(|| "<none>".to_string(), |p| p.to_line());
    Outcome {
        status: Status::Fail,
        lhs: show(&generated),
        rhs: show(paths),
        diff: Some(Diff { content: z.content(), q: None, t: None, lhs: line(&generated), rhs: line(paths) }),
        note: Some("multisets differ".into()),
    }
}

/// `#rho'_i - z^•_{i-1}(0)`.
pub fn ratio_term(z: &MarkedWord, i: usize) -> i64 {
    let runs = run_multiplicities(z);
    let prime = runs.get(i).map_or(0, |r| r.prime_size()) as i64;
    let dec0 = if i == 0 { 0 } else { runs.get(i - 1).map_or(0, |r| r.z_dec(0)) as i64 };
    prime - dec0
}

fn q_int(n: i64) -> Option<QTPoly> {
    u32::try_from(n).ok().map(q_analogue)
}

/// Shift-by-one and flattening, per class.
pub fn check_shift_recursion(m: u32, n: u32, k: u32) -> Vec<CheckReport> {
    let cls = classes(m, n, k);
    let sum_of = |z: &MarkedWord, s: u32| {
        cls.get(&(z.to_string(), s)).map_or_else(QTPoly::zero, |(_, p)| qt_sum(p))
    };
    let mut out = Vec::new();
    for ((_, s), (z, paths)) in &cls {
        let s = *s;
        let params = class_params(m, n, k, z, s);
        let content = z.content();
        if s > 0 {
            out.push(timed(CheckSpec::new(CheckName::ShiftRecursion, params.clone()), || {
                // [lower] LSQ(z, s) = q^lower [upper] LSQ(z, s - 1)
                let lower = ratio_term(z, s as usize - 1);
                let upper = ratio_term(z, s as usize);
                match (q_int(lower), q_int(upper)) {
                    (Some(lo), Some(up)) => {
                        let lhs = &qt_sum(paths) * &lo;
                        let rhs = (&up * &sum_of(z, s - 1)).shift(lower as u32, 0);
                        Outcome::compare_poly(&content, &lhs, &rhs)
                    }
                    _ => Outcome::failure(format!("negative bracket ({lower}, {upper})")),
                }
            }));
        }
        out.push(timed(CheckSpec::new(CheckName::Flattening, params), || {
            // [rho'_0] LSQ(z, s) = q^b [top] LD(z)
            let rho0 = ratio_term(z, 0);
            if rho0 == 0 {
                return Outcome::skipped("#rho'_0 = 0");
            }
            let b = b_exponent(z, s);
            match (q_int(rho0), q_int(ratio_term(z, s as usize)), u32::try_from(b)) {
                (Some(r0), Some(top), Ok(b)) => {
                    let lhs = &qt_sum(paths) * &r0;
                    let rhs = (&top * &sum_of(z, 0)).shift(b, 0);
                    Outcome::compare_poly(&content, &lhs, &rhs)
                }
                _ => Outcome::failure(format!("negative exponent or bracket (b = {b})")),
            }
        }));
    }
    out
}

/// `[r]_q LSQ'(m, n \ r)^{•k} = [n-k]_q LD(m, n \ r)^{•k}`.
pub fn check_square_to_dyck(m: u32, n: u32, k: u32, r: u32) -> CheckReport {
    timed(CheckSpec::new(CheckName::SquareToDyck, Params::mnk(m, n, k).with_r(r)), || {
        if k >= n {
            return Outcome::skipped("k >= n");
        }
        let sq = family(&FamilySpec::valley(Family::LsqPrime, m, n, k).with_touching(r));
        let ld = family(&FamilySpec::valley(Family::Ld, m, n, k).with_touching(r));
        match (sq, ld) {
            (Ok(sq), Ok(ld)) => Outcome::compare(&sq.scale(&q_analogue(r)), &ld.scale(&q_analogue(n - k))),
            (Err(e), _) | (_, Err(e)) => Outcome::failure(e.to_string()),
        }
    })
}

/// Path-side generating polynomial, shared between checks.
pub fn family(spec: &FamilySpec) -> Result<GenPoly, crate::paths::PathError> {
    use std::sync::{Arc, Mutex, OnceLock};
    type Slot = Arc<OnceLock<Result<GenPoly, crate::paths::PathError>>>;
    static MEMO: OnceLock<Mutex<HashMap<String, Slot>>> = OnceLock::new();
    let key = serde_json::to_string(spec).expect("serializable");
    let slot = MEMO.get_or_init(Default::default).lock().expect("poisoned").entry(key).or_default().clone();
    slot.get_or_init(|| family_genpoly(spec)).clone()
}
