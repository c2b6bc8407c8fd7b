//! The check catalogue, single-spec dispatch and the parallel suite runner.

use std::io::{self, Write};
use std::time::Instant;

use rayon::prelude::*;

use super::combinatorial::{check_schedule, check_shift_recursion, check_square_to_dyck};
use super::conjecture::{check_additivity, check_conjecture, check_identity, check_pipeline, check_valley_square_forms};
use super::report::{CheckName, CheckReport, CheckSpec, Params, Summary};

/// Largest decoration count for the per-class checks.
pub const CLASS_MAX_K: u32 = 2;

/// Named groups accepted wherever a list of checks is.
pub fn group(name: &str) -> Option<Vec<CheckName>> {
    use CheckName::*;
    Some(match name {
        "all" => CheckName::ALL.to_vec(),
        "schedule" => vec![Schedule, ScheduleInsertion],
        "shift" => vec![ShiftRecursion, Flattening, SquareToDyck],
        "identities" => vec![ThetaEn, ThetaPn, ThetaPnCorollary, PnEnk, EnkSum],
        "conjectures" => vec![
            Shuffle,
            Square,
            ValleyDelta,
            ValleyDeltaTouching,
            GenValleyDeltaTouching,
            GenValleySquareRatio,
            GenValleySquareTheta,
            ModifiedSquare,
            GenModifiedSquare,
            RiseDelta,
            RiseSquare,
        ],
        "audits" => vec![ValleySquareForms, AdditivityAudit, PipelineReplay],
        _ => return None,
    })
}

/// Group names or check names, deduplicated in catalogue order.
pub fn parse_families<S: AsRef<str>>(items: &[S]) -> Result<Vec<CheckName>, String> {
    let mut out = Vec::new();
    for item in items {
        let item = item.as_ref();
        match group(item) {
            Some(g) => out.extend(g),
            None => out.push(item.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `(m, n, k)` with `1 <= m + n <= max_size`, `n >= 1`, `k < n`, `k <= k_max`.
fn grid(max_size: u32, k_max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for m in 0..size {
            let n = size - m;
            for k in 0..n.min(k_max.saturating_add(1)) {
                out.push((m, n, k));
            }
        }
    }
    out
}

/// Every spec of the given checks up to `max_size`, in deterministic order.
/// Per-class checks carry only `(m, n, k)` and expand to one report per class.
pub fn catalogue(max_size: u32, checks: &[CheckName]) -> Vec<CheckSpec> {
    use CheckName::*;
    let mut out = Vec::new();
    let mut names = checks.to_vec();
    names.sort();
    names.dedup();
    for name in names {
        let push = |out: &mut Vec<CheckSpec>, p: Params| out.push(CheckSpec::new(name, p));
        match name {
            Schedule | ScheduleInsertion | ShiftRecursion | Flattening => {
                for (m, n, k) in grid(max_size, CLASS_MAX_K) {
                    push(&mut out, Params::mnk(m, n, k));
                }
            }
            SquareToDyck | GenValleyDeltaTouching => {
                for (m, n, k) in grid(max_size, u32::MAX) {
                    for r in 1..=n - k {
                        push(&mut out, Params::mnk(m, n, k).with_r(r));
                    }
                }
            }
            ValleyDeltaTouching => {
                for (_, n, k) in grid(max_size, u32::MAX).into_iter().filter(|g| g.0 == 0) {
                    for r in 1..=n - k {
                        push(&mut out, Params::mnk(0, n, k).with_r(r));
                    }
                }
            }
            ThetaEn | ThetaPn | ThetaPnCorollary => {
                for (_, n, k) in grid(max_size, u32::MAX).into_iter().filter(|g| g.0 == 0) {
                    push(&mut out, Params { n: Some(n), k: Some(k), ..Default::default() });
                }
            }
            PnEnk | EnkSum | Shuffle | Square => {
                for n in 1..=max_size {
                    push(&mut out, Params { n: Some(n), ..Default::default() });
                }
            }
            ModifiedSquare => {
                for (_, n, k) in grid(max_size, u32::MAX).into_iter().filter(|g| g.0 == 0) {
                    push(&mut out, Params::mnk(0, n, k));
                }
            }
            _ => {
                for (m, n, k) in grid(max_size, u32::MAX) {
                    push(&mut out, Params::mnk(m, n, k));
                }
            }
        }
    }
    out
}

/// Runs one spec. Per-class checks without `s`/`word` cover every class;
/// with them, only the matching class.
pub fn run_spec(spec: &CheckSpec) -> Vec<CheckReport> {
    use CheckName::*;
    let p = &spec.params;
    let (m, n, k, r) = (p.m(), p.n(), p.k(), p.r());
    let per_class = |reports: Vec<CheckReport>| -> Vec<CheckReport> {
        reports
            .into_iter()
            .filter(|rep| rep.spec.name == spec.name)
            .filter(|rep| p.s.is_none() || rep.spec.params.s == p.s)
            .filter(|rep| p.word.is_none() || rep.spec.params.word == p.word)
            .collect()
    };
    match spec.name {
        Schedule | ScheduleInsertion => per_class(check_schedule(m, n, k)),
        ShiftRecursion | Flattening => per_class(check_shift_recursion(m, n, k)),
        SquareToDyck => vec![check_square_to_dyck(m, n, k, r)],
        ThetaEn | ThetaPn | ThetaPnCorollary | PnEnk | EnkSum => vec![check_identity(spec.name, n, k)],
        ValleySquareForms => vec![check_valley_square_forms(m, n, k)],
        AdditivityAudit => vec![check_additivity(m, n, k)],
        PipelineReplay => vec![check_pipeline(m, n, k)],
        name => vec![check_conjecture(name, m, n, k, r)],
    }
}

/// Runs the catalogue on the current rayon pool, writes one JSON line per
/// report in catalogue order and the summary line last.
pub fn run_suite(
    max_size: u32,
    checks: &[CheckName],
    sink: &mut dyn Write,
) -> io::Result<(Summary, Vec<CheckReport>)> {
    let start = Instant::now();
    let specs = catalogue(max_size, checks);
    let reports: Vec<CheckReport> = specs.par_iter().map(run_spec).collect::<Vec<_>>().concat();
    for r in &reports {
        writeln!(sink, "{}", r.to_json())?;
    }
    let summary = Summary::of(&reports, start.elapsed().as_millis() as u64);
    writeln!(sink, "{}", summary.to_json())?;
    sink.flush()?;
    Ok((summary, reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_parse() {
        assert_eq!(parse_families(&["schedule"]).unwrap(), vec![CheckName::Schedule, CheckName::ScheduleInsertion]);
        assert_eq!(parse_families(&["all"]).unwrap().len(), CheckName::ALL.len());
        assert!(parse_families(&["nonsense"]).is_err());
        assert!(parse_families::<&str>(&[]).unwrap().is_empty());
    }

    #[test]
    fn empty_suite() {
        let mut buf = Vec::new();
        let (summary, reports) = run_suite(4, &[], &mut buf).unwrap();
        assert!(reports.is_empty());
        assert_eq!(summary.total, 0);
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.contains("\"summary\""));
    }

    #[test]
    fn catalogue_is_deterministic() {
        let a = catalogue(4, &CheckName::ALL);
        let b = catalogue(4, &CheckName::ALL);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.params.n.is_some()));
    }
}
