//! Check identifiers, parameters and JSON-lines reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::paths::GenPoly;
use crate::qt::{QTPoly, QTRational};
use crate::symfunc::{convert, Basis, SymError, SymFunc};

/// The closed catalogue of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    // one report per (diagonal word, shift) class
    Schedule,
    ScheduleInsertion,
    ShiftRecursion,
    Flattening,
    SquareToDyck,
    // symmetric function identities
    ThetaEn,
    ThetaPn,
    ThetaPnCorollary,
    PnEnk,
    EnkSum,
    // operator side against enumeration
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
    // structural audits
    ValleySquareForms,
    AdditivityAudit,
    PipelineReplay,
}

impl CheckName {
    pub const ALL: [CheckName; 24] = [
        CheckName::Schedule,
        CheckName::ScheduleInsertion,
        CheckName::ShiftRecursion,
        CheckName::Flattening,
        CheckName::SquareToDyck,
        CheckName::ThetaEn,
        CheckName::ThetaPn,
        CheckName::ThetaPnCorollary,
        CheckName::PnEnk,
        CheckName::EnkSum,
        CheckName::Shuffle,
        CheckName::Square,
        CheckName::ValleyDelta,
        CheckName::ValleyDeltaTouching,
        CheckName::GenValleyDeltaTouching,
        CheckName::GenValleySquareRatio,
        CheckName::GenValleySquareTheta,
        CheckName::ModifiedSquare,
        CheckName::GenModifiedSquare,
        CheckName::RiseDelta,
        CheckName::RiseSquare,
        CheckName::ValleySquareForms,
        CheckName::AdditivityAudit,
        CheckName::PipelineReplay,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Schedule => "schedule",
            CheckName::ScheduleInsertion => "schedule_insertion",
            CheckName::ShiftRecursion => "shift_recursion",
            CheckName::Flattening => "flattening",
            CheckName::SquareToDyck => "square_to_dyck",
            CheckName::ThetaEn => "theta_en",
            CheckName::ThetaPn => "theta_pn",
            CheckName::ThetaPnCorollary => "theta_pn_corollary",
            CheckName::PnEnk => "pn_enk",
            CheckName::EnkSum => "enk_sum",
            CheckName::Shuffle => "shuffle",
            CheckName::Square => "square",
            CheckName::ValleyDelta => "valley_delta",
            CheckName::ValleyDeltaTouching => "valley_delta_touching",
            CheckName::GenValleyDeltaTouching => "gen_valley_delta_touching",
            CheckName::GenValleySquareRatio => "gen_valley_square_ratio",
            CheckName::GenValleySquareTheta => "gen_valley_square_theta",
            CheckName::ModifiedSquare => "modified_square",
            CheckName::GenModifiedSquare => "gen_modified_square",
            CheckName::RiseDelta => "rise_delta",
            CheckName::RiseSquare => "rise_square",
            CheckName::ValleySquareForms => "valley_square_forms",
            CheckName::AdditivityAudit => "additivity_audit",
            CheckName::PipelineReplay => "pipeline_replay",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.replace('-', "_").to_ascii_lowercase();
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Parameters of one check; unused ones stay `None` and are not serialized.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
}

impl Params {
    pub fn mnk(m: u32, n: u32, k: u32) -> Self {
        Params { m: Some(m), n: Some(n), k: Some(k), ..Default::default() }
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn m(&self) -> u32 {
        self.m.unwrap_or(0)
    }

    pub fn n(&self) -> u32 {
        self.n.unwrap_or(0)
    }

    pub fn k(&self) -> u32 {
        self.k.unwrap_or(0)
    }

    pub fn r(&self) -> u32 {
        self.r.unwrap_or(0)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, v) in [("m", self.m), ("n", self.n), ("k", self.k), ("r", self.r), ("s", self.s)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(w) = &self.word {
            parts.push(format!("word=\"{w}\""));
        }
        f.write_str(&parts.join(" "))
    }
}

/// What to check. Every comparison is exact; there is no tolerance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CheckSpec {
    #[serde(rename = "check")]
    pub name: CheckName,
    pub params: Params,
}

impl CheckSpec {
    pub fn new(name: CheckName, params: Params) -> Self {
        Self { name, params }
    }

    /// Always true: pass means coefficientwise equality of canonical forms.
    pub fn exact(&self) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// First coefficient where the two sides differ. `q`/`t` are absent when
/// the coefficients are not both polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    pub content: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    #[serde(flatten)]
    pub spec: CheckSpec,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub diff: Option<Diff>,
    pub ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// `PASS theta_en n=4 k=2 (12 ms)`, plus the difference on failure.
    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let mut s = format!("{tag} {} {} ({} ms)", self.spec.name, self.spec.params, self.ms);
        if let Some(d) = &self.diff {
            s.push_str(&format!(" first difference at x^{:?}", d.content));
            if let (Some(q), Some(t)) = (d.q, d.t) {
                s.push_str(&format!(" q^{q} t^{t}"));
            }
            s.push_str(&format!(": {} vs {}", d.lhs, d.rhs));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" [{n}]"));
        }
        s
    }
}

/// Outcome of comparing two sides, before timing is attached.
pub(crate) struct Outcome {
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub diff: Option<Diff>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn compare(lhs: &GenPoly, rhs: &GenPoly) -> Self {
        let diff = lhs.first_difference(rhs).map(|d| Diff {
            content: d.content.parts().to_vec(),
            q: Some(d.q),
            t: Some(d.t),
            lhs: d.left,
            rhs: d.right,
        });
        Outcome {
            status: if diff.is_none() { Status::Pass } else { Status::Fail },
            lhs: lhs.render(),
            rhs: rhs.render(),
            diff,
            note: None,
        }
    }

    /// Two `q,t`-polynomials attached to one content vector.
    pub fn compare_poly(content: &[u32], lhs: &QTPoly, rhs: &QTPoly) -> Self {
        let diff = (lhs != rhs).then(|| {
            let d = lhs - rhs;
            let (&(q, t), _) = d.terms().next().expect("nonzero difference");
            Diff {
                content: content.to_vec(),
                q: Some(q),
                t: Some(t),
                lhs: lhs.coeff(q, t).to_string(),
                rhs: rhs.coeff(q, t).to_string(),
            }
        });
        Outcome {
            status: if diff.is_none() { Status::Pass } else { Status::Fail },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            diff,
            note: None,
        }
    }

    /// Exact equality of symmetric functions, rendered in the Schur basis.
    pub fn compare_sym(lhs: &SymFunc, rhs: &SymFunc) -> Result<Self, SymError> {
        let a = convert(lhs, Basis::Monomial)?;
        let b = convert(rhs, Basis::Monomial)?;
        let mut keys: Vec<_> = a.terms().keys().chain(b.terms().keys()).cloned().collect();
        keys.sort();
        keys.dedup();
        let mut diff = None;
        for p in keys {
            let (x, y) = (a.coeff(&p), b.coeff(&p));
            if x == y {
                continue;
            }
            diff = Some(coefficient_diff(p.parts().to_vec(), &x, &y));
            break;
        }
        let render = |f: &SymFunc| convert(f, Basis::Schur).map(|s| s.to_string());
        Ok(Outcome {
            status: if diff.is_none() { Status::Pass } else { Status::Fail },
            lhs: render(lhs)?,
            rhs: render(rhs)?,
            diff,
            note: None,
        })
    }

    /// A computation that could not produce comparable sides.
    pub fn failure(note: String) -> Self {
        let diff = Diff { content: Vec::new(), q: None, t: None, lhs: note.clone(), rhs: String::new() };
        Outcome { status: Status::Fail, lhs: String::new(), rhs: String::new(), diff: Some(diff), note: Some(note) }
    }

    pub fn skipped(note: &str) -> Self {
        Outcome {
            status: Status::Skipped,
            lhs: String::new(),
            rhs: String::new(),
            diff: None,
            note: Some(note.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn into_report(self, spec: CheckSpec, ms: u64) -> CheckReport {
        CheckReport {
            spec,
            status: self.status,
            lhs: self.lhs,
            rhs: self.rhs,
            diff: self.diff,
            ms,
            note: self.note,
        }
    }
}

fn coefficient_diff(content: Vec<u32>, x: &QTRational, y: &QTRational) -> Diff {
    if let (Some(a), Some(b)) = (x.to_poly(), y.to_poly()) {
        let d = &a - &b;
        let (&(q, t), _) = d.terms().next().expect("nonzero difference");
        return Diff {
            content,
            q: Some(q),
            t: Some(t),
            lhs: a.coeff(q, t).to_string(),
            rhs: b.coeff(q, t).to_string(),
        };
    }
    Diff { content, q: None, t: None, lhs: x.to_string(), rhs: y.to_string() }
}

/// Counts written as the last JSON line of a suite run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub ms: u64,
}

impl Summary {
    pub fn of(reports: &[CheckReport], ms: u64) -> Self {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        Summary {
            total: reports.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skipped: count(Status::Skipped),
            ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&serde_json::json!({ "summary": self })).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.as_str()));
        }
        assert!("nope".parse::<CheckName>().is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = Outcome::skipped("guard").into_report(
            CheckSpec::new(CheckName::ValleyDelta, Params::mnk(0, 3, 3)),
            5,
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["check"], "valley_delta");
        assert_eq!(v["params"]["n"], 3);
        assert!(v["params"].get("r").is_none());
        assert_eq!(v["status"], "skipped");
        assert_eq!(v["ms"], 5);
        let back: CheckReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
