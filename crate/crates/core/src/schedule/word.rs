//! Marked diagonal words.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ScheduleError;

/// A letter of a marked word; `•c` sorts strictly between `c` and `c + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedEntry {
    pub label: u32,
    pub decorated: bool,
}

impl MarkedEntry {
    pub fn plain(label: u32) -> Self {
        Self { label, decorated: false }
    }

    pub fn marked(label: u32) -> Self {
        Self { label, decorated: true }
    }
}

impl Ord for MarkedEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.label, self.decorated).cmp(&(other.label, other.decorated))
    }
}

impl PartialOrd for MarkedEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.decorated {
            write!(f, "{}*", self.label)
        } else {
            write!(f, "{}", self.label)
        }
    }
}

/// Runs `rho_l, ..., rho_0`, highest diagonal first. Each run is kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedWord {
    runs: Vec<Vec<MarkedEntry>>,
}

impl MarkedWord {
    /// Builds a word from runs given highest diagonal first; runs are sorted.
    pub fn new(mut runs: Vec<Vec<MarkedEntry>>) -> Self {
        for r in runs.iter_mut() {
            r.sort();
        }
        Self { runs }
    }

    /// Same as [`MarkedWord::new`] but with runs indexed by diagonal (`rho_0` first).
    pub fn from_diagonals(mut diagonals: Vec<Vec<MarkedEntry>>) -> Self {
        diagonals.reverse();
        Self::new(diagonals)
    }

    pub fn empty() -> Self {
        Self { runs: Vec::new() }
    }

    /// Number of runs, `l + 1`.
    pub fn num_runs(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Runs in storage order, `rho_l` first.
    pub fn runs(&self) -> &[Vec<MarkedEntry>] {
        &self.runs
    }

    /// `rho_i`; empty when `i` is out of range.
    pub fn run(&self, i: usize) -> &[MarkedEntry] {
        if i < self.runs.len() {
            &self.runs[self.runs.len() - 1 - i]
        } else {
            &[]
        }
    }

    /// The concatenation `rho_l ... rho_0`.
    pub fn letters(&self) -> Vec<MarkedEntry> {
        self.runs.iter().flatten().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.runs.iter().map(Vec::len).sum()
    }

    /// Multiplicities of the positive labels, indexed by `label - 1`.
    pub fn content(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for e in self.runs.iter().flatten() {
            if e.label > 0 {
                let i = e.label as usize - 1;
                if out.len() <= i {
                    out.resize(i + 1, 0);
                }
                out[i] += 1;
            }
        }
        out
    }

    pub fn maj(&self) -> u32 {
        maj(&self.letters())
    }
}

/// Major index of a sequence under the marked order.
pub fn maj(word: &[MarkedEntry]) -> u32 {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u32 + 1)
        .sum()
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let runs: Vec<String> = self
            .runs
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&runs.join(" | "))
    }
}

impl FromStr for MarkedWord {
    type Err = ScheduleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut runs = Vec::new();
        for run in s.split('|') {
            let mut entries = Vec::new();
            for tok in run.split_whitespace() {
                let (digits, decorated) = match tok.strip_suffix('*') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                let label = digits
                    .parse::<u32>()
                    .map_err(|_| ScheduleError::Parse(format!("bad letter {tok:?}")))?;
                entries.push(MarkedEntry { label, decorated });
            }
            runs.push(entries);
        }
        Ok(Self::new(runs))
    }
}
