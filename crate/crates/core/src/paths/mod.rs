//! Decorated, partially labelled square paths and their statistics.
//!
//! A path of size `n` is stored as its area word `a_1, ..., a_n` (row `i`
//! starts on the diagonal `y = x + a_i`) plus a label per row. Rows are
//! 1-based in the public API, matching how decorations are written.

mod area_word;
mod enumerate;
mod genpoly;
mod infinity;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::schedule::{MarkedEntry, MarkedWord};

pub use area_word::AreaWord;
pub use enumerate::{
    area_words, class_paths, count, enumerate, family_genpoly, paths_for_area_word, Family,
    FamilySpec,
};
pub(crate) use enumerate::for_each_combination;
pub use genpoly::{generating_polynomial, CoefficientDiff, GenPoly};
pub use infinity::{pull_zeros, push_zeros, InfinityPath, Label};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("invalid area word {0:?}")]
    InvalidAreaWord(Vec<i32>),
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("row {0} cannot carry a decoration of this kind")]
    InvalidDecoration(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid infinity encoding: {0}")]
    InvalidEncoding(String),
    #[error("generating polynomial is not symmetric: {0}")]
    Asymmetric(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecorationKind {
    Valley,
    Rise,
    None,
}

impl fmt::Display for DecorationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Valley => "valley",
            Self::Rise => "rise",
            Self::None => "none",
        })
    }
}

impl FromStr for DecorationKind {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "valley" => Ok(Self::Valley),
            "rise" => Ok(Self::Rise),
            "none" => Ok(Self::None),
            _ => Err(PathError::Parse(format!("unknown decoration kind {s:?}"))),
        }
    }
}

/// `-min a_i`, zero for the empty word.
pub fn shift(a: &AreaWord) -> u32 {
    a.shift()
}

/// Rows `i >= 2` with `a_i > a_{i-1}`.
pub fn rises(a: &AreaWord) -> Vec<usize> {
    a.rises()
}

/// Rows whose preceding east step can be commuted past them.
pub fn contractible_valleys(a: &AreaWord, labels: &[u32]) -> Vec<usize> {
    let e = a.entries();
    (0..e.len())
        .filter(|&i| is_contractible(e, labels, i))
        .map(|i| i + 1)
        .collect()
}

/// Zero-based contractibility test shared with the enumerators.
pub(crate) fn is_contractible(a: &[i32], w: &[u32], i: usize) -> bool {
    if i == 0 {
        a[0] < -1 || (a[0] == -1 && w[0] > 0)
    } else {
        a[i] < a[i - 1] || (a[i] == a[i - 1] && w[i] > w[i - 1])
    }
}

/// Columns increase upwards, a row starting on the main diagonal first is
/// positive, and the base diagonal carries a positive label.
pub(crate) fn labelling_error(a: &[i32], w: &[u32]) -> Option<String> {
    if a.is_empty() {
        return None;
    }
    if a[0] == 0 && w[0] == 0 {
        return Some("row 1 starts on the main diagonal with label 0".into());
    }
    for i in 1..a.len() {
        if a[i] > a[i - 1] && w[i] <= w[i - 1] {
            return Some(format!("column not increasing at row {}", i + 1));
        }
    }
    let low = *a.iter().min().unwrap();
    if !a.iter().zip(w).any(|(&x, &l)| x == low && l > 0) {
        return Some("no positive label on the base diagonal".into());
    }
    None
}

/// `#{j > i : (i, j) is a primary or secondary inversion}` for each `i`.
pub(crate) fn inversions_starting_at(a: &[i32], w: &[u32]) -> Vec<u32> {
    let n = a.len();
    let mut out = vec![0; n];
    for i in 0..n {
        for j in i + 1..n {
            if (a[i] == a[j] && w[i] < w[j]) || (a[i] == a[j] + 1 && w[i] > w[j]) {
                out[i] += 1;
            }
        }
    }
    out
}

/// A labelled square path with an optional set of decorated rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PathRecord", into = "PathRecord")]
pub struct DecoratedPath {
    area_word: AreaWord,
    labels: Vec<u32>,
    kind: DecorationKind,
    decorations: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PathRecord {
    area_word: Vec<i32>,
    labels: Vec<u32>,
    kind: DecorationKind,
    decorations: Vec<usize>,
}

impl TryFrom<PathRecord> for DecoratedPath {
    type Error = PathError;
    fn try_from(r: PathRecord) -> Result<Self, PathError> {
        DecoratedPath::new(AreaWord::new(r.area_word)?, r.labels, r.kind, r.decorations)
    }
}

impl From<DecoratedPath> for PathRecord {
    fn from(p: DecoratedPath) -> Self {
        PathRecord {
            area_word: p.area_word.entries().to_vec(),
            labels: p.labels,
            kind: p.kind,
            decorations: p.decorations,
        }
    }
}

impl DecoratedPath {
    pub fn new(
        area_word: AreaWord,
        labels: Vec<u32>,
        kind: DecorationKind,
        mut decorations: Vec<usize>,
    ) -> Result<Self, PathError> {
        if labels.len() != area_word.len() {
            return Err(PathError::LabelCountMismatch {
                expected: area_word.len(),
                got: labels.len(),
            });
        }
        if let Some(msg) = labelling_error(area_word.entries(), &labels) {
            return Err(PathError::InvalidLabelling(msg));
        }
        decorations.sort_unstable();
        decorations.dedup();
        let legal = match kind {
            DecorationKind::Valley => contractible_valleys(&area_word, &labels),
            DecorationKind::Rise => area_word.rises(),
            DecorationKind::None => Vec::new(),
        };
        if let Some(&bad) = decorations.iter().find(|d| !legal.contains(d)) {
            return Err(PathError::InvalidDecoration(bad));
        }
        Ok(Self { area_word, labels, kind, decorations })
    }

    pub fn undecorated(area_word: AreaWord, labels: Vec<u32>) -> Result<Self, PathError> {
        Self::new(area_word, labels, DecorationKind::None, Vec::new())
    }

    pub fn empty() -> Self {
        Self {
            area_word: AreaWord::empty(),
            labels: Vec::new(),
            kind: DecorationKind::None,
            decorations: Vec::new(),
        }
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(
        area_word: AreaWord,
        labels: Vec<u32>,
        kind: DecorationKind,
        decorations: Vec<usize>,
    ) -> Self {
        Self { area_word, labels, kind, decorations }
    }

    pub fn area_word(&self) -> &AreaWord {
        &self.area_word
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn kind(&self) -> DecorationKind {
        self.kind
    }

    /// Decorated rows, 1-based and increasing.
    pub fn decorations(&self) -> &[usize] {
        &self.decorations
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn zeros(&self) -> usize {
        self.labels.iter().filter(|&&l| l == 0).count()
    }

    pub fn shift(&self) -> u32 {
        self.area_word.shift()
    }

    pub fn contractible_valleys(&self) -> Vec<usize> {
        contractible_valleys(&self.area_word, &self.labels)
    }

    pub fn rises(&self) -> Vec<usize> {
        self.area_word.rises()
    }

    fn valley_decorations(&self) -> &[usize] {
        if self.kind == DecorationKind::Valley {
            &self.decorations
        } else {
            &[]
        }
    }

    /// Sum of `a_i + s` over the rows that are not decorated rises.
    pub fn area(&self) -> u32 {
        let s = self.shift() as i32;
        let skip: &[usize] = if self.kind == DecorationKind::Rise {
            &self.decorations
        } else {
            &[]
        };
        self.area_word
            .entries()
            .iter()
            .enumerate()
            .filter(|(i, _)| !skip.contains(&(i + 1)))
            .map(|(_, &a)| (a + s) as u32)
            .sum()
    }

    /// Inversions whose left row is not a decorated valley, plus bonus,
    /// minus the number of decorated valleys. Rise decorations do not
    /// affect it.
    pub fn dinv(&self) -> i64 {
        let a = self.area_word.entries();
        let dv = self.valley_decorations();
        let inv = inversions_starting_at(a, &self.labels);
        let primary_secondary: i64 = inv
            .iter()
            .enumerate()
            .filter(|(j, _)| !dv.contains(&(j + 1)))
            .map(|(_, &x)| x as i64)
            .sum();
        let bonus = a
            .iter()
            .zip(&self.labels)
            .filter(|(&x, &l)| x < 0 && l > 0)
            .count() as i64;
        primary_secondary + bonus - dv.len() as i64
    }

    /// Undecorated positive labels on the base diagonal.
    pub fn touching(&self) -> u32 {
        let a = self.area_word.entries();
        let low = -(self.shift() as i32);
        let dv = self.valley_decorations();
        (0..a.len())
            .filter(|&i| a[i] == low && self.labels[i] > 0 && !dv.contains(&(i + 1)))
            .count() as u32
    }

    /// Diagonal word; only valley decorations are marked.
    pub fn diagonal_word(&self) -> MarkedWord {
        diagonal_word_raw(&self.area_word, &self.labels, self.valley_decorations())
    }

    /// Multiplicity of each positive label, indexed by `label - 1`.
    pub fn content(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for &l in &self.labels {
            if l > 0 {
                let i = l as usize - 1;
                if out.len() <= i {
                    out.resize(i + 1, 0);
                }
                out[i] += 1;
            }
        }
        out
    }

    pub fn content_partition(&self) -> Partition {
        Partition::from_unsorted(self.content())
    }

    /// `areaword=[..]; labels=[..]; kind=..; dec=[..]`.
    pub fn to_line(&self) -> String {
        fn list<T: ToString>(v: &[T]) -> String {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
        format!(
            "areaword=[{}]; labels=[{}]; kind={}; dec=[{}]",
            list(self.area_word.entries()),
            list(&self.labels),
            self.kind,
            list(&self.decorations)
        )
    }
}

/// Diagonal word of arbitrary row data; decorations are not validated.
pub fn diagonal_word_raw(area: &AreaWord, labels: &[u32], decorated: &[usize]) -> MarkedWord {
    let s = area.shift() as i32;
    let top = area.entries().iter().map(|&a| a + s).max();
    let Some(top) = top else {
        return MarkedWord::empty();
    };
    let mut diagonals = vec![Vec::new(); top as usize + 1];
    for (i, (&a, &l)) in area.entries().iter().zip(labels).enumerate() {
        diagonals[(a + s) as usize].push(MarkedEntry {
            label: l,
            decorated: decorated.contains(&(i + 1)),
        });
    }
    MarkedWord::from_diagonals(diagonals)
}

pub fn area(p: &DecoratedPath) -> u32 {
    p.area()
}

pub fn dinv(p: &DecoratedPath) -> i64 {
    p.dinv()
}

pub fn diagonal_word(p: &DecoratedPath) -> MarkedWord {
    p.diagonal_word()
}

pub fn maj(z: &MarkedWord) -> u32 {
    z.maj()
}

impl fmt::Display for DecoratedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

impl FromStr for DecoratedPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut area = None;
        let mut labels = None;
        let mut kind = DecorationKind::None;
        let mut dec = Vec::new();
        for field in s.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| PathError::Parse(format!("missing '=' in {field:?}")))?;
            match key.trim() {
                "areaword" => area = Some(parse_list::<i32>(value)?),
                "labels" => labels = Some(parse_list::<u32>(value)?),
                "kind" => kind = value.trim().parse()?,
                "dec" => dec = parse_list::<usize>(value)?,
                other => return Err(PathError::Parse(format!("unknown field {other:?}"))),
            }
        }
        let area = area.ok_or_else(|| PathError::Parse("missing areaword".into()))?;
        let labels = labels.ok_or_else(|| PathError::Parse("missing labels".into()))?;
        DecoratedPath::new(AreaWord::new(area)?, labels, kind, dec)
    }
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, PathError> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| PathError::Parse(format!("expected [..], got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| PathError::Parse(format!("bad entry {x:?}")))
        })
        .collect()
}
