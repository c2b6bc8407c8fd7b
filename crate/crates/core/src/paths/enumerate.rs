//! Exhaustive enumeration of the path families.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::genpoly::GenPoly;
use super::{
    inversions_starting_at, is_contractible, labelling_error, AreaWord, DecoratedPath,
    DecorationKind, PathError,
};
use crate::partition::partitions;
use crate::qt::QTPoly;
use crate::schedule::{MarkedEntry, MarkedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Labelled square paths.
    Lsq,
    /// Labelled Dyck paths.
    Ld,
    /// Square paths with an undecorated positive label on the base diagonal.
    #[serde(rename = "lsqprime")]
    LsqPrime,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Lsq => "lsq",
            Self::Ld => "ld",
            Self::LsqPrime => "lsqprime",
        })
    }
}

impl FromStr for Family {
    type Err = PathError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lsq" => Ok(Self::Lsq),
            "ld" => Ok(Self::Ld),
            "lsqprime" => Ok(Self::LsqPrime),
            _ => Err(PathError::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// Which objects to enumerate: `m` zero labels, `n` positive ones, `k`
/// decorations of the given kind, an optional touching number, and the label
/// alphabet `{0, ..., N}` (default `N = n`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub kind: DecorationKind,
    pub touching: Option<u32>,
    pub alphabet_max: Option<u32>,
}

impl FamilySpec {
    pub fn new(family: Family, m: u32, n: u32, k: u32, kind: DecorationKind) -> Self {
        Self { family, m, n, k, kind, touching: None, alphabet_max: None }
    }

    pub fn valley(family: Family, m: u32, n: u32, k: u32) -> Self {
        Self::new(family, m, n, k, DecorationKind::Valley)
    }

    pub fn rise(family: Family, m: u32, n: u32, k: u32) -> Self {
        Self::new(family, m, n, k, DecorationKind::Rise)
    }

    pub fn with_touching(mut self, r: u32) -> Self {
        self.touching = Some(r);
        self
    }

    pub fn with_alphabet(mut self, max_label: u32) -> Self {
        self.alphabet_max = Some(max_label);
        self
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet_max.unwrap_or(self.n)
    }

    pub fn size(&self) -> usize {
        (self.m + self.n) as usize
    }

    pub fn validate(&self) -> Result<(), PathError> {
        if self.kind == DecorationKind::None && self.k > 0 {
            return Err(PathError::InvalidParams("k > 0 needs a decoration kind".into()));
        }
        if self.family == Family::LsqPrime && self.kind == DecorationKind::Rise {
            return Err(PathError::InvalidParams(
                "lsqprime is defined through valley decorations".into(),
            ));
        }
        if self.alphabet() < self.n {
            return Err(PathError::InvalidParams(format!(
                "alphabet {{0..{}}} is smaller than n = {}",
                self.alphabet(),
                self.n
            )));
        }
        Ok(())
    }
}

/// Area words of the family, in increasing order.
pub fn area_words(spec: &FamilySpec) -> Vec<AreaWord> {
    let mut words = AreaWord::all(spec.size());
    if spec.family == Family::Ld {
        words.retain(|w| w.is_dyck());
    }
    words
}

/// Calls `f` with each k-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Row data shared by every decoration subset of one labelled path.
struct Rows<'a> {
    a: &'a [i32],
    w: &'a [u32],
    low: i32,
}

impl Rows<'_> {
    fn legal(&self, kind: DecorationKind) -> Vec<usize> {
        match kind {
            DecorationKind::Valley => (0..self.a.len())
                .filter(|&i| is_contractible(self.a, self.w, i))
                .collect(),
            DecorationKind::Rise => (1..self.a.len()).filter(|&i| self.a[i] > self.a[i - 1]).collect(),
            DecorationKind::None => Vec::new(),
        }
    }

    fn base_positive(&self, i: usize) -> bool {
        self.a[i] == self.low && self.w[i] > 0
    }

    /// Does the decoration subset `dec` (zero-based rows) pass the family
    /// and touching filters?
    fn accepts(&self, spec: &FamilySpec, dec: &[usize]) -> bool {
        if spec.touching.is_none() && spec.family != Family::LsqPrime {
            return true;
        }
        let valley = spec.kind == DecorationKind::Valley;
        let r = (0..self.a.len())
            .filter(|&i| self.base_positive(i) && !(valley && dec.contains(&i)))
            .count() as u32;
        if spec.family == Family::LsqPrime && r == 0 {
            return false;
        }
        spec.touching.map_or(true, |t| t == r)
    }
}

/// Labellings of `a` over `{0..=max}` with exactly `zeros` zeros, in
/// lexicographic order, satisfying the column and base-diagonal conditions.
fn labellings(a: &[i32], max: u32, zeros: usize, mut f: impl FnMut(&[u32])) {
    fn rec(
        a: &[i32],
        max: u32,
        zeros_left: usize,
        cur: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        let i = cur.len();
        if i == a.len() {
            if zeros_left == 0 && labelling_error(a, cur).is_none() {
                f(cur);
            }
            return;
        }
        let rows_left = a.len() - i;
        let lo = if i == 0 {
            u32::from(a[0] == 0)
        } else if a[i] > a[i - 1] {
            cur[i - 1] + 1
        } else {
            0
        };
        for v in lo..=max {
            if v == 0 && zeros_left == 0 {
                continue;
            }
            if v > 0 && zeros_left >= rows_left {
                // every remaining row must be a zero
                break;
            }
            cur.push(v);
            rec(a, max, zeros_left - usize::from(v == 0), cur, f);
            cur.pop();
        }
    }
    rec(a, max, zeros, &mut Vec::with_capacity(a.len()), &mut f);
}

/// Labellings with the exact multiset of labels given by `counts[v]`.
fn labellings_with_content(a: &[i32], counts: &mut [u32], mut f: impl FnMut(&[u32])) {
    fn rec(a: &[i32], counts: &mut [u32], cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        let i = cur.len();
        if i == a.len() {
            if labelling_error(a, cur).is_none() {
                f(cur);
            }
            return;
        }
        let lo = if i == 0 {
            u32::from(a[0] == 0)
        } else if a[i] > a[i - 1] {
            cur[i - 1] + 1
        } else {
            0
        };
        for v in lo as usize..counts.len() {
            if counts[v] == 0 {
                continue;
            }
            counts[v] -= 1;
            cur.push(v as u32);
            rec(a, counts, cur, f);
            cur.pop();
            counts[v] += 1;
        }
    }
    rec(a, counts, &mut Vec::with_capacity(a.len()), &mut f);
}

/// Every path of the family on one area word, in increasing order.
pub fn paths_for_area_word(aw: &AreaWord, spec: &FamilySpec) -> Vec<DecoratedPath> {
    let mut out = Vec::new();
    let a = aw.entries();
    let low = -(aw.shift() as i32);
    labellings(a, spec.alphabet(), spec.m as usize, |w| {
        let rows = Rows { a, w, low };
        let legal = rows.legal(spec.kind);
        let mut dec = Vec::with_capacity(spec.k as usize);
        for_each_combination(legal.len(), spec.k as usize, |c| {
            dec.clear();
            dec.extend(c.iter().map(|&j| legal[j]));
            if rows.accepts(spec, &dec) {
                out.push(DecoratedPath::from_parts(
                    aw.clone(),
                    w.to_vec(),
                    spec.kind,
                    dec.iter().map(|&j| j + 1).collect(),
                ));
            }
        });
    });
    out
}

/// Streams the whole family in lexicographic order of (area word, labels,
/// decorations).
pub fn enumerate(spec: &FamilySpec) -> Result<impl Iterator<Item = DecoratedPath>, PathError> {
    spec.validate()?;
    let spec = spec.clone();
    Ok(area_words(&spec)
        .into_iter()
        .flat_map(move |aw| paths_for_area_word(&aw, &spec)))
}

pub fn count(spec: &FamilySpec) -> Result<u64, PathError> {
    spec.validate()?;
    Ok(area_words(spec)
        .par_iter()
        .map(|aw| paths_for_area_word(aw, spec).len() as u64)
        .sum())
}

type Tally = HashMap<(i64, u32), i64>;

fn merge(mut x: Tally, y: Tally) -> Tally {
    for (key, c) in y {
        *x.entry(key).or_insert(0) += c;
    }
    x
}

fn tally_to_poly(t: &Tally) -> QTPoly {
    QTPoly::from_counts(t.iter().map(|(&(d, a), &c)| {
        let d = u32::try_from(d).expect("dinv is non-negative");
        ((d, a), c)
    }))
}

/// Adds `q^dinv t^area` for every admissible decoration of one labelled path.
fn tally_labelled(a: &[i32], w: &[u32], spec: &FamilySpec, low: i32, acc: &mut Tally) {
    let rows = Rows { a, w, low };
    let inv = inversions_starting_at(a, w);
    let bonus = a.iter().zip(w).filter(|(&x, &l)| x < 0 && l > 0).count() as i64;
    let base = inv.iter().map(|&x| x as i64).sum::<i64>() + bonus;
    let area_full: u32 = a.iter().map(|&x| (x - low) as u32).sum();
    let legal = rows.legal(spec.kind);
    let mut dec = Vec::with_capacity(spec.k as usize);
    for_each_combination(legal.len(), spec.k as usize, |c| {
        dec.clear();
        dec.extend(c.iter().map(|&j| legal[j]));
        if !rows.accepts(spec, &dec) {
            return;
        }
        let (dinv, area) = match spec.kind {
            DecorationKind::Rise => (
                base,
                area_full - dec.iter().map(|&j| (a[j] - low) as u32).sum::<u32>(),
            ),
            _ => (
                base - dec.iter().map(|&j| inv[j] as i64 + 1).sum::<i64>(),
                area_full,
            ),
        };
        *acc.entry((dinv, area)).or_insert(0) += 1;
    });
}

/// Generating polynomial of the family, computed only on the label contents
/// that are partitions (labels `1..=l(lambda)` with multiplicities `lambda`).
/// This yields the monomial expansion directly when the family is symmetric;
/// [`super::generating_polynomial`] checks that symmetry.
pub fn family_genpoly(spec: &FamilySpec) -> Result<GenPoly, PathError> {
    spec.validate()?;
    let words = area_words(spec);
    let mut out = GenPoly::zero();
    for lambda in partitions(spec.n) {
        if lambda.len() as u32 > spec.alphabet() {
            continue;
        }
        let mut counts = vec![spec.m];
        counts.extend_from_slice(lambda.parts());
        let tally = words
            .par_iter()
            .map(|aw| {
                let mut acc = Tally::new();
                let a = aw.entries();
                let low = -(aw.shift() as i32);
                let mut counts = counts.clone();
                labellings_with_content(a, &mut counts, |w| tally_labelled(a, w, spec, low, &mut acc));
                acc
            })
            .reduce(Tally::new, merge);
        out.add_term(lambda, tally_to_poly(&tally));
    }
    Ok(out)
}

/// Every valley-decorated path with diagonal word `z` and shift `s`, by
/// brute force over area words with the right diagonal profile and all
/// arrangements of each run along its diagonal.
pub fn class_paths(z: &MarkedWord, s: u32) -> Vec<DecoratedPath> {
    let ell = z.num_runs();
    if s as usize >= ell.max(1) {
        return Vec::new();
    }
    let size = z.len();
    let profile: Vec<usize> = (0..ell).map(|i| z.run(i).len()).collect();
    let mut out = Vec::new();
    for aw in AreaWord::all(size) {
        if aw.shift() != s {
            continue;
        }
        let d = aw.diagonals();
        let mut seen = vec![0usize; ell];
        for &x in &d {
            if (x as usize) < ell {
                seen[x as usize] += 1;
            } else {
                seen.clear();
                break;
            }
        }
        if seen != profile {
            continue;
        }
        // remaining letters per diagonal, as (entry, multiplicity)
        let mut pools: Vec<Vec<(MarkedEntry, u32)>> = (0..ell)
            .map(|i| {
                let mut pool: Vec<(MarkedEntry, u32)> = Vec::new();
                for &e in z.run(i) {
                    match pool.last_mut() {
                        Some((last, c)) if *last == e => *c += 1,
                        _ => pool.push((e, 1)),
                    }
                }
                pool
            })
            .collect();
        let a = aw.entries();
        let mut labels = Vec::with_capacity(size);
        let mut dec = Vec::new();
        assign_class(a, &d, &mut pools, &mut labels, &mut dec, &mut |w, dv| {
            if labelling_error(a, w).is_some() {
                return;
            }
            if dv.iter().all(|&j| is_contractible(a, w, j)) {
                out.push(DecoratedPath::from_parts(
                    aw.clone(),
                    w.to_vec(),
                    DecorationKind::Valley,
                    dv.iter().map(|&j| j + 1).collect(),
                ));
            }
        });
    }
    out.sort();
    out
}

fn assign_class(
    a: &[i32],
    d: &[u32],
    pools: &mut [Vec<(MarkedEntry, u32)>],
    labels: &mut Vec<u32>,
    dec: &mut Vec<usize>,
    f: &mut dyn FnMut(&[u32], &[usize]),
) {
    let i = labels.len();
    if i == a.len() {
        f(labels, dec);
        return;
    }
    let di = d[i] as usize;
    for p in 0..pools[di].len() {
        let (e, c) = pools[di][p];
        if c == 0 {
            continue;
        }
        if i > 0 && a[i] > a[i - 1] && e.label <= labels[i - 1] {
            continue;
        }
        if e.decorated && !(i == 0 || a[i] <= a[i - 1]) {
            continue;
        }
        pools[di][p].1 -= 1;
        labels.push(e.label);
        if e.decorated {
            dec.push(i);
        }
        assign_class(a, d, pools, labels, dec, f);
        if e.decorated {
            dec.pop();
        }
        labels.pop();
        pools[di][p].1 += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::paths::generating_polynomial;

    fn all(spec: &FamilySpec) -> Vec<DecoratedPath> {
        enumerate(spec).unwrap().collect()
    }

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut n = 0;
        for_each_combination(3, 0, |_| n += 1);
        assert_eq!(n, 1);
        for_each_combination(2, 3, |_| n += 1);
        assert_eq!(n, 1);
    }

    #[test]
    fn single_row_dyck() {
        let spec = FamilySpec::valley(Family::Ld, 0, 1, 0).with_alphabet(3);
        let paths = all(&spec);
        assert_eq!(paths.iter().map(|p| p.labels()[0]).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn square_paths_of_size_two() {
        let spec = FamilySpec::valley(Family::Lsq, 0, 2, 0);
        let words: std::collections::BTreeSet<_> =
            all(&spec).iter().map(|p| p.area_word().clone()).collect();
        assert_eq!(words.len(), 3);
        assert_eq!(words.len(), AreaWord::all(2).len());
    }

    #[test]
    fn ld2_generating_polynomial() {
        let spec = FamilySpec::valley(Family::Ld, 0, 2, 0);
        let g = generating_polynomial(all(&spec)).unwrap();
        let p11 = Partition::new(vec![1, 1]).unwrap();
        let p2 = Partition::new(vec![2]).unwrap();
        assert_eq!(g.get(&p11), "1 + q + t".parse().unwrap());
        assert!(g.get(&p2).is_one());
        assert_eq!(family_genpoly(&spec).unwrap(), g);
        let lsq1 = generating_polynomial(all(&FamilySpec::valley(Family::Lsq, 0, 1, 0))).unwrap();
        let ld1 = generating_polynomial(all(&FamilySpec::valley(Family::Ld, 0, 1, 0))).unwrap();
        assert_eq!(lsq1, ld1);
        assert!(ld1.get(&Partition::new(vec![1]).unwrap()).is_one());
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for spec in [
            FamilySpec::valley(Family::Lsq, 1, 2, 1),
            FamilySpec::rise(Family::Lsq, 1, 2, 1),
            FamilySpec::valley(Family::LsqPrime, 0, 3, 1),
        ] {
            let paths = all(&spec);
            assert!(!paths.is_empty());
            assert!(paths.windows(2).all(|w| w[0] < w[1]));
            for p in &paths {
                let again = DecoratedPath::new(
                    p.area_word().clone(),
                    p.labels().to_vec(),
                    p.kind(),
                    p.decorations().to_vec(),
                )
                .unwrap();
                assert_eq!(&again, p);
                assert_eq!(p.decorations().len(), spec.k as usize);
                assert_eq!(p.zeros(), spec.m as usize);
            }
        }
    }

    #[test]
    fn fast_genpoly_matches_general_builder() {
        for (fam, kind) in [
            (Family::Lsq, DecorationKind::Valley),
            (Family::Ld, DecorationKind::Rise),
            (Family::LsqPrime, DecorationKind::Valley),
        ] {
            for (m, n, k) in [(0, 3, 1), (1, 2, 1), (1, 3, 0), (0, 3, 2)] {
                let spec = FamilySpec::new(fam, m, n, k, kind);
                let slow = generating_polynomial(all(&spec)).unwrap();
                assert_eq!(family_genpoly(&spec).unwrap(), slow, "{spec:?}");
                let touched = FamilySpec { touching: Some(1), ..spec.clone() };
                let slow = generating_polynomial(all(&touched)).unwrap();
                assert_eq!(family_genpoly(&touched).unwrap(), slow, "{touched:?}");
            }
        }
    }

    #[test]
    fn invalid_params() {
        assert!(enumerate(&FamilySpec::rise(Family::LsqPrime, 0, 2, 0)).is_err());
        assert!(enumerate(&FamilySpec::new(Family::Lsq, 0, 2, 1, DecorationKind::None)).is_err());
        assert!(enumerate(&FamilySpec::valley(Family::Lsq, 0, 3, 0).with_alphabet(2)).is_err());
    }

    #[test]
    fn empty_and_degenerate_sizes() {
        let empty = all(&FamilySpec::valley(Family::Lsq, 0, 0, 0));
        assert_eq!(empty, vec![DecoratedPath::from_parts(AreaWord::empty(), vec![], DecorationKind::Valley, vec![])]);
        assert!(all(&FamilySpec::valley(Family::Lsq, 2, 0, 0)).is_empty());
        assert!(all(&FamilySpec::valley(Family::Ld, 0, 3, 3)).is_empty());
    }

    #[test]
    fn class_paths_match_filtered_enumeration() {
        let spec = FamilySpec::valley(Family::Lsq, 1, 3, 1);
        let mut classes: HashMap<(MarkedWord, u32), Vec<DecoratedPath>> = HashMap::new();
        for p in all(&spec) {
            classes.entry((p.diagonal_word(), p.shift())).or_default().push(p);
        }
        for ((z, s), mut paths) in classes {
            // enumeration restricted to the alphabet {0..n}; class paths use z's labels
            paths.sort();
            assert_eq!(class_paths(&z, s), paths, "z={z} s={s}");
        }
    }
}
