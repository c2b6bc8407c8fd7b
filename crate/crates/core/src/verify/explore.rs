//! Labelled Dyck paths carrying decorated valleys and decorated rises at
//! once. The resulting series is only expected to be quasi-symmetric, so
//! this is an exploration and never part of the pass/fail suite.

use std::collections::{BTreeMap, HashMap};

use crate::paths::{enumerate, for_each_combination, Family, FamilySpec};
use crate::qt::QTPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedSeries {
    pub n: u32,
    pub valleys: u32,
    pub rises: u32,
    /// Coefficient of `x^c` for every content vector `c` of length `n`.
    pub by_content: BTreeMap<Vec<u32>, QTPoly>,
}

pub fn mixed_decorations(n: u32, valleys: u32, rises: u32) -> MixedSeries {
    let mut tally: HashMap<Vec<u32>, HashMap<(u32, u32), i64>> = HashMap::new();
    let spec = FamilySpec::valley(Family::Ld, 0, n, valleys);
    for p in enumerate(&spec).expect("valid family") {
        let a = p.area_word().entries();
        let dv = p.decorations();
        let free: Vec<usize> = p.rises().into_iter().filter(|i| !dv.contains(i)).collect();
        let dinv = u32::try_from(p.dinv()).expect("dinv is non-negative");
        let area = p.area();
        let mut content = p.content();
        content.resize(n as usize, 0);
        let entry = tally.entry(content).or_default();
        for_each_combination(free.len(), rises as usize, |set| {
            let lost: u32 = set.iter().map(|&j| a[free[j] - 1] as u32).sum();
            *entry.entry((dinv, area - lost)).or_insert(0) += 1;
        });
    }
    let by_content = tally
        .into_iter()
        .map(|(c, t)| (c, QTPoly::from_counts(t)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    MixedSeries { n, valleys, rises, by_content }
}

impl MixedSeries {
    fn coeff(&self, c: &[u32]) -> QTPoly {
        self.by_content.get(c).cloned().unwrap_or_else(QTPoly::zero)
    }

    /// Two contents related by a permutation with different coefficients.
    pub fn symmetry_witness(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut by_sorted: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
        let mut contents: Vec<Vec<u32>> = self.by_content.keys().cloned().collect();
        // include the permutations that never occur
        let mut extra = Vec::new();
        for c in &contents {
            let mut sorted = c.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            extra.push(sorted);
        }
        contents.extend(extra);
        contents.sort();
        contents.dedup();
        for c in contents {
            let mut sorted = c.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            match by_sorted.get(&sorted) {
                Some(rep) if self.coeff(rep) != self.coeff(&c) => return Some((rep.clone(), c)),
                Some(_) => {}
                None => {
                    by_sorted.insert(sorted, c);
                }
            }
        }
        None
    }

    /// Two contents with the same nonzero parts in the same order but
    /// different coefficients.
    pub fn quasi_symmetry_witness(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let mut by_comp: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
        let mut contents: Vec<Vec<u32>> = self.by_content.keys().cloned().collect();
        let packed: Vec<Vec<u32>> = contents
            .iter()
            .map(|c| {
                let mut v: Vec<u32> = c.iter().copied().filter(|&x| x > 0).collect();
                v.resize(c.len(), 0);
                v
            })
            .collect();
        contents.extend(packed);
        contents.sort();
        contents.dedup();
        for c in contents {
            let comp: Vec<u32> = c.iter().copied().filter(|&x| x > 0).collect();
            match by_comp.get(&comp) {
                Some(rep) if self.coeff(rep) != self.coeff(&c) => return Some((rep.clone(), c)),
                Some(_) => {}
                None => {
                    by_comp.insert(comp, c);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_kind_is_symmetric() {
        // only rises, or only valleys: the known symmetric families
        assert!(mixed_decorations(3, 0, 1).symmetry_witness().is_none());
        assert!(mixed_decorations(3, 1, 0).symmetry_witness().is_none());
    }

    #[test]
    fn mixed_series_is_quasi_symmetric() {
        let s = mixed_decorations(4, 1, 1);
        assert!(!s.by_content.is_empty());
        assert!(s.quasi_symmetry_witness().is_none());
    }
}
