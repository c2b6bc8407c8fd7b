//! Integer partitions and their Ferrers-diagram statistics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a partition: {0:?}")]
pub struct NotAPartition(pub Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, NotAPartition> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(NotAPartition(parts));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Self(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `n(mu) = sum (i-1) mu_i`.
    pub fn n(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u32 * p)
            .sum()
    }

    /// Cells `(row, col)`, zero-based, row `0` being the longest row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r as u32, c)))
    }

    /// Cells strictly to the right of `(row, col)`.
    pub fn arm(&self, row: u32, col: u32) -> u32 {
        self.0[row as usize] - col - 1
    }

    /// Cells strictly above `(row, col)` (French convention).
    pub fn leg(&self, row: u32, col: u32) -> u32 {
        self.0
            .iter()
            .skip(row as usize + 1)
            .filter(|&&p| p > col)
            .count() as u32
    }

    pub fn coarm(&self, _row: u32, col: u32) -> u32 {
        col
    }

    pub fn coleg(&self, row: u32, _col: u32) -> u32 {
        row
    }

    /// Multiplicity of each part size, indexed by the part.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.0.first().map(|&p| p as usize + 1).unwrap_or(1)];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                acc *= BigInt::from(i as u64) * BigInt::from(k as u64);
            }
        }
        acc
    }

    /// Union of parts (the power-sum product rule `p_a p_b = p_{a u b}`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }

    /// Dominance order: `self >= other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = NotAPartition;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = NotAPartition;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| NotAPartition(Vec::new()))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| NotAPartition(Vec::new()))?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_partitions() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(
            partitions(4).iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]
        );
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=8 {
            for p in partitions(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
        assert_eq!(Partition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
    }

    #[test]
    fn arm_leg_and_n() {
        let mu = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(mu.arm(0, 0), 2);
        assert_eq!(mu.leg(0, 0), 1);
        assert_eq!(mu.leg(0, 2), 0);
        assert_eq!(mu.arm(1, 1), 0);
        assert_eq!(mu.n(), 2);
        assert_eq!(mu.conjugate().n(), 4);
        assert_eq!(Partition::new(vec![2, 2]).unwrap().n(), 2);
    }

    #[test]
    fn centralizer_sizes() {
        let z = |v: Vec<u32>| Partition::new(v).unwrap().z();
        assert_eq!(z(vec![1, 1, 1]), BigInt::from(6));
        assert_eq!(z(vec![2, 1]), BigInt::from(2));
        assert_eq!(z(vec![3]), BigInt::from(3));
        assert_eq!(z(vec![2, 2, 1]), BigInt::from(8));
        // sum over partitions of n of n!/z = n!
        for n in 1..=7u32 {
            let total: num_rational::BigRational = partitions(n)
                .iter()
                .map(|p| num_rational::BigRational::new(BigInt::from(1), p.z()))
                .sum();
            assert_eq!(total, num_rational::BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!("[2,1]".parse::<Partition>().unwrap().parts(), &[2, 1]);
        assert!("[]".parse::<Partition>().unwrap().is_empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn dominance() {
        let a = Partition::new(vec![3, 1]).unwrap();
        let b = Partition::new(vec![2, 2]).unwrap();
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
    }
}
