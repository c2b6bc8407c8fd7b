//! Diagonal words, schedule numbers and the product formula for the
//! `q,t`-enumerator of valley-decorated square paths with a fixed diagonal
//! word and shift, together with the insertion procedure that constructs
//! those paths one run at a time.

mod insertion;
mod word;

use std::collections::BTreeMap;

use crate::qt::{choose2, q_binomial, QTPoly};

pub use insertion::insertion_generate;
pub use word::{maj, MarkedEntry, MarkedWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScheduleError {
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("no path has diagonal word {word:?} and shift {shift}")]
    UnrealizableWord { word: String, shift: u32 },
    #[error("cannot parse marked word: {0}")]
    Parse(String),
}

/// Letter counts of one run, split by decoration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunMultiplicity {
    /// `z_i(c)`: undecorated occurrences of `c`.
    pub plain: BTreeMap<u32, u32>,
    /// `z_i^•(c)`: decorated occurrences of `c`.
    pub decorated: BTreeMap<u32, u32>,
}

impl RunMultiplicity {
    pub fn z(&self, c: u32) -> u32 {
        self.plain.get(&c).copied().unwrap_or(0)
    }

    pub fn z_dec(&self, c: u32) -> u32 {
        self.decorated.get(&c).copied().unwrap_or(0)
    }

    /// `#rho~_i`, the undecorated letters.
    pub fn tilde_size(&self) -> u32 {
        self.plain.values().sum()
    }

    /// `#rho'_i`, the undecorated positive letters.
    pub fn prime_size(&self) -> u32 {
        self.tilde_size() - self.z(0)
    }

    /// Undecorated letters smaller than `c`, with multiplicity.
    fn below(&self, c: u32) -> u32 {
        self.plain.range(..c).map(|(_, &m)| m).sum()
    }

    /// Undecorated letters larger than `c`, with multiplicity.
    fn above(&self, c: u32) -> u32 {
        self.plain.range(c + 1..).map(|(_, &m)| m).sum()
    }
}

/// Multiplicities of `rho_0, ..., rho_l` (indexed by diagonal).
pub fn run_multiplicities(z: &MarkedWord) -> Vec<RunMultiplicity> {
    (0..z.num_runs())
        .map(|i| {
            let mut r = RunMultiplicity::default();
            for e in z.run(i) {
                let slot = if e.decorated { &mut r.decorated } else { &mut r.plain };
                *slot.entry(e.label).or_insert(0) += 1;
            }
            r
        })
        .collect()
}

fn runs_at(runs: &[RunMultiplicity], i: isize) -> Option<&RunMultiplicity> {
    usize::try_from(i).ok().and_then(|i| runs.get(i))
}

/// `(w_{i,s}(c), w^•_{i,s}(c))`. The decorated number is `-1` only for
/// `c = 0`, `i = s - 1` with nothing to count; such data is unrealizable.
pub fn schedule_numbers(
    z: &MarkedWord,
    s: u32,
    i: usize,
    c: u32,
) -> Result<(u32, i64), ScheduleError> {
    let runs = run_multiplicities(z);
    let max = runs.len().saturating_sub(1);
    if i >= runs.len() {
        return Err(ScheduleError::IndexOutOfRange { index: i, max });
    }
    if s as usize > max {
        return Err(ScheduleError::IndexOutOfRange { index: s as usize, max });
    }
    Ok(numbers(&runs, s as usize, i, c))
}

fn numbers(runs: &[RunMultiplicity], s: usize, i: usize, c: u32) -> (u32, i64) {
    let ii = i as isize;
    let below = |j: isize| runs_at(runs, j).map_or(0, |r| r.below(c));
    let above = |j: isize| runs_at(runs, j).map_or(0, |r| r.above(c));
    let w = if i > s {
        above(ii) + below(ii - 1)
    } else if i == s {
        above(ii) + u32::from(c != 0)
    } else {
        below(ii) + above(ii + 1)
    };
    let correction = i64::from(c == 0 && i + 1 == s);
    let w_dec = (below(ii) + above(ii + 1)) as i64 - correction;
    (w, w_dec)
}

/// `b(z,s) = sum_{i<s} (#rho'_i - z^•_{i-1}(0))`.
pub fn b_exponent(z: &MarkedWord, s: u32) -> i64 {
    let runs = run_multiplicities(z);
    (0..s as usize)
        .map(|i| {
            let prime = runs.get(i).map_or(0, |r| r.prime_size()) as i64;
            let dec_zero = if i == 0 { 0 } else { runs.get(i - 1).map_or(0, |r| r.z_dec(0)) as i64 };
            prime - dec_zero
        })
        .sum()
}

/// Closed-form `q,t`-enumerator of the paths with diagonal word `z` and
/// shift `s`, together with the content of `x^z` (indexed by `label - 1`).
/// Unrealizable data yields `0` whenever a factor vanishes.
pub fn schedule_product(z: &MarkedWord, s: u32) -> (QTPoly, Vec<u32>) {
    let content = z.content();
    let runs = run_multiplicities(z);
    if z.is_empty() {
        let p = if s == 0 { QTPoly::one() } else { QTPoly::zero() };
        return (p, content);
    }
    if s as usize >= runs.len() {
        return (QTPoly::zero(), content);
    }
    let b = b_exponent(z, s);
    let Ok(b) = u32::try_from(b) else {
        return (QTPoly::zero(), content);
    };
    let mut q_exp = b;
    // q-binomial factors `[n choose k]_q`
    let mut factors: Vec<(i64, i64)> = Vec::new();
    for (i, r) in runs.iter().enumerate() {
        let labels: std::collections::BTreeSet<u32> =
            r.plain.keys().chain(r.decorated.keys()).copied().collect();
        for c in labels {
            let (w, w_dec) = numbers(&runs, s as usize, i, c);
            let zc = r.z(c) as i64;
            if zc > 0 {
                factors.push((w as i64 + zc - 1, zc));
            }
            let zd = r.z_dec(c);
            if zd > 0 {
                q_exp += choose2(zd);
                factors.push((w_dec, zd as i64));
            }
        }
    }
    if factors.iter().any(|&(n, k)| n < 0 || k > n) {
        return (QTPoly::zero(), content);
    }
    let maj = z.maj();
    let product = match dense_product(&factors) {
        Some(coeffs) => QTPoly::from_counts(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(d, &c)| ((d as u32 + q_exp, maj), c as i64)),
        ),
        None => factors
            .iter()
            .fold(QTPoly::one(), |acc, &(n, k)| &acc * &q_binomial(n, k))
            .shift(q_exp, maj),
    };
    (product, content)
}

/// `prod [n choose k]_q` as dense coefficients, or `None` on overflow.
fn dense_product(factors: &[(i64, i64)]) -> Option<Vec<i128>> {
    let mut acc: Vec<i128> = vec![1];
    for &(n, k) in factors {
        let k = k.min(n - k);
        // multiply by (1 - q^{n-j}) and divide by (1 - q^{j+1}), j < k
        for j in 0..k {
            let a = (n - j) as usize;
            acc.resize(acc.len() + a, 0);
            for d in (a..acc.len()).rev() {
                acc[d] = acc[d].checked_sub(acc[d - a])?;
            }
            let b = (j + 1) as usize;
            for d in b..acc.len() {
                acc[d] = acc[d].checked_add(acc[d - b])?;
            }
            while acc.len() > 1 && acc[acc.len() - 1] == 0 {
                acc.pop();
            }
        }
    }
    acc.iter().all(|&c| i64::try_from(c).is_ok()).then_some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> MarkedWord {
        s.parse().unwrap()
    }

    const SAMPLE: &str = "1 2 4 | 3 | 1* 4 | 1 1*";

    #[test]
    fn dense_product_matches_q_binomials() {
        let factors = [(5, 2), (3, 0), (7, 3), (4, 4), (6, 1)];
        for end in 0..=factors.len() {
            let dense = dense_product(&factors[..end]).unwrap();
            let expected = factors[..end].iter().fold(QTPoly::one(), |acc, &(n, k)| &acc * &q_binomial(n, k));
            let got = QTPoly::from_counts(dense.iter().enumerate().map(|(d, &c)| ((d as u32, 0), c as i64)));
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn multiplicities_of_the_sample_word() {
        let r = run_multiplicities(&w(SAMPLE));
        assert_eq!((r[0].z(1), r[0].z_dec(1)), (1, 1));
        assert_eq!((r[1].z(4), r[1].z_dec(1)), (1, 1));
        assert_eq!(r[2].z(3), 1);
        assert_eq!((r[3].z(1), r[3].z(2), r[3].z(4)), (1, 1, 1));
        assert!(run_multiplicities(&MarkedWord::empty()).is_empty());
        let single = run_multiplicities(&w("1 1 2"));
        assert_eq!((single[0].z(1), single[0].z(2)), (2, 1));
    }

    #[test]
    fn schedule_number_examples() {
        let z = w("1 2");
        assert_eq!(schedule_numbers(&z, 0, 0, 1).unwrap().0, 2);
        assert_eq!(schedule_numbers(&z, 0, 0, 2).unwrap().0, 1);
        assert_eq!(schedule_numbers(&w(SAMPLE), 3, 3, 4).unwrap().0, 0 + 1);
        // the bonus slot vanishes for c = 0 on the main diagonal
        assert_eq!(schedule_numbers(&w("2 3"), 0, 0, 0).unwrap().0, 2);
        assert!(matches!(
            schedule_numbers(&z, 0, 1, 1),
            Err(ScheduleError::IndexOutOfRange { .. })
        ));
        assert!(schedule_numbers(&z, 1, 0, 1).is_err());
    }

    #[test]
    fn b_exponent_examples() {
        assert_eq!(b_exponent(&w(SAMPLE), 0), 0);
        assert_eq!(b_exponent(&w(SAMPLE), 3), 3);
        for s in 1..=3 {
            let z = w(SAMPLE);
            let runs = run_multiplicities(&z);
            let dec0 = if s >= 2 { runs[s - 2].z_dec(0) as i64 } else { 0 };
            assert_eq!(
                b_exponent(&z, s as u32) - b_exponent(&z, s as u32 - 1),
                runs[s - 1].prime_size() as i64 - dec0
            );
        }
    }

    #[test]
    fn product_of_a_single_run() {
        let (p, content) = schedule_product(&w("1 2"), 0);
        assert_eq!(p, "1 + q".parse().unwrap());
        assert_eq!(content, vec![1, 1]);
        assert!(schedule_product(&w("3"), 0).0.is_one());
        assert!(schedule_product(&MarkedWord::empty(), 0).0.is_one());
        assert!(schedule_product(&w("1 2"), 1).0.is_zero());
    }
}
