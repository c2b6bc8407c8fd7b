//! Classical q-analogues: `[n]_q`, `[n]_q!`, Gaussian binomials and the
//! q-Pochhammer symbol.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::QTPoly;

fn from_q_coeffs(coeffs: &[BigInt]) -> QTPoly {
    QTPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, 0, BigRational::from_integer(c.clone()))),
    )
}

/// `[n]_q = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_analogue(n: u32) -> QTPoly {
    QTPoly::from_counts((0..n).map(|i| ((i, 0), 1)))
}

/// `[n]_t`.
pub fn t_analogue(n: u32) -> QTPoly {
    q_analogue(n).swap_qt()
}

pub fn q_factorial(n: u32) -> QTPoly {
    (1..=n).fold(QTPoly::one(), |acc, k| &acc * &q_analogue(k))
}

/// Gaussian binomial `[n choose k]_q`; zero when `k < 0`, `k > n` or `n < 0`.
pub fn q_binomial(n: i64, k: i64) -> QTPoly {
    if n < 0 || k < 0 || k > n {
        return QTPoly::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // Pascal rows `[m choose j]_q` for j <= k, stored as dense q-coefficients.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for m in 1..=n {
        let top = k.min(m);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(top + 1);
        for j in 0..=top {
            // [m, j] = [m-1, j-1] + q^j [m-1, j]
            let mut entry: Vec<BigInt> = Vec::new();
            if j >= 1 {
                entry = row[j - 1].clone();
            }
            if j < row.len() {
                let shifted = &row[j];
                if entry.len() < shifted.len() + j {
                    entry.resize(shifted.len() + j, BigInt::zero());
                }
                for (d, c) in shifted.iter().enumerate() {
                    entry[d + j] += c;
                }
            }
            next.push(entry);
        }
        row = next;
    }
    from_q_coeffs(&row[k])
}

/// `t`-version of [`q_binomial`].
pub fn t_binomial(n: i64, k: i64) -> QTPoly {
    q_binomial(n, k).swap_qt()
}

/// `(x; q)_n = (1 - x)(1 - x q) ... (1 - x q^(n-1))`.
pub fn q_pochhammer(x: &QTPoly, n: u32) -> QTPoly {
    (0..n).fold(QTPoly::one(), |acc, k| {
        &acc * &(QTPoly::one() - &x.shift(k, 0))
    })
}

/// Ordinary binomial coefficient `C(n, 2)`-style helper for small arguments.
pub fn choose2(n: u32) -> u32 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::QTRational;

    fn p(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Counts subsets of size k of {0..n-1} by the sum of their elements minus
    /// the minimum possible sum; this is the inversion statistic of 0/1 words.
    fn brute_q_binomial(n: u32, k: u32) -> QTPoly {
        let mut counts = std::collections::BTreeMap::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() != k {
                continue;
            }
            let mut inv = 0u32;
            let mut ones_seen = 0;
            for b in 0..n {
                if mask >> b & 1 == 1 {
                    ones_seen += 1;
                } else {
                    inv += ones_seen;
                }
            }
            *counts.entry((inv, 0)).or_insert(0i64) += 1;
        }
        QTPoly::from_counts(counts)
    }

    #[test]
    fn analogue_examples() {
        assert!(q_analogue(0).is_zero());
        assert!(q_analogue(1).is_one());
        assert_eq!(q_analogue(3), p("1 + q + q^2"));
    }

    #[test]
    fn binomial_examples() {
        assert!(q_binomial(5, 0).is_one());
        assert_eq!(q_binomial(2, 1), p("1 + q"));
        assert_eq!(q_binomial(4, 2), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
    }

    #[test]
    fn binomial_matches_inversion_count() {
        for n in 0..=9 {
            for k in 0..=n {
                assert_eq!(q_binomial(n as i64, k as i64), brute_q_binomial(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binomial_symmetry_pascal_and_specialization() {
        for n in 0..=12i64 {
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert_eq!(b, q_binomial(n, n - k));
                if n > 0 {
                    let pascal = &q_binomial(n - 1, k - 1) + &q_binomial(n - 1, k).shift(k as u32, 0);
                    assert_eq!(b, pascal, "pascal n={n} k={k}");
                }
                assert_eq!(
                    b.at_one(),
                    BigRational::from_integer(binomial(n as u64, k as u64).into())
                );
            }
        }
    }

    #[test]
    fn binomial_matches_factorial_ratio() {
        for n in 0..=8u32 {
            for k in 0..=n {
                let ratio = QTRational::new(
                    q_factorial(n),
                    &q_factorial(k) * &q_factorial(n - k),
                )
                .unwrap();
                assert_eq!(ratio.to_poly().unwrap(), q_binomial(n as i64, k as i64));
            }
        }
    }

    #[test]
    fn pochhammer_ratio() {
        for x in [p("q"), p("q^2"), p("t")] {
            for n in 1..=8u32 {
                let ratio = QTRational::new(q_pochhammer(&x, n), q_pochhammer(&x, n - 1)).unwrap();
                let expect = &QTPoly::one() - &x.shift(n - 1, 0);
                assert_eq!(ratio.to_poly().unwrap(), expect);
            }
        }
    }
}
