//! Rational transition matrices between the classical bases, all expressed
//! against the monomial basis. Entries are obtained by direct counting.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Basis;
use crate::partition::{partitions, Partition};

/// `rows[i][j]` = coefficient of `m_{parts[j]}` in `b_{parts[i]}`, and the inverse.
pub(crate) struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub to_m: Vec<Vec<BigRational>>,
    pub from_m: Vec<Vec<BigRational>>,
}

type Key = (Basis, u32);

fn cache() -> &'static Mutex<HashMap<Key, Arc<Transition>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<Transition>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn transition(basis: Basis, n: u32) -> Arc<Transition> {
    debug_assert!(basis != Basis::Macdonald);
    if let Some(t) = cache().lock().expect("poisoned").get(&(basis, n)) {
        return t.clone();
    }
    let parts = partitions(n);
    let to_m: Vec<Vec<BigRational>> = match basis {
        Basis::Monomial => identity(parts.len()),
        Basis::Power => table(&parts, power_in_m),
        Basis::Elementary => table(&parts, elementary_in_m),
        Basis::Homogeneous => table(&parts, homogeneous_in_m),
        Basis::Schur => schur_via_jacobi_trudi(&parts, &transition(Basis::Homogeneous, n)),
        Basis::Macdonald => unreachable!(),
    };
    let from_m = invert(&to_m).expect("transition matrices are invertible");
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let t = Arc::new(Transition { parts, index, to_m, from_m });
    cache().lock().expect("poisoned").insert((basis, n), t.clone());
    t
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect()
}

fn table(parts: &[Partition], f: fn(&[u32], &[u32]) -> u64) -> Vec<Vec<BigRational>> {
    parts
        .iter()
        .map(|l| {
            parts
                .iter()
                .map(|m| BigRational::from_integer(f(l.parts(), m.parts()).into()))
                .collect()
        })
        .collect()
}

/// Ways to send each part of `lambda` to a variable so that variable `j`
/// receives total `mu[j]`: the coefficient of `x^mu` in `p_lambda`.
pub(crate) fn power_in_m(lambda: &[u32], mu: &[u32]) -> u64 {
    fn rec(i: usize, lambda: &[u32], room: &mut [u32]) -> u64 {
        if i == lambda.len() {
            return room.iter().all(|&r| r == 0) as u64;
        }
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= lambda[i] {
                room[j] -= lambda[i];
                total += rec(i + 1, lambda, room);
                room[j] += lambda[i];
            }
        }
        total
    }
    rec(0, lambda, &mut mu.to_vec())
}

/// 0-1 matrices with row sums `lambda` and column sums `mu`.
pub(crate) fn elementary_in_m(lambda: &[u32], mu: &[u32]) -> u64 {
    fn rec(i: usize, lambda: &[u32], room: &mut [u32]) -> u64 {
        if i == lambda.len() {
            return room.iter().all(|&r| r == 0) as u64;
        }
        let mut total = 0;
        let cols = room.len();
        crate::paths::for_each_combination(cols, lambda[i] as usize, |set| {
            if set.iter().all(|&j| room[j] > 0) {
                for &j in set {
                    room[j] -= 1;
                }
                total += rec(i + 1, lambda, room);
                for &j in set {
                    room[j] += 1;
                }
            }
        });
        total
    }
    rec(0, lambda, &mut mu.to_vec())
}

/// Non-negative integer matrices with row sums `lambda` and column sums `mu`.
pub(crate) fn homogeneous_in_m(lambda: &[u32], mu: &[u32]) -> u64 {
    fn row(i: usize, j: usize, left: u32, lambda: &[u32], room: &mut [u32]) -> u64 {
        if j == room.len() {
            return if left == 0 { next(i + 1, lambda, room) } else { 0 };
        }
        let mut total = 0;
        for take in 0..=left.min(room[j]) {
            room[j] -= take;
            total += row(i, j + 1, left - take, lambda, room);
            room[j] += take;
        }
        total
    }
    fn next(i: usize, lambda: &[u32], room: &mut [u32]) -> u64 {
        if i == lambda.len() {
            return room.iter().all(|&r| r == 0) as u64;
        }
        row(i, 0, lambda[i], lambda, room)
    }
    next(0, lambda, &mut mu.to_vec())
}

/// `s_lambda = det(h_{lambda_i - i + j})`, expanded over permutations.
fn schur_via_jacobi_trudi(parts: &[Partition], h: &Transition) -> Vec<Vec<BigRational>> {
    parts
        .iter()
        .map(|lambda| {
            let l = lambda.parts();
            let k = l.len();
            let mut row = vec![BigRational::zero(); parts.len()];
            for_each_permutation(k, |perm, sign| {
                let mut hs = Vec::with_capacity(k);
                for (i, &j) in perm.iter().enumerate() {
                    let v = l[i] as i64 - i as i64 + j as i64;
                    if v < 0 {
                        return;
                    }
                    hs.push(v as u32);
                }
                let nu = Partition::from_unsorted(hs);
                let r = &h.to_m[h.index[&nu]];
                for (acc, x) in row.iter_mut().zip(r) {
                    if sign {
                        *acc += x;
                    } else {
                        *acc -= x;
                    }
                }
            });
            row
        })
        .collect()
}

/// Heap's algorithm; `sign` is `true` for even permutations.
fn for_each_permutation(k: usize, mut f: impl FnMut(&[usize], bool)) {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    let mut even = true;
    f(&perm, even);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            even = !even;
            f(&perm, even);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Gauss-Jordan inverse over the rationals.
pub(crate) fn invert(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..2 * n {
                    let sub = &factor * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
