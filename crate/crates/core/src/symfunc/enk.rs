//! The functions `E_{n,k}`, read off from the expansion of
//! `e_n[X (1-z)/(1-q)]` in the basis `(z;q)_k / (q;q)_k` of polynomials in `z`.

use super::{convert, Basis, SymError, SymFunc};
use crate::partition::partitions;
use crate::qt::{QTPoly, QTRational};

/// Coefficients in `z` of `(z;q)_k / (q;q)_k`, lowest degree first.
fn z_basis(k: u32) -> Vec<QTRational> {
    let mut poly: Vec<QTPoly> = vec![QTPoly::one()];
    for i in 0..k {
        // multiply by (1 - z q^i)
        let mut next = vec![QTPoly::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d] = &next[d] + c;
            next[d + 1] = &next[d + 1] - &c.shift(i, 0);
        }
        poly = next;
    }
    let factors: Vec<QTPoly> = (1..=k).map(|i| &QTPoly::one() - &QTPoly::qt(i, 0)).collect();
    let inv = QTRational::recip_product(&factors).expect("(q;q)_k is nonzero");
    poly.into_iter().map(|c| inv.mul_poly(&c)).collect()
}

/// `E_{n,k}`, in the power basis.
pub fn e_nk(n: u32, k: u32) -> Result<SymFunc, SymError> {
    if k > n {
        return Err(SymError::IndexOutOfRange { index: k, max: n });
    }
    super::check_degree(n)?;
    if n == 0 {
        return Ok(SymFunc::one());
    }
    let parts = partitions(n);
    let en = convert(&SymFunc::e(n), Basis::Power)?;
    // by_z[d][lambda]: coefficient of z^d p_lambda
    let mut by_z: Vec<Vec<QTRational>> = vec![vec![QTRational::zero(); parts.len()]; n as usize + 1];
    for (j, lambda) in parts.iter().enumerate() {
        let c = en.coeff(lambda);
        if c.is_zero() {
            continue;
        }
        let factors: Vec<QTPoly> = lambda.parts().iter().map(|&r| &QTPoly::one() - &QTPoly::qt(r, 0)).collect();
        let c = &c * &QTRational::recip_product(&factors)?;
        // prod_i (1 - z^{l_i}) as a signed subset sum
        let l = lambda.parts();
        let mut zpoly = vec![0i64; n as usize + 1];
        for mask in 0u32..(1 << l.len()) {
            let d: u32 = (0..l.len()).filter(|&i| mask >> i & 1 == 1).map(|i| l[i]).sum();
            zpoly[d as usize] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
        for (d, &m) in zpoly.iter().enumerate() {
            if m != 0 {
                by_z[d][j] = &by_z[d][j] + &c.scale(&num_rational::BigRational::from_integer(m.into()));
            }
        }
    }
    // peel off the top z-degree, which only E_{n,k'} with k' >= d reach
    let mut result = None;
    for top in (0..=n).rev() {
        let b = z_basis(top);
        let lead = &b[top as usize];
        let e: Vec<QTRational> = by_z[top as usize].iter().map(|c| c / lead).collect();
        for (d, bd) in b.iter().enumerate().take(top as usize) {
            if bd.is_zero() {
                continue;
            }
            for (acc, x) in by_z[d].iter_mut().zip(&e) {
                *acc = &*acc - &(x * bd);
            }
        }
        if top == k {
            result = Some(e);
            break;
        }
    }
    let e = result.expect("k <= n");
    Ok(SymFunc::from_vec(Basis::Power, n, &parts, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::{q_analogue, q_binomial};
    use crate::symfunc::{omega, plethysm_scaled_alphabet, Transform};

    #[test]
    fn small_cases() {
        assert!(e_nk(1, 1).unwrap().equals(&SymFunc::e(1)).unwrap());
        assert!(e_nk(3, 0).unwrap().is_zero());
        assert!(e_nk(0, 0).unwrap().equals(&SymFunc::one()).unwrap());
        assert!(e_nk(2, 3).is_err());
        let q_inv = QTRational::new(QTPoly::one(), QTPoly::q()).unwrap();
        let h2_over_q = SymFunc::h(2).scale(&q_inv);
        assert!(e_nk(2, 1).unwrap().equals(&-&h2_over_q).unwrap());
        assert!(e_nk(2, 2).unwrap().equals(&SymFunc::e(2).try_add(&h2_over_q).unwrap()).unwrap());
        let lhs = e_nk(2, 1).unwrap().scale_poly(&q_analogue(2)).try_add(&e_nk(2, 2).unwrap()).unwrap();
        assert!(lhs.equals(&omega(&SymFunc::p(2)).unwrap()).unwrap());
    }

    #[test]
    fn specialization_at_q_powers() {
        for n in 1..=4u32 {
            let es: Vec<SymFunc> = (0..=n).map(|k| e_nk(n, k).unwrap()).collect();
            for j in 1..=n {
                let lhs = plethysm_scaled_alphabet(&SymFunc::e(n), &Transform::QInteger(j)).unwrap();
                let mut rhs = SymFunc::zero(Basis::Power, n);
                for (k, e) in es.iter().enumerate() {
                    let c = q_binomial(k as i64 + j as i64 - 1, k as i64);
                    rhs = rhs.try_add(&e.scale_poly(&c)).unwrap();
                }
                assert!(lhs.equals(&rhs).unwrap(), "n={n} j={j}");
            }
        }
    }
}
