//! Modified Macdonald polynomials from the Haglund–Haiman–Loehr filling
//! formula, their eigenvalue constants, and coordinates in the Macdonald
//! basis via the `*`-scalar product, for which the `H~_mu` are orthogonal
//! with norms `w_mu`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use rayon::prelude::*;

use super::{apply_matrix, basis, cache, check_degree, Basis, SymError, SymFunc};
use crate::partition::{partitions, Partition};
use crate::qt::{QTPoly, QTRational};

/// Expansions of one `H~_mu`, indexed like `partitions(|mu|)`.
pub(crate) struct MacdonaldData {
    pub monomial: Vec<QTPoly>,
    pub power: Vec<QTRational>,
}

fn memo() -> &'static RwLock<HashMap<Partition, Arc<MacdonaldData>>> {
    static MEMO: OnceLock<RwLock<HashMap<Partition, Arc<MacdonaldData>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

pub(crate) fn data(mu: &Partition) -> Result<Arc<MacdonaldData>, SymError> {
    check_degree(mu.size())?;
    if let Some(d) = memo().read().expect("poisoned").get(mu) {
        return Ok(d.clone());
    }
    let parts = partitions(mu.size());
    let monomial: Vec<QTPoly> = match cache::load(mu) {
        Some(terms) if terms.len() == parts.len() && terms.iter().zip(&parts).all(|(t, p)| &t.0 == p) => {
            terms.into_iter().map(|(_, c)| c).collect()
        }
        _ => {
            let m = hhl(mu);
            let terms: Vec<(Partition, QTPoly)> = parts.iter().cloned().zip(m.iter().cloned()).collect();
            cache::store(mu, &terms);
            m
        }
    };
    let t = basis::transition(Basis::Power, mu.size());
    let as_rat: Vec<QTRational> = monomial.iter().cloned().map(QTRational::from_poly).collect();
    let power = apply_matrix(&as_rat, &t.from_m);
    let d = Arc::new(MacdonaldData { monomial, power });
    memo().write().expect("poisoned").insert(mu.clone(), d.clone());
    Ok(d)
}

/// `sum_sigma q^inv t^maj x^sigma`, one coefficient per monomial `x^lambda`.
fn hhl(mu: &Partition) -> Vec<QTPoly> {
    let n = mu.size();
    // reading order: top row first, left to right
    let mut cells: Vec<(u32, u32)> = mu.cells().collect();
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let pos: HashMap<(u32, u32), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut attacks = Vec::new();
    for (i, &(r, c)) in cells.iter().enumerate() {
        for (j, &(r2, c2)) in cells.iter().enumerate().skip(i + 1) {
            if r2 == r || (r2 + 1 == r && c2 < c) {
                attacks.push((i, j));
            }
        }
    }
    // (cell, cell below, arm, leg + 1)
    let descents: Vec<(usize, usize, u32, u32)> = cells
        .iter()
        .enumerate()
        .filter(|(_, &(r, _))| r > 0)
        .map(|(i, &(r, c))| (i, pos[&(r - 1, c)], mu.arm(r, c), mu.leg(r, c) + 1))
        .collect();
    partitions(n)
        .iter()
        .map(|lambda| {
            let mut tally: HashMap<(u32, u32), i64> = HashMap::new();
            let mut counts = lambda.parts().to_vec();
            let mut filling = vec![0u32; cells.len()];
            fill(0, &mut counts, &mut filling, &mut |f| {
                let mut inv = attacks.iter().filter(|&&(a, b)| f[a] > f[b]).count() as i64;
                let mut maj = 0;
                for &(u, v, arm, leg1) in &descents {
                    if f[u] > f[v] {
                        inv -= arm as i64;
                        maj += leg1;
                    }
                }
                *tally.entry((u32::try_from(inv).expect("inv is non-negative"), maj)).or_insert(0) += 1;
            });
            QTPoly::from_counts(tally)
        })
        .collect()
}

fn fill(i: usize, counts: &mut [u32], filling: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    if i == filling.len() {
        f(filling);
        return;
    }
    for v in 0..counts.len() {
        if counts[v] > 0 {
            counts[v] -= 1;
            filling[i] = v as u32;
            fill(i + 1, counts, filling, f);
            counts[v] += 1;
        }
    }
}

/// `H~_mu` in the monomial basis.
pub fn macdonald(mu: &Partition) -> Result<SymFunc, SymError> {
    let d = data(mu)?;
    let parts = partitions(mu.size());
    SymFunc::from_terms(
        Basis::Monomial,
        mu.size(),
        parts.into_iter().zip(d.monomial.iter().cloned().map(QTRational::from_poly)),
    )
}

/// `<p_lambda, p_lambda>_* = (-1)^{|lambda|-l(lambda)} z_lambda prod (1-q^{l_i})(1-t^{l_i})`.
fn star_norm(lambda: &Partition) -> QTPoly {
    let sign = if (lambda.size() as usize - lambda.len()) % 2 == 0 { 1 } else { -1 };
    let mut acc = QTPoly::constant(BigRational::from_integer(lambda.z() * sign));
    let one = QTPoly::one();
    for &r in lambda.parts() {
        acc = &acc * &(&one - &QTPoly::qt(r, 0));
        acc = &acc * &(&one - &QTPoly::qt(0, r));
    }
    acc
}

/// Coordinates of `f` in the basis `H~_mu`.
pub fn to_macdonald(f: &SymFunc) -> Result<SymFunc, SymError> {
    if f.basis() == Basis::Macdonald {
        return Ok(f.clone());
    }
    let n = f.degree();
    check_degree(n)?;
    let pf = super::convert(f, Basis::Power)?;
    let parts = partitions(n);
    // f_lambda * <p_lambda, p_lambda>_*, shared by every mu
    let weighted: Vec<QTRational> =
        parts.iter().map(|l| pf.coeff(l).mul_poly(&star_norm(l))).collect();
    let coeffs = parts
        .par_iter()
        .map(|mu| {
            let d = data(mu)?;
            let terms: Vec<QTRational> = weighted
                .iter()
                .zip(&d.power)
                .filter(|(w, h)| !w.is_zero() && !h.is_zero())
                .map(|(w, h)| w * h)
                .collect();
            Ok(&QTRational::sum(&terms) * &reciprocals(mu).0)
        })
        .collect::<Result<Vec<_>, SymError>>()?;
    Ok(SymFunc::from_vec(Basis::Macdonald, n, &parts, coeffs))
}

/// `sum c_mu H~_mu`, in the monomial basis.
pub fn from_macdonald(f: &SymFunc) -> Result<SymFunc, SymError> {
    if f.basis() != Basis::Macdonald {
        return super::convert(f, Basis::Monomial);
    }
    let n = f.degree();
    let parts = partitions(n);
    let data: Vec<(&QTRational, Arc<MacdonaldData>)> =
        f.terms().iter().map(|(mu, c)| Ok((c, data(mu)?))).collect::<Result<_, SymError>>()?;
    let out: Vec<QTRational> = (0..parts.len())
        .into_par_iter()
        .map(|j| QTRational::dot_poly(data.iter().map(|(c, d)| (*c, &d.monomial[j]))))
        .collect();
    Ok(SymFunc::from_vec(Basis::Monomial, n, &parts, out))
}

/// The constants attached to a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacdonaldConstants {
    /// `sum_c q^{a'} t^{l'}`.
    pub b: QTPoly,
    /// `M B - 1`.
    pub d: QTPoly,
    /// `q^{n(mu')} t^{n(mu)}`.
    pub t: QTPoly,
    /// `prod_{c != (1,1)} (1 - q^{a'} t^{l'})`.
    pub pi: QTPoly,
    /// `prod_c (q^a - t^{l+1})(t^l - q^{a+1})`.
    pub w: QTPoly,
}

/// `(1 / w_mu, 1 / Pi_mu)`, assembled factor by factor.
pub(crate) fn reciprocals(mu: &Partition) -> Arc<(QTRational, QTRational)> {
    static MEMO: OnceLock<RwLock<HashMap<Partition, Arc<(QTRational, QTRational)>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(r) = memo.read().expect("poisoned").get(mu) {
        return r.clone();
    }
    let one = QTPoly::one();
    let mut w = Vec::new();
    let mut pi = Vec::new();
    for (r, c) in mu.cells() {
        if (r, c) != (0, 0) {
            pi.push(&one - &QTPoly::qt(mu.coarm(r, c), mu.coleg(r, c)));
        }
        let (a, l) = (mu.arm(r, c), mu.leg(r, c));
        w.push(&QTPoly::qt(a, 0) - &QTPoly::qt(0, l + 1));
        w.push(&QTPoly::qt(0, l) - &QTPoly::qt(a + 1, 0));
    }
    let out = Arc::new((
        QTRational::recip_product(&w).expect("w is nonzero"),
        QTRational::recip_product(&pi).expect("Pi is nonzero"),
    ));
    memo.write().expect("poisoned").insert(mu.clone(), out.clone());
    out
}

pub fn constants(mu: &Partition) -> MacdonaldConstants {
    let one = QTPoly::one();
    let mut b = QTPoly::zero();
    let mut pi = QTPoly::one();
    let mut w = QTPoly::one();
    for (r, c) in mu.cells() {
        let (ca, cl) = (mu.coarm(r, c), mu.coleg(r, c));
        let mono = QTPoly::qt(ca, cl);
        b = &b + &mono;
        if (r, c) != (0, 0) {
            pi = &pi * &(&one - &mono);
        }
        let (a, l) = (mu.arm(r, c), mu.leg(r, c));
        w = &w * &(&QTPoly::qt(a, 0) - &QTPoly::qt(0, l + 1));
        w = &w * &(&QTPoly::qt(0, l) - &QTPoly::qt(a + 1, 0));
    }
    let d = &(&super::m_poly() * &b) - &one;
    let t = QTPoly::qt(mu.conjugate().n(), mu.n());
    MacdonaldConstants { b, d, t, pi, w }
}
