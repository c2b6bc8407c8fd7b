//! Bivariate polynomial gcd over the integers.
//!
//! Polynomials are viewed as elements of `Z[t][q]` and reduced with a
//! primitive pseudo-remainder sequence; contents in `Z[t]` are handled by the
//! same procedure one level down.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::QTPoly;

/// Dense univariate polynomial over `Z`, index = exponent, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Dense polynomial in `q` with coefficients in `Z[t]`.
type BPoly = Vec<UPoly>;

fn u_trim(a: &mut UPoly) {
    while a.last().map(|c| c.is_zero()).unwrap_or(false) {
        a.pop();
    }
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn u_div_scalar(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(&mut out);
    out
}

/// Exact division over `Z`; `None` if not divisible.
fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let lb = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let (qc, r) = rem.last().unwrap().div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &qc * y;
        }
        quot[shift] = qc;
        u_trim(&mut rem);
    }
    if rem.is_empty() {
        u_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Primitive part with positive leading coefficient.
fn u_primitive(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut g = u_content(a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    u_div_scalar(a, &g)
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        r = u_scale(&r, &lb);
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        u_trim(&mut r);
    }
    r
}

/// Gcd in `Z[t]`, normalized to a positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_primitive_keep_content(b);
    }
    if b.is_empty() {
        return u_primitive_keep_content(a);
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let c = ca.gcd(&cb);
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![c];
        }
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_scale(&x, &c)
}

fn u_primitive_keep_content(a: &UPoly) -> UPoly {
    if a.last().map(|c| c.is_negative()).unwrap_or(false) {
        a.iter().map(|c| -c).collect()
    } else {
        a.clone()
    }
}

fn b_trim(a: &mut BPoly) {
    while a.last().map(|c| c.is_empty()).unwrap_or(false) {
        a.pop();
    }
}

fn b_content(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_u(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter()
        .map(|x| u_div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

/// Primitive part in `Z[t][q]`, sign-normalized on the leading coefficient.
fn b_primitive(a: &BPoly) -> BPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = b_content(a);
    let lead = a.last().unwrap();
    if lead.last().unwrap().is_negative() {
        c = c.iter().map(|x| -x).collect();
    }
    b_div_u(a, &c)
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x = u_mul(x, &lb);
        }
        for (j, y) in b.iter().enumerate() {
            let sub = u_mul(&lr, y);
            r[shift + j] = u_sub(&r[shift + j], &sub);
        }
        b_trim(&mut r);
    }
    r
}

fn to_dense(p: &QTPoly) -> BPoly {
    let dq = p.degree_q().unwrap_or(0) as usize;
    let mut out: BPoly = vec![Vec::new(); dq + 1];
    for ((a, b), c) in p.terms() {
        debug_assert!(c.is_integer());
        let row = &mut out[*a as usize];
        let b = *b as usize;
        if row.len() <= b {
            row.resize(b + 1, BigInt::zero());
        }
        row[b] = c.numer().clone();
    }
    for row in out.iter_mut() {
        u_trim(row);
    }
    b_trim(&mut out);
    out
}

fn from_dense(a: &BPoly) -> QTPoly {
    let mut terms = Vec::new();
    for (i, row) in a.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                terms.push((i as u32, j as u32, BigRational::from_integer(c.clone())));
            }
        }
    }
    QTPoly::from_terms(terms)
}

/// Gcd of two polynomials, returned with integer coprime coefficients and a
/// positive lexicographically-leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() && b.is_zero() {
        return QTPoly::zero();
    }
    if a.is_zero() {
        return normalize_integral(b);
    }
    if b.is_zero() {
        return normalize_integral(a);
    }
    let (ea, eb) = (a.min_exponents().unwrap(), b.min_exponents().unwrap());
    let mono = (ea.0.min(eb.0), ea.1.min(eb.1));
    let a = normalize_integral(&a.unshift(ea.0, ea.1));
    let b = normalize_integral(&b.unshift(eb.0, eb.1));
    let core = if a.as_constant().is_some() || b.as_constant().is_some() {
        QTPoly::one()
    } else if let Some(_) = a.div_exact(&b) {
        b
    } else if let Some(_) = b.div_exact(&a) {
        a
    } else {
        from_dense(&bivariate_gcd(&to_dense(&a), &to_dense(&b)))
    };
    core.shift(mono.0, mono.1)
}

/// Integer primitive form with positive leading coefficient.
fn normalize_integral(p: &QTPoly) -> QTPoly {
    if p.is_zero() {
        return p.clone();
    }
    let (_, ip) = p.clear_denominators();
    let mut g = BigInt::zero();
    for (_, c) in ip.terms() {
        g = g.gcd(c.numer());
    }
    if ip.leading().unwrap().1.is_negative() {
        g = -g;
    }
    ip.scale(&BigRational::new(BigInt::one(), g))
}

fn bivariate_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    let ca = b_content(a);
    let cb = b_content(b);
    let c = u_gcd(&ca, &cb);
    let (mut x, mut y) = (b_primitive(a), b_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive(&r);
    }
    let x = b_primitive(&x);
    x.iter().map(|row| u_mul(row, &c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    #[test]
    fn univariate_gcd() {
        assert_eq!(gcd(&p("1 - q^2"), &p("1 - q^3")), p("-1 + q"));
        assert_eq!(gcd(&p("2 + 2*q"), &p("4 + 4*q")), p("1 + q"));
    }

    #[test]
    fn shared_bivariate_factor() {
        let f = p("q - t");
        let g = p("1 - q*t^2");
        let a = &(&f * &g) * &p("1 + q");
        let b = &(&f * &g) * &p("t^3 - 2");
        // normalized so the lex-leading coefficient (of q^2*t^2) is positive
        assert_eq!(gcd(&a, &b), -(&f * &g));
    }

    #[test]
    fn monomial_parts() {
        assert_eq!(gcd(&p("q^2*t + q^3"), &p("q*t^2")), p("q"));
        assert_eq!(gcd(&p("q^2*t"), &p("q*t^3")), p("q*t"));
    }

    #[test]
    fn coprime_inputs() {
        assert!(gcd(&p("1 - q"), &p("1 - t")).is_one());
        assert!(gcd(&p("q + t + 1"), &p("q*t - 1")).is_one());
    }

    #[test]
    fn content_in_t() {
        let a = &p("1 - t") * &p("q + 1");
        let b = &p("1 - t") * &p("q^2 + t");
        assert_eq!(gcd(&a, &b), p("-1 + t"));
    }
}
