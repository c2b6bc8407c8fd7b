use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factored::Den;
use super::poly::QTPoly;
use super::QtError;

/// An element of `Q(q,t)` kept in lowest terms.
///
/// The denominator is stored factored into irreducibles (see
/// [`Den`]); numerator and denominator share no factor, and every factor of
/// the denominator is monic, so the representation is canonical and equality
/// is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QTRational {
    num: QTPoly,
    den: Den,
}

impl QTRational {
    pub fn zero() -> Self {
        Self::from_poly(QTPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QTPoly::one())
    }

    pub fn from_poly(p: QTPoly) -> Self {
        Self { num: p, den: Den::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QTPoly::from_int(c))
    }

    pub fn from_ratio(c: BigRational) -> Self {
        Self::from_poly(QTPoly::constant(c))
    }

    /// Builds `num / den` and reduces it to canonical form.
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self, QtError> {
        if den.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        let (c, den) = Den::factor(&den);
        Ok(Self::reduced(num.scale(&(BigRational::one() / c)), den))
    }

    fn reduced(mut num: QTPoly, mut den: Den) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        den.cancel(&mut num);
        Self { num, den }
    }

    pub fn numer(&self) -> &QTPoly {
        &self.num
    }

    /// The denominator, multiplied out.
    pub fn denom(&self) -> QTPoly {
        self.den.expand()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_poly(&self) -> Option<QTPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Result<Self, QtError> {
        if self.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        let (c, den) = Den::factor(&self.num);
        let num = self.den.expand().scale(&(BigRational::one() / c));
        Ok(Self { num, den })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QtError> {
        if rhs.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &QTPoly) -> Self {
        if p.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if let Some(c) = p.as_constant() {
            return self.scale(&c);
        }
        Self::reduced(&self.num * p, self.den.clone())
    }

    pub fn div_poly(&self, p: &QTPoly) -> Result<Self, QtError> {
        if p.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        if let Some(c) = p.as_constant() {
            return Ok(self.scale(&(BigRational::one() / c)));
        }
        let (c, d) = Den::factor(p);
        let mut num = self.num.scale(&(BigRational::one() / c));
        let mut d = d;
        d.cancel(&mut num);
        Ok(Self { num, den: self.den.mul(&d) })
    }

    pub fn pow(&self, n: u32) -> Self {
        Self { num: self.num.pow(n), den: self.den.pow(n) }
    }

    /// Substitutes `q -> q^r`, `t -> t^r`.
    pub fn dilate(&self, r: u32) -> Self {
        let (c, den) = self.den.dilate(r);
        Self::reduced(self.num.dilate(r).scale(&(BigRational::one() / c)), den)
    }

    pub fn swap_qt(&self) -> Self {
        let (c, den) = self.den.swap_qt();
        Self::reduced(self.num.swap_qt().scale(&(BigRational::one() / c)), den)
    }

    /// The polynomial `p` with `self = p`, or `NotPolynomial`.
    pub fn as_exact_poly(&self) -> Result<QTPoly, QtError> {
        self.to_poly().ok_or_else(|| QtError::NotPolynomial(self.to_string()))
    }

    /// `1 / prod factors`. Cheapest when each factor is a binomial.
    pub fn recip_product<'a>(factors: impl IntoIterator<Item = &'a QTPoly>) -> Result<Self, QtError> {
        let mut den = Den::one();
        let mut scalar = BigRational::one();
        for f in factors {
            if f.is_zero() {
                return Err(QtError::DivisionByZero);
            }
            let (c, d) = Den::factor(f);
            scalar *= c;
            den = den.mul(&d);
        }
        Ok(Self { num: QTPoly::constant(BigRational::one() / scalar), den })
    }

    /// Sum of many terms over one common denominator, reduced once.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a QTRational>) -> QTRational {
        let terms: Vec<&QTRational> = terms.into_iter().filter(|x| !x.is_zero()).collect();
        match terms.len() {
            0 => return Self::zero(),
            1 => return terms[0].clone(),
            _ => {}
        }
        let lcm = terms.iter().skip(1).fold(terms[0].den.clone(), |acc, x| acc.lcm(&x.den));
        let mut num = QTPoly::zero();
        for x in terms {
            if x.den == lcm {
                num += &x.num;
            } else {
                num += &(&x.num * &lcm.cofactor(&x.den));
            }
        }
        Self::reduced(num, lcm)
    }

    /// `sum_i a_i * b_i`, with `b_i` polynomial, reduced once.
    pub fn dot_poly<'a>(terms: impl IntoIterator<Item = (&'a QTRational, &'a QTPoly)>) -> QTRational {
        let prods: Vec<QTRational> = terms
            .into_iter()
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| QTRational { num: &a.num * b, den: a.den.clone() })
            .collect();
        Self::sum(&prods)
    }
}

/// The polynomial `p` with `a = p * b`, certifying that the ratio is
/// polynomial. Fails with `NotPolynomial` when it is not.
pub fn exact_poly_quotient(a: &QTRational, b: &QTRational) -> Result<QTPoly, QtError> {
    a.checked_div(b)?.as_exact_poly()
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QTPoly> for QTRational {
    fn from(p: QTPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QTRational {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add<&QTRational> for &QTRational {
    type Output = QTRational;
    fn add(self, rhs: &QTRational) -> QTRational {
        if self.den.is_one() && rhs.den.is_one() {
            return QTRational::from_poly(&self.num + &rhs.num);
        }
        QTRational::sum([self, rhs])
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        -&self
    }
}

impl Sub<&QTRational> for &QTRational {
    type Output = QTRational;
    fn sub(self, rhs: &QTRational) -> QTRational {
        self + &(-rhs)
    }
}

impl Mul<&QTRational> for &QTRational {
    type Output = QTRational;
    fn mul(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() || rhs.is_zero() {
            return QTRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QTRational::from_poly(&self.num * &rhs.num);
        }
        // each side is already reduced, so only cross factors can cancel
        let (mut n1, mut d2) = (self.num.clone(), rhs.den.clone());
        d2.cancel(&mut n1);
        let (mut n2, mut d1) = (rhs.num.clone(), self.den.clone());
        d1.cancel(&mut n2);
        QTRational { num: &n1 * &n2, den: d1.mul(&d2) }
    }
}

impl Div<&QTRational> for &QTRational {
    type Output = QTRational;
    /// Panics on division by zero; use [`QTRational::checked_div`] otherwise.
    fn div(self, rhs: &QTRational) -> QTRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QTRational> for QTRational {
            type Output = QTRational;
            fn $m(self, rhs: QTRational) -> QTRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QTRational> for QTRational {
            type Output = QTRational;
            fn $m(self, rhs: &QTRational) -> QTRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<QTRational> for &QTRational {
            type Output = QTRational;
            fn $m(self, rhs: QTRational) -> QTRational {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den.expand())
        }
    }
}

impl fmt::Debug for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTRational({self})")
    }
}

impl std::str::FromStr for QTRational {
    type Err = QtError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, tail) = rest
                .split_once(")/(")
                .ok_or_else(|| QtError::Parse(s.to_string()))?;
            let den = tail
                .strip_suffix(')')
                .ok_or_else(|| QtError::Parse(s.to_string()))?;
            QTRational::new(num.parse()?, den.parse()?)
        } else {
            Ok(QTRational::from_poly(s.parse()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QTPoly {
        s.parse().unwrap()
    }

    fn r(n: &str, d: &str) -> QTRational {
        QTRational::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn telescoping_quotient() {
        let a = r("1 - q^2", "1 - q");
        assert_eq!(a.to_poly(), Some(p("1 + q")));
        let b = QTRational::from_poly(p("1 - q^2"));
        let c = QTRational::from_poly(p("1 - q"));
        assert_eq!(exact_poly_quotient(&b, &c).unwrap(), p("1 + q"));
    }

    #[test]
    fn inverse_cancels() {
        let a = r("1", "1 - q");
        let b = QTRational::from_poly(p("1 - q"));
        assert!((&a * &b).is_one());
    }

    #[test]
    fn non_polynomial_quotient_is_reported() {
        let a = QTRational::from_poly(p("1 + q"));
        let b = QTRational::from_poly(p("1 + q + q^2"));
        assert!(matches!(
            exact_poly_quotient(&a, &b),
            Err(QtError::NotPolynomial(_))
        ));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            QTRational::new(p("1"), QTPoly::zero()),
            Err(QtError::DivisionByZero)
        );
        assert!(QTRational::one().checked_div(&QTRational::zero()).is_err());
        assert!(QTRational::zero().inv().is_err());
    }

    #[test]
    fn canonical_equality() {
        let a = r("2 - 2*q", "4 - 4*q*t");
        let b = r("-1 + q", "-2 + 2*q*t");
        assert_eq!(a, b);
        assert!(a.denom().leading().unwrap().1.is_one());
        let c = r("q - t", "q^2 - t^2");
        assert_eq!(c, r("1", "q + t"));
    }

    #[test]
    fn sums_with_different_denominators() {
        let a = r("1", "1 - q");
        let b = r("1", "1 + q");
        let s = &a + &b;
        assert_eq!(s, r("2", "1 - q^2"));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn text_round_trip() {
        let a = r("1 + q*t", "q - t^2");
        assert_eq!(a.to_string().parse::<QTRational>().unwrap(), a);
        let b = QTRational::from_poly(p("3*q"));
        assert_eq!(b.to_string().parse::<QTRational>().unwrap(), b);
    }
}
