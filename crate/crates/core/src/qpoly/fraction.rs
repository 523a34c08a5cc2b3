use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::dense;
use super::LaurentPoly;
use crate::error::{Error, Result};

/// An element of `Q(q)` stored as a quotient of Laurent polynomials.
///
/// Normal form: the denominator has minimum exponent 0 and a positive
/// leading coefficient, numerator and denominator share no nonunit
/// polynomial factor, and their integer contents are coprime. A fraction
/// is a polynomial exactly when its normalized denominator is `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(exp))
    }

    /// `a / b` for polynomials, failing when `b = 0`.
    pub fn ratio(a: &LaurentPoly, b: &LaurentPoly) -> Result<Self> {
        Self::new(a.clone(), b.clone())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_polynomial(&self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn into_polynomial(self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, rhs: &QFraction) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// The substitution `q -> 1/q`, renormalized.
    pub fn invert_q(&self) -> Self {
        Self::normalized(self.num.invert_q(), self.den.invert_q())
    }

    pub fn shift(&self, exp: i64) -> Self {
        Self {
            num: self.num.shift(exp),
            den: self.den.clone(),
        }
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let (den_shift, mut den_c) = den.to_dense();
        let (num_shift, mut num_c) = num.to_dense();
        let q_power = num_shift - den_shift;

        if den_c.len() > 1 && num_c.len() > 1 {
            let g = dense::primitive_gcd(&num_c, &den_c);
            if g.len() > 1 {
                num_c = dense::exact_div(&num_c, &g).expect("gcd divides numerator");
                den_c = dense::exact_div(&den_c, &g).expect("gcd divides denominator");
            }
        }
        let mut common = dense::content(&num_c).gcd(&dense::content(&den_c));
        if den_c.last().unwrap().is_negative() {
            common = -common;
        }
        if !common.is_one() {
            for c in num_c.iter_mut() {
                *c = &*c / &common;
            }
            for c in den_c.iter_mut() {
                *c = &*c / &common;
            }
        }
        Self {
            num: LaurentPoly::from_dense(q_power, num_c),
            den: LaurentPoly::from_dense(0, den_c),
        }
    }
}

impl From<LaurentPoly> for QFraction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QFraction {
    fn from(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }
}

impl From<BigInt> for QFraction {
    fn from(c: BigInt) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }
}

fn add_impl(a: &QFraction, b: &QFraction, negate_b: bool) -> QFraction {
    let b_num = if negate_b { -&b.num } else { b.num.clone() };
    if a.den == b.den {
        let num = &a.num + &b_num;
        return QFraction::normalized(num, a.den.clone());
    }
    let num = &a.num * &b.den + &b_num * &a.den;
    QFraction::normalized(num, &a.den * &b.den)
}

fn mul_impl(a: &QFraction, b: &QFraction) -> QFraction {
    if a.is_polynomial() && b.is_polynomial() {
        return QFraction::from_poly(&a.num * &b.num);
    }
    QFraction::normalized(&a.num * &b.num, &a.den * &b.den)
}

macro_rules! forward_frac_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&QFraction> for &QFraction {
            type Output = QFraction;
            fn $method(self, rhs: &QFraction) -> QFraction {
                $body(self, rhs)
            }
        }
        impl $trait<QFraction> for QFraction {
            type Output = QFraction;
            fn $method(self, rhs: QFraction) -> QFraction {
                $body(&self, &rhs)
            }
        }
        impl $trait<&QFraction> for QFraction {
            type Output = QFraction;
            fn $method(self, rhs: &QFraction) -> QFraction {
                $body(&self, rhs)
            }
        }
        impl $trait<QFraction> for &QFraction {
            type Output = QFraction;
            fn $method(self, rhs: QFraction) -> QFraction {
                $body(self, &rhs)
            }
        }
    };
}

forward_frac_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_frac_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_frac_binop!(Mul, mul, mul_impl);

impl Neg for &QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        QFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        QFraction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl std::iter::Sum for QFraction {
    fn sum<I: Iterator<Item = QFraction>>(iter: I) -> Self {
        iter.fold(QFraction::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QFraction({self})")
    }
}
