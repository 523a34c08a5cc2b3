use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dense;
use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Terms are kept sparse and canonical: no stored coefficient is zero, so
/// structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

pub(crate) fn add_exp(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("exponent overflow in Laurent polynomial")
}

pub(crate) fn mul_exp(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("exponent overflow in Laurent polynomial")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// `1 - q^exp`, the building block of every q-Pochhammer product.
    pub fn one_minus_q_pow(exp: i64) -> Self {
        Self::from_terms([(0, BigInt::one()), (exp, -BigInt::one())])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in pairs {
            *terms.entry(e).or_default() += c.into();
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// Builds `sum_i coeffs[i] q^(min_exp + i)`.
    pub fn from_coeffs<C: Into<BigInt>>(min_exp: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (add_exp(min_exp, i as i64), c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// True when no exponent is negative (a genuine polynomial in `q`).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn is_constant(&self) -> bool {
        self.max_exp().is_none_or(|e| e == 0) && self.min_exp().is_none_or(|e| e == 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        if shift == 0 {
            return self.clone();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(*e, shift), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// The substitution `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact value at an integer point; negative exponents need `q = ±1`.
    pub fn eval_at(&self, q: &BigInt) -> Option<BigInt> {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let power = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else if q.abs().is_one() {
                num_traits::pow(q.clone(), e.unsigned_abs() as usize)
            } else {
                return None;
            };
            total += c * power;
        }
        Some(total)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Splits `self = q^m * P(q)` with `P(0) != 0`; the zero polynomial gives `(0, [])`.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let width = usize::try_from(hi - lo).expect("span fits in usize") + 1;
        let mut out = vec![BigInt::zero(); width];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    pub(crate) fn from_dense(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(min_exp, coeffs)
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] when the Laurent division leaves a remainder.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, a) = self.to_dense();
        let (sb, b) = divisor.to_dense();
        let quot = dense::exact_div(&a, &b).ok_or(Error::NotDivisible)?;
        Ok(Self::from_dense(sa - sb, quot))
    }

    /// Gcd of all coefficients (positive), zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn mul_impl(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.len() == 1 || other.len() == 1 {
            let (mono, poly) = if self.len() == 1 { (self, other) } else { (other, self) };
            let (e, c) = mono.terms().next().unwrap();
            return Self {
                terms: poly.terms.iter().map(|(pe, pc)| (add_exp(*pe, e), pc * c)).collect(),
            };
        }
        let lo = add_exp(self.min_exp().unwrap(), other.min_exp().unwrap());
        let hi = add_exp(self.max_exp().unwrap(), other.max_exp().unwrap());
        let span = (hi - lo) as u128 + 1;
        if (self.len() as u128) * (other.len() as u128) < span {
            let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    *terms.entry(ea + eb).or_default() += ca * cb;
                }
            }
            terms.retain(|_, c| !c.is_zero());
            return Self { terms };
        }
        let mut acc = vec![BigInt::zero(); span as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        Self::from_dense(lo, acc)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            let slot = self.terms.entry(*e).or_default();
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            let slot = self.terms.entry(*e).or_default();
            *slot -= c;
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &LaurentPoly, b: &LaurentPoly| {
    let mut out = a.clone();
    out += b;
    out
});
forward_binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| {
    let mut out = a.clone();
    out -= b;
    out
});
forward_binop!(Mul, mul, |a: &LaurentPoly, b: &LaurentPoly| a.mul_impl(b));

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// Dense coefficient view used by the unimodality scan and the JSON schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientProfile {
    pub min_exp: i64,
    pub coeffs: Vec<BigInt>,
    pub is_nonnegative: bool,
    pub is_unimodal: bool,
}

impl LaurentPoly {
    pub fn coefficient_profile(&self) -> Result<CoefficientProfile> {
        if self.is_zero() {
            return Err(Error::EmptyPolynomial);
        }
        let (min_exp, coeffs) = self.to_dense();
        let is_nonnegative = coeffs.iter().all(|c| !c.is_negative());
        let is_unimodal = is_unimodal(&coeffs);
        Ok(CoefficientProfile {
            min_exp,
            coeffs,
            is_nonnegative,
            is_unimodal,
        })
    }
}

/// Weakly increasing, then weakly decreasing.
pub fn is_unimodal<T: Ord>(seq: &[T]) -> bool {
    let mut i = 1;
    while i < seq.len() && seq[i - 1] <= seq[i] {
        i += 1;
    }
    while i < seq.len() && seq[i - 1] >= seq[i] {
        i += 1;
    }
    i >= seq.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(min, c.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p(0, &[1, 1]) * p(0, &[1, -1]), p(0, &[1, 0, -1]));
    }

    #[test]
    fn additive_identity_and_monomial_shift() {
        let a = p(-2, &[3, 0, -1, 5]);
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert_eq!(p(-1, &[1, 1]) * LaurentPoly::q_pow(1), p(0, &[1, 1]));
    }

    #[test]
    fn zero_has_no_terms() {
        let z = p(0, &[1, -1]) - p(0, &[1, -1]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            p(0, &[1, 0, 0, -1]).exact_div(&p(0, &[1, -1])).unwrap(),
            p(0, &[1, 1, 1])
        );
        assert_eq!(p(0, &[1, 0, -1]).exact_div(&p(0, &[1, 1])).unwrap(), p(0, &[1, -1]));
        assert_eq!(p(0, &[1, 1]).exact_div(&p(0, &[1, -1])), Err(Error::NotDivisible));
        assert_eq!(p(0, &[1]).exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_division_with_negative_exponents() {
        let a = p(-3, &[2, 1, -4, 7]);
        let b = p(-1, &[1, 0, 3]);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        assert_eq!(p(0, &[1, 2, 1]).exact_div(&p(0, &[2])), Err(Error::NotDivisible));
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(p(0, &[1, 1, 1]).eval_at_one(), BigInt::from(3));
        assert_eq!(p(1, &[1, 1]).eval_at_one(), BigInt::from(2));
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::from(0));
    }

    #[test]
    fn profile_examples() {
        let prof = p(0, &[1, 3, 2, 1]).coefficient_profile().unwrap();
        assert_eq!(prof.coeffs, [1, 3, 2, 1].map(BigInt::from));
        assert!(prof.is_unimodal && prof.is_nonnegative);

        assert!(!p(0, &[1, -1]).coefficient_profile().unwrap().is_nonnegative);

        let prof = LaurentPoly::q_pow(2).coefficient_profile().unwrap();
        assert_eq!((prof.min_exp, prof.coeffs.len()), (2, 1));
        assert!(prof.is_unimodal);

        assert_eq!(LaurentPoly::zero().coefficient_profile(), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn unimodality_rejects_valleys() {
        assert!(is_unimodal(&[1, 2, 2, 3, 1, 1]));
        assert!(!is_unimodal(&[1, 0, 1]));
        assert!(!is_unimodal(&[2, 1, 2, 1]));
        assert!(is_unimodal::<i32>(&[]));
    }

    #[test]
    fn invert_q_is_involution() {
        let a = p(-2, &[1, 4, 0, -3]);
        assert_eq!(a.invert_q().invert_q(), a);
        assert_eq!(LaurentPoly::q_pow(3).invert_q(), LaurentPoly::q_pow(-3));
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn exponent_overflow_is_a_hard_error() {
        let _ = LaurentPoly::q_pow(i64::MAX) * LaurentPoly::q_pow(1);
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        let a = LaurentPoly::from_terms([(0, 1), (1000, 2)]);
        let b = LaurentPoly::from_terms([(-500, 3), (1, -1)]);
        let sparse = &a * &b;
        let expected = LaurentPoly::from_terms([(-500, 3), (1, -1), (500, 6), (1001, -2)]);
        assert_eq!(sparse, expected);
    }
}
