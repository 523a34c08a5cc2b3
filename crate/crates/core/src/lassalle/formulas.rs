//! One function per formula. Callers guarantee `1 <= p <= n`, `1 <= k <= n`.

use super::{Family, Method};
use crate::error::Result;
use crate::qbasic::{hyper_eval, q_binomial, q_integer, HyperSpec};
use crate::qpoly::{LaurentPoly, QFraction};

pub(super) fn evaluate(family: Family, method: Method, n: u32, p: u32, k: u32) -> Result<LaurentPoly> {
    let (n, p, k) = (n as i64, p as i64, k as i64);
    match method {
        Method::Definition => definition(family, n, p, k),
        Method::Sum => sum(family, n, p, k),
        Method::Expansion => expansion(family, n, p, k).into_polynomial(),
        Method::Transformed => transformed(n, p, k),
        Method::Corollary => corollary(family, n, p, k),
        Method::PositiveSplit | Method::Default => Ok(positive_split_terms(family, n as u32, p as u32, k as u32)
            .into_iter()
            .sum()),
    }
}

fn qi(n: i64) -> LaurentPoly {
    q_integer(u32::try_from(n).expect("q-integer index is nonnegative"))
}

fn qb(n: i64, k: i64) -> LaurentPoly {
    q_binomial(n, k)
}

/// `[a]_q / [b]_q` as a fraction.
fn qi_ratio(a: i64, b: i64) -> Result<QFraction> {
    QFraction::ratio(&qi(a), &qi(b))
}

fn definition(family: Family, n: i64, p: i64, k: i64) -> Result<LaurentPoly> {
    let (arg, prefactor) = match family {
        Family::First => (1, (n - p) * p),
        Family::Second => (k + 1, 0),
    };
    let phi = hyper_eval(&HyperSpec::at(vec![1 - k, -p, p - n], vec![1, 1 - n], arg))?;
    (phi * QFraction::from_poly(qb(n, k)))
        .shift(prefactor)
        .into_polynomial()
}

fn sum(family: Family, n: i64, p: i64, k: i64) -> Result<LaurentPoly> {
    let body: LaurentPoly = (0..k)
        .map(|r| {
            let e = match family {
                Family::First => (n - p) * p + r * (r - k),
                Family::Second => r * r,
            };
            qb(p, r) * qb(n - p, r) * qb(n - r - 1, k - r - 1) * LaurentPoly::q_pow(e)
        })
        .sum();
    (qi_ratio(n, k)? * QFraction::from_poly(body)).into_polynomial()
}

/// The alternating expansion with no boundary dispatch, valid for any
/// `0 <= p, k <= n`; at `k = 0` it is 1 exactly for `p = 0` and `p = n`.
pub fn expansion_raw(family: Family, n: u32, p: u32, k: u32) -> QFraction {
    expansion(family, n as i64, p as i64, k as i64)
}

fn expansion(family: Family, n: i64, p: i64, k: i64) -> QFraction {
    (0..=n / 2)
        .map(|i| {
            let extra = match family {
                Family::First => 0,
                Family::Second => k * i,
            };
            let sign = if i % 2 == 1 { -1 } else { 1 };
            let body = qb(n - i, k)
                * qb(n - i, i)
                * qb(n - 2 * i, p - i)
                * LaurentPoly::monomial(sign, i * (i - 1) / 2 + extra);
            if i == 0 {
                QFraction::from_poly(body)
            } else {
                // n - i >= 1 here since i <= n/2 and i >= 1
                QFraction::new(body * qi(n), qi(n - i)).expect("[n-i]_q is nonzero")
            }
        })
        .sum()
}

fn transformed(n: i64, p: i64, k: i64) -> Result<LaurentPoly> {
    let phi = hyper_eval(&HyperSpec::at(vec![1 - k, 1 + p, n - p + 1], vec![1, 2], 1))?;
    let sign = if (k - 1) % 2 == 1 { -1 } else { 1 };
    let exp = (n - p) * p - (k - 1) * (k + 2) / 2;
    (phi * QFraction::from_poly(LaurentPoly::monomial(sign, exp) * qi(n))).into_polynomial()
}

fn corollary(family: Family, n: i64, p: i64, k: i64) -> Result<LaurentPoly> {
    let body: LaurentPoly = (0..k)
        .map(|i| {
            let e = match family {
                Family::First => (i + 1) * (i + 1 - k) + (n - p) * p,
                Family::Second => (i + 1 - p) * (i + 1 - k),
            };
            qb(n - p, k - 1 - i) * qb(n - p + i, i) * qb(p, i + 1) * LaurentPoly::q_pow(e)
        })
        .sum();
    (qi_ratio(n, p)? * QFraction::from_poly(body)).into_polynomial()
}

/// Summands of the positive split, first sum then second, each a product of
/// Gaussian binomials times a power of `q`; requires `1 <= p, k <= n`.
pub fn positive_split_terms(family: Family, n: u32, p: u32, k: u32) -> Vec<LaurentPoly> {
    let (n, p, k) = (n as i64, p as i64, k as i64);
    type Exponent = fn(i64, i64, i64, i64) -> i64;
    let (e1, e2): (Exponent, Exponent) = match family {
        Family::First => (
            |n, p, k, i| (n - p) * p + (i + 1) * (i + 1 - k),
            |n, p, k, i| (n - p + 1) * p + (i + 1) * (i + 1 - k),
        ),
        Family::Second => (
            |_, p, k, i| (i + 1 - p) * (i + 1 - k),
            |n, p, k, i| p + (i + 1 - n + p) * (i + 1 - k),
        ),
    };
    let first =
        (0..k).map(|i| qb(n - p, k - 1 - i) * qb(n - p + i, i) * qb(p, i + 1) * LaurentPoly::q_pow(e1(n, p, k, i)));
    let second =
        (0..k).map(|i| qb(p, k - 1 - i) * qb(p + i, i) * qb(n - p, i + 1) * LaurentPoly::q_pow(e2(n, p, k, i)));
    first.chain(second).filter(|t| !t.is_zero()).collect()
}
