//! The two three-parameter families of q-binomial coefficients: the first
//! family `(n; p, k)_q` and the second family `[n; p, k]_q`, computed by every
//! available formula.
//!
//! All methods agree; [`Method::Default`] uses the manifestly positive split,
//! which needs no rational arithmetic.

mod checks;
mod formulas;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qbasic::q_binomial;
use crate::qpoly::LaurentPoly;

pub use checks::{
    check_column_n, check_methods, check_positivity_and_integrality, check_recurrence, check_symmetry,
    closed_form_check, coefficient_grid, ClosedFormComparison, ClosedFormReport, FormOrigin,
};
pub use formulas::{expansion_raw, positive_split_terms};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    First,
    Second,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::First, Family::Second];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::First => "first",
            Family::Second => "second",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(Family::First),
            "second" => Ok(Family::Second),
            _ => Err(Error::InvalidArgument(format!(
                "unknown family {s:?} (expected first or second)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The defining terminating 3phi2.
    Definition,
    /// Single sum over q-binomial products.
    Sum,
    /// Alternating expansion in `[n-i k]_q`.
    Expansion,
    /// The 3phi2 at base-shifted parameters; first family only.
    Transformed,
    /// Sum with the `[n]_q / [p]_q` prefactor.
    Corollary,
    /// Two sums with nonnegative summands.
    PositiveSplit,
    Default,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Definition,
        Method::Sum,
        Method::Expansion,
        Method::Transformed,
        Method::Corollary,
        Method::PositiveSplit,
        Method::Default,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::Sum => "sum",
            Method::Expansion => "expansion",
            Method::Transformed => "transformed",
            Method::Corollary => "corollary",
            Method::PositiveSplit => "positive_split",
            Method::Default => "default",
        }
    }

    pub fn supports(self, family: Family) -> bool {
        !(self == Method::Transformed && family == Family::Second)
    }

    /// Methods defined for `family`, excluding the `Default` alias.
    pub fn concrete_for(family: Family) -> Vec<Method> {
        Method::ALL
            .into_iter()
            .filter(|&m| m != Method::Default && m.supports(family))
            .collect()
    }

    fn resolve(self) -> Method {
        match self {
            Method::Default => Method::PositiveSplit,
            m => m,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s || (s == "positive-split" && *m == Method::PositiveSplit))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CoeffQuery {
    pub family: Family,
    pub n: u32,
    pub p: u32,
    pub k: u32,
    pub method: Method,
}

impl CoeffQuery {
    pub fn new(family: Family, n: u32, p: u32, k: u32, method: Method) -> Self {
        Self {
            family,
            n,
            p,
            k,
            method,
        }
    }
}

/// Which rule produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaUsed {
    /// `k > n` or `p > n`.
    OutOfRange,
    /// `p = 0`, the ordinary Gaussian binomial.
    PZero,
    /// `k = 0`, `p >= 1`.
    KZero,
    Method(Method),
}

impl fmt::Display for FormulaUsed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaUsed::OutOfRange => f.write_str("boundary:out_of_range"),
            FormulaUsed::PZero => f.write_str("boundary:p=0"),
            FormulaUsed::KZero => f.write_str("boundary:k=0"),
            FormulaUsed::Method(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoeffResult {
    pub query: CoeffQuery,
    pub value: LaurentPoly,
    pub formula_used: FormulaUsed,
}

fn boundary(n: u32, p: u32, k: u32) -> Option<(FormulaUsed, LaurentPoly)> {
    if k > n || p > n {
        Some((FormulaUsed::OutOfRange, LaurentPoly::zero()))
    } else if p == 0 {
        Some((FormulaUsed::PZero, q_binomial(n as i64, k as i64)))
    } else if k == 0 {
        Some((FormulaUsed::KZero, LaurentPoly::zero()))
    } else {
        None
    }
}

/// Computes one coefficient; the result is checked to be a polynomial in `q`
/// with nonnegative integer coefficients.
pub fn coeff(query: CoeffQuery) -> Result<CoeffResult> {
    let CoeffQuery {
        family,
        n,
        p,
        k,
        method,
    } = query;
    if !method.supports(family) {
        return Err(Error::UnsupportedMethod {
            family: family.to_string(),
            method: method.to_string(),
        });
    }
    let (formula_used, value) = match boundary(n, p, k) {
        Some(b) => b,
        None => {
            let m = method.resolve();
            (FormulaUsed::Method(m), formulas::evaluate(family, m, n, p, k)?)
        }
    };
    if !value.is_polynomial() {
        return Err(Error::NotPolynomial(format!(
            "{family}({n},{p},{k}) by {method}: {value}"
        )));
    }
    if let Some((e, c)) = value.terms().find(|(_, c)| c.sign() == num_bigint::Sign::Minus) {
        return Err(Error::NegativeCoefficient {
            exponent: e,
            coeff: c.to_string(),
        });
    }
    Ok(CoeffResult {
        query,
        value,
        formula_used,
    })
}

/// `(n; p, k)_q` by `method`.
pub fn first_coeff(n: u32, p: u32, k: u32, method: Method) -> Result<CoeffResult> {
    coeff(CoeffQuery::new(Family::First, n, p, k, method))
}

/// `[n; p, k]_q` by `method`.
pub fn second_coeff(n: u32, p: u32, k: u32, method: Method) -> Result<CoeffResult> {
    coeff(CoeffQuery::new(Family::Second, n, p, k, method))
}

/// Default-method value; panics only on an internal inconsistency.
pub fn value(family: Family, n: u32, p: u32, k: u32) -> LaurentPoly {
    coeff(CoeffQuery::new(family, n, p, k, Method::Default))
        .expect("positive split is always a nonnegative polynomial")
        .value
}

/// Rows `p = 1..=n`, columns `k = 1..=n` of the table for `n`.
pub fn table(family: Family, n: u32) -> Vec<Vec<LaurentPoly>> {
    (1..=n)
        .map(|p| (1..=n).map(|k| value(family, n, p, k)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbasic::q_integer;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.iter().copied())
    }

    fn all(family: Family, n: u32, pp: u32, k: u32) -> Vec<LaurentPoly> {
        Method::concrete_for(family)
            .into_iter()
            .chain([Method::Default])
            .map(|m| coeff(CoeffQuery::new(family, n, pp, k, m)).unwrap().value)
            .collect()
    }

    fn assert_all_eq(family: Family, n: u32, pp: u32, k: u32, expected: &LaurentPoly) {
        for (m, v) in Method::concrete_for(family).into_iter().zip(all(family, n, pp, k)) {
            assert_eq!(&v, expected, "{family}({n},{pp},{k}) by {m}");
        }
    }

    #[test]
    fn small_values() {
        assert_all_eq(Family::First, 2, 1, 1, &p(&[0, 1, 1]));
        assert_all_eq(Family::Second, 2, 1, 1, &p(&[1, 1]));
        // (1+q)(1+q^2)(2+q+q^2) q^2
        let v = p(&[1, 1]) * p(&[1, 0, 1]) * p(&[2, 1, 1]);
        assert_all_eq(Family::First, 4, 2, 3, &v.shift(2));
        // (1+q^2)(1+2q+3q^2+q^3)
        assert_all_eq(Family::Second, 4, 2, 2, &(p(&[1, 0, 1]) * p(&[1, 2, 3, 1])));
    }

    #[test]
    fn n5_values() {
        let (q3, q5) = (q_integer(3), q_integer(5));
        let first = (&q3 * &q5 * p(&[2, 0, 1])).shift(4);
        let second = &q3 * &q5 * p(&[1, 0, 2]);
        assert_all_eq(Family::First, 5, 2, 3, &first);
        assert_all_eq(Family::Second, 5, 2, 3, &second);
        assert_all_eq(Family::First, 5, 2, 2, &(&q5 * p(&[1, 2, 1, 1])).shift(5));
    }

    #[test]
    fn boundary_conventions() {
        for family in Family::ALL {
            let r = coeff(CoeffQuery::new(family, 3, 2, 0, Method::Default)).unwrap();
            assert!(r.value.is_zero());
            assert_eq!(r.formula_used, FormulaUsed::KZero);
            let r = coeff(CoeffQuery::new(family, 3, 0, 2, Method::Sum)).unwrap();
            assert_eq!(r.value, q_binomial(3, 2));
            assert_eq!(r.formula_used, FormulaUsed::PZero);
            assert!(value(family, 3, 4, 1).is_zero());
            assert!(value(family, 3, 1, 4).is_zero());
            assert_eq!(value(family, 0, 0, 0), LaurentPoly::one());
        }
    }

    #[test]
    fn column_n_and_second_family_k1() {
        for n in 1..=7u32 {
            for pp in 1..=n {
                for family in Family::ALL {
                    assert_all_eq(family, n, pp, n, &q_binomial(n as i64, pp as i64));
                }
                assert_all_eq(Family::Second, n, pp, 1, &q_integer(n));
            }
        }
    }

    #[test]
    fn transformed_is_first_family_only() {
        assert!(matches!(
            second_coeff(4, 2, 2, Method::Transformed),
            Err(Error::UnsupportedMethod { .. })
        ));
        // rejected even on the boundary, so the method/family pairing is uniform
        assert!(second_coeff(4, 0, 2, Method::Transformed).is_err());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert_eq!("positive-split".parse::<Method>().unwrap(), Method::PositiveSplit);
        assert!("nope".parse::<Method>().is_err());
        assert_eq!("second".parse::<Family>().unwrap(), Family::Second);
    }

    #[test]
    fn table_shape() {
        let t = table(Family::First, 3);
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|row| row.len() == 3));
        assert_eq!(t[2][0], value(Family::First, 3, 3, 1));
    }
}
