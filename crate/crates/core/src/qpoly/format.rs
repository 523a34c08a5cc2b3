//! Text and JSON forms of [`LaurentPoly`].
//!
//! Text: terms in ascending exponent order joined by `" + "` / `" - "`, with
//! tokens `1`, `q`, `q^2`, `2q^2`, `q^-1`. JSON: `{"min_exp": m, "coeffs": [..]}`
//! with the dense coefficient run ascending from `q^m`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, QFraction};
use crate::error::Error;

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64) -> fmt::Result {
    match e {
        0 => write!(f, "{c}"),
        _ => {
            if !c.is_one() {
                write!(f, "{c}")?;
            }
            if e == 1 {
                write!(f, "q")
            } else {
                write!(f, "q^{e}")
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, &magnitude, e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn parse_term(token: &str, input: &str) -> Result<(i64, BigInt), Error> {
    let err = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let token = token.trim();
    if token.is_empty() {
        return Err(err("empty term"));
    }
    let (coeff_part, exp) = match token.find('q') {
        None => (token, 0),
        Some(pos) => {
            let rest = token[pos + 1..].trim();
            let exp = if rest.is_empty() {
                1
            } else {
                let digits = rest.strip_prefix('^').ok_or_else(|| err("expected '^' after q"))?;
                let digits = digits.trim().trim_start_matches('{').trim_end_matches('}');
                digits.parse::<i64>().map_err(|_| err("bad exponent"))?
            };
            (token[..pos].trim().trim_end_matches('*').trim(), exp)
        }
    };
    let coeff = if coeff_part.is_empty() {
        if exp == 0 {
            return Err(err("empty term"));
        }
        BigInt::one()
    } else {
        coeff_part.parse::<BigInt>().map_err(|_| err("bad coefficient"))?
    };
    Ok((exp, coeff))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the canonical text form and compact variants such as
    /// `1+3q+2q^2`, `-q^-1 + 2`, `2*q^3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty input".into(),
            });
        }
        let mut pairs = Vec::new();
        let mut sign = BigInt::one();
        let mut current = String::new();
        let mut prev: Option<char> = None;
        for ch in trimmed.chars() {
            let is_exponent_sign = ch == '-' && matches!(prev, Some('^') | Some('{'));
            if (ch == '+' || ch == '-') && !is_exponent_sign {
                if !current.trim().is_empty() {
                    let (e, c) = parse_term(&current, s)?;
                    pairs.push((e, &sign * c));
                    sign = BigInt::one();
                } else if ch == '+' && prev.is_some_and(|p| p != ' ') {
                    return Err(Error::Parse {
                        input: s.to_string(),
                        reason: "dangling '+'".into(),
                    });
                }
                if ch == '-' {
                    sign = -sign;
                }
                current.clear();
            } else {
                current.push(ch);
            }
            if !ch.is_whitespace() {
                prev = Some(ch);
            }
        }
        let (e, c) = parse_term(&current, s)?;
        pairs.push((e, &sign * c));
        Ok(LaurentPoly::from_terms(pairs))
    }
}

/// Wire shape of the polynomial JSON schema.
#[derive(Serialize, Deserialize)]
struct PolyJson {
    min_exp: i64,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (min_exp, coeffs) = self.to_dense();
        let coeffs = coeffs
            .iter()
            .map(|c| {
                c.to_string()
                    .parse::<serde_json::Number>()
                    .map_err(serde::ser::Error::custom)
            })
            .collect::<Result<Vec<_>, _>>()?;
        PolyJson { min_exp, coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|n| {
                n.to_string()
                    .parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("coefficient {n} is not an integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.is_empty() && raw.min_exp != 0 {
            return Err(D::Error::custom("zero polynomial must have min_exp 0"));
        }
        if coeffs.first().is_some_and(Zero::is_zero) || coeffs.last().is_some_and(Zero::is_zero) {
            return Err(D::Error::custom("coefficient run must not start or end with 0"));
        }
        Ok(LaurentPoly::from_coeffs(raw.min_exp, coeffs))
    }
}

impl Serialize for QFraction {
    /// `{"num": poly, "den": poly}` in normal form.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct FracJson<'a> {
            num: &'a LaurentPoly,
            den: &'a LaurentPoly,
        }
        FracJson {
            num: self.numer(),
            den: self.denom(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QFraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct FracJson {
            num: LaurentPoly,
            den: LaurentPoly,
        }
        let raw = FracJson::deserialize(deserializer)?;
        QFraction::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}
