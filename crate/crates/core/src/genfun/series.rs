use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::qpoly::{LaurentPoly, QFraction};

/// Polynomial in `y` with coefficients in `Q(q)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct YSeriesPoly {
    terms: BTreeMap<u32, QFraction>,
}

impl YSeriesPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(QFraction::one(), 0)
    }

    pub fn monomial(c: QFraction, deg: u32) -> Self {
        let mut s = Self::zero();
        s.add_term(deg, c);
        s
    }

    fn add_term(&mut self, deg: u32, c: QFraction) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(deg).or_insert_with(QFraction::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&deg);
        }
    }

    pub fn coeff(&self, deg: u32) -> QFraction {
        self.terms.get(&deg).cloned().unwrap_or_else(QFraction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &QFraction)> + '_ {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &QFraction) -> Self {
        let mut out = Self::zero();
        for (&d, v) in &self.terms {
            out.add_term(d, v * c);
        }
        out
    }

    /// Drops every term of degree above `max_deg`.
    pub fn truncate(&self, max_deg: u32) -> Self {
        Self {
            terms: self.terms.range(..=max_deg).map(|(&d, c)| (d, c.clone())).collect(),
        }
    }
}

impl Add for &YSeriesPoly {
    type Output = YSeriesPoly;
    fn add(self, rhs: &YSeriesPoly) -> YSeriesPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Mul for &YSeriesPoly {
    type Output = YSeriesPoly;
    fn mul(self, rhs: &YSeriesPoly) -> YSeriesPoly {
        let mut out = YSeriesPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for YSeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})y^{d}")?;
        }
        Ok(())
    }
}

/// `prod_{j < len} (1 - sign * y * q^(a_exp + j))` expanded by multiplication.
pub fn y_pochhammer(sign: i8, a_exp: i64, len: u32) -> YSeriesPoly {
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    (0..len as i64).fold(YSeriesPoly::one(), |acc, j| {
        let linear = &YSeriesPoly::one()
            + &YSeriesPoly::monomial(QFraction::from_poly(LaurentPoly::monomial(-sign, a_exp + j)), 1);
        &acc * &linear
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Polynomial in `x, y` with coefficients in `Q(q)`, keyed by `(deg_x, deg_y)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), QFraction>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: QFraction, dx: u32, dy: u32) -> Self {
        let mut s = Self::zero();
        s.add_term((dx, dy), c);
        s
    }

    pub fn add_term(&mut self, key: (u32, u32), c: QFraction) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(QFraction::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> QFraction {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(QFraction::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &QFraction)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_y(s: &YSeriesPoly) -> Self {
        Self::embed(s, Var::Y)
    }

    /// Reads a y-polynomial as a polynomial in `var`.
    pub fn embed(s: &YSeriesPoly, var: Var) -> Self {
        let mut out = Self::zero();
        for (d, c) in s.terms() {
            let key = match var {
                Var::X => (d, 0),
                Var::Y => (0, d),
            };
            out.add_term(key, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &QFraction) -> Self {
        let mut out = Self::zero();
        for (&k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    /// Coefficient of `x^dx` as a polynomial in `y`.
    pub fn x_slice(&self, dx: u32) -> YSeriesPoly {
        let mut out = YSeriesPoly::zero();
        for (&(a, b), c) in self.terms.range((dx, 0)..=(dx, u32::MAX)) {
            debug_assert_eq!(a, dx);
            out.add_term(b, c.clone());
        }
        out
    }

    /// Exact quotient by `1 + q^e * var`; errors if the division leaves a remainder.
    pub fn div_linear(&self, var: Var, e: i64) -> Result<Self> {
        let c = QFraction::q_pow(e);
        // group by the other variable's degree: P = sum_j a_j v^j
        let mut groups: BTreeMap<u32, BTreeMap<u32, QFraction>> = BTreeMap::new();
        for (&(dx, dy), v) in &self.terms {
            let (other, own) = match var {
                Var::X => (dy, dx),
                Var::Y => (dx, dy),
            };
            groups.entry(other).or_default().insert(own, v.clone());
        }
        let mut out = Self::zero();
        for (other, coeffs) in groups {
            let top = *coeffs.keys().next_back().expect("groups are nonempty");
            // a_j = b_j + c b_(j-1)
            let mut prev = QFraction::zero();
            for j in 0..top {
                let a = coeffs.get(&j).cloned().unwrap_or_else(QFraction::zero);
                let b = a - &c * &prev;
                let key = match var {
                    Var::X => (j, other),
                    Var::Y => (other, j),
                };
                out.add_term(key, b.clone());
                prev = b;
            }
            if coeffs[&top] != &c * &prev {
                return Err(Error::NotPolynomial(format!("not divisible by 1 + q^{e} {var:?}")));
            }
        }
        Ok(out)
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), ca) in &self.terms {
            for (&(a2, b2), cb) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbasic::q_binomial;

    fn f(c: &[i64]) -> QFraction {
        QFraction::from_poly(LaurentPoly::from_coeffs(0, c.iter().copied()))
    }

    #[test]
    fn pochhammer_examples() {
        let s = y_pochhammer(-1, 0, 2);
        assert_eq!(s.coeff(0), f(&[1]));
        assert_eq!(s.coeff(1), f(&[1, 1]));
        assert_eq!(s.coeff(2), f(&[0, 1]));
        assert_eq!(y_pochhammer(1, 5, 0), YSeriesPoly::one());
    }

    #[test]
    fn pochhammer_matches_q_binomial_theorem() {
        for p in 0..=7u32 {
            let s = y_pochhammer(-1, 0, p);
            for j in 0..=p {
                let expected = q_binomial(p as i64, j as i64).shift((j * j.saturating_sub(1) / 2) as i64);
                assert_eq!(s.coeff(j), QFraction::from_poly(expected));
            }
        }
    }

    #[test]
    fn linear_division_inverts_multiplication() {
        let a = BivarPoly::from_y(&y_pochhammer(-1, 0, 3));
        let x_fac = BivarPoly::embed(&y_pochhammer(-1, 2, 2), Var::X);
        let prod = &a * &x_fac;
        let back = prod.div_linear(Var::X, 3).unwrap().div_linear(Var::X, 2).unwrap();
        assert_eq!(back, a);
        let y_only = prod.div_linear(Var::Y, 1).unwrap();
        assert_eq!(&y_only * &BivarPoly::from_y(&y_pochhammer(-1, 1, 1)), prod);
        assert!(a.div_linear(Var::Y, 7).is_err());
    }
}
