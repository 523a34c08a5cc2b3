//! Linearization of products of Gaussian binomials in the basis `[x l]_q`.
//!
//! `d_l(r)` expands `[x r_1] ... [x r_m]`, `c~_l(r)` expands the shifted
//! product `[x+r_1-1 r_1] ... [x+r_m-1 r_m]`, and
//! `c_l(r) = [|r|]_q / [l]_q * c~_l(r)`.

mod checks;
mod ctilde;
mod qdiff;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qbasic::{q_binomial, q_multinomial};
use crate::qpoly::LaurentPoly;

pub use checks::{check_bridge, check_d_symmetry, linearization_battery, r_vectors, BridgeCheck};
pub use ctilde::{c_scaled, c_tilde, triangular_solve, CScaled, CTildeRoute, Q1Reading};
pub use qdiff::{check_qdiff_falling, falling_factorial, qdiff_apply, qdiff_sweep, QDiffCheck};

/// Entries `r_1, ..., r_m`, all at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RVector(Vec<u32>);

impl RVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("r must have at least one entry".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidArgument("entries of r must be positive".into()));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// `|r| = r_1 + ... + r_m`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_entry(&self) -> u32 {
        *self.0.iter().max().expect("r is nonempty")
    }
}

impl FromStr for RVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad entry {t:?} in r = {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Coefficients on the basis `{[x l]_q}`, keyed by `l`; zeros are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LinExpansion {
    coeffs: BTreeMap<u32, LaurentPoly>,
}

impl LinExpansion {
    pub const BASIS: &'static str = "binom";

    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(l: u32) -> Self {
        let mut e = Self::new();
        e.add(l, LaurentPoly::one());
        e
    }

    pub fn add(&mut self, l: u32, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(l).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn coeff(&self, l: u32) -> LaurentPoly {
        self.coeffs.get(&l).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(&l, c)| (l, c))
    }

    pub fn support(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_q_positive(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.is_polynomial() && c.has_nonnegative_coeffs())
    }

    /// `sum_l c_l [x l]_q` at an integer `x`.
    pub fn eval_at(&self, x: u32) -> LaurentPoly {
        self.iter().map(|(l, c)| c * q_binomial(x as i64, l as i64)).sum()
    }
}

impl fmt::Display for LinExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, c)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{l}: {c}")?;
        }
        Ok(())
    }
}

/// `[x r1][x r2] = sum_l q^((l-r1)(l-r2)) [l r1][r1 l-r2] [x l]`.
pub fn product_rule(r1: u32, r2: u32) -> LinExpansion {
    let (a, b) = (r1 as i64, r2 as i64);
    let mut out = LinExpansion::new();
    for l in r1.max(r2)..=r1 + r2 {
        let li = l as i64;
        out.add(
            l,
            q_binomial(li, a) * q_binomial(a, li - b) * LaurentPoly::q_pow((li - a) * (li - b)),
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DRoute {
    /// Repeated application of the product rule.
    Iterated,
    /// Nested sum over `k_1..k_(m-2)` with q-multinomial weights.
    Closed,
}

impl FromStr for DRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "iterated" => Ok(DRoute::Iterated),
            "closed" => Ok(DRoute::Closed),
            _ => Err(Error::InvalidArgument(format!("unknown d route {s:?}"))),
        }
    }
}

/// `d_l(r)`: expansion of `[x r_1] ... [x r_m]`.
pub fn d_expand(r: &RVector, route: DRoute) -> Result<LinExpansion> {
    match route {
        DRoute::Iterated => Ok(d_iterated(r.entries())),
        DRoute::Closed if r.m() < 2 => Err(Error::InvalidArgument("closed route needs m >= 2".into())),
        DRoute::Closed => Ok(d_closed(r.entries())),
    }
}

pub(crate) fn d_iterated(r: &[u32]) -> LinExpansion {
    let mut cur = LinExpansion::single(r[0]);
    for &rj in &r[1..] {
        let mut next = LinExpansion::new();
        for (l, c) in cur.iter() {
            for (l2, c2) in product_rule(l, rj).iter() {
                next.add(l2, c * c2);
            }
        }
        cur = next;
    }
    cur
}

fn d_closed(r: &[u32]) -> LinExpansion {
    let m = r.len();
    let mut out = LinExpansion::new();
    // s = r_1 + ... + r_j - k_1 - ... - k_(j-1) after choosing k_1..k_(j-1)
    fn nest(r: &[u32], j: usize, s: i64, weight: LaurentPoly, b: i64, out: &mut LinExpansion) {
        let m = r.len();
        if j == m - 1 {
            let rm = r[m - 1] as i64;
            for l in 0..=s + rm {
                let c = q_binomial(l, rm) * q_binomial(rm, s + rm - l) * LaurentPoly::q_pow(b + (l - rm) * (l - s));
                out.add(l as u32, &weight * c);
            }
            return;
        }
        let rn = r[j] as i64;
        for kj in 0..=s.min(rn) {
            let s2 = s + rn - kj;
            let w = q_multinomial(s2, &[kj, s - kj, rn - kj]);
            nest(r, j + 1, s2, &weight * w, b + (s - kj) * (rn - kj), out);
        }
    }
    if m == 1 {
        return LinExpansion::single(r[0]);
    }
    nest(r, 1, r[0] as i64, LaurentPoly::one(), 0, &mut out);
    out
}

/// `[x+r1-1 r1] = sum_k [r1-1 r1-k] q^(k(k-1)) [x k]`.
pub fn shift_expand(r1: u32) -> LinExpansion {
    let r = r1 as i64;
    let mut out = LinExpansion::new();
    for k in 1..=r1 {
        let ki = k as i64;
        out.add(k, q_binomial(r - 1, r - ki).shift(ki * (ki - 1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbasic::q_integer;

    fn rv(s: &str) -> RVector {
        s.parse().unwrap()
    }

    #[test]
    fn r_vector_parsing() {
        assert_eq!(rv("1, 2,3").entries(), &[1, 2, 3]);
        assert_eq!(rv("4").total(), 4);
        assert!("".parse::<RVector>().is_err());
        assert!("1,0".parse::<RVector>().is_err());
        assert!("1,x".parse::<RVector>().is_err());
        assert_eq!(rv("2,3").to_string(), "(2,3)");
    }

    #[test]
    fn product_rule_examples() {
        let d = product_rule(1, 1);
        assert_eq!(d.coeff(1), LaurentPoly::one());
        assert_eq!(d.coeff(2), LaurentPoly::from_coeffs(1, [1, 1]));
        let d = product_rule(2, 2);
        assert_eq!(d.coeff(3), (q_integer(3) * q_integer(2)).shift(1));
        assert_eq!(d.support(), vec![2, 3, 4]);
        for r1 in 1..=5 {
            for r2 in 1..=5 {
                let d = product_rule(r1, r2);
                let top = q_binomial((r1 + r2) as i64, r1 as i64).shift((r1 * r2) as i64);
                assert_eq!(d.coeff(r1 + r2), top);
                assert_eq!(d.support(), (r1.max(r2)..=r1 + r2).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn d_routes_agree_and_m1_is_trivial() {
        assert_eq!(d_expand(&rv("3"), DRoute::Iterated).unwrap(), LinExpansion::single(3));
        assert!(d_expand(&rv("3"), DRoute::Closed).is_err());
        for s in ["1,1", "2,3", "1,1,1", "2,1,3", "1,2,2,1"] {
            let r = rv(s);
            let a = d_expand(&r, DRoute::Iterated).unwrap();
            assert_eq!(a, d_expand(&r, DRoute::Closed).unwrap(), "{s}");
            assert!(a.is_q_positive());
            let lo = r.max_entry();
            assert!(a.support().iter().all(|&l| lo <= l && l <= r.total()));
        }
        assert_eq!(d_expand(&rv("2,3"), DRoute::Closed).unwrap(), product_rule(2, 3));
    }

    #[test]
    fn d_matches_values_at_integer_points() {
        let r = rv("2,1,3");
        let d = d_expand(&r, DRoute::Iterated).unwrap();
        for x in 0..=8u32 {
            let direct: LaurentPoly = r.entries().iter().map(|&ri| q_binomial(x as i64, ri as i64)).product();
            assert_eq!(d.eval_at(x), direct, "x={x}");
        }
    }

    #[test]
    fn shift_expand_examples() {
        assert_eq!(shift_expand(1), LinExpansion::single(1));
        let e = shift_expand(2);
        assert_eq!(e.coeff(1), LaurentPoly::one());
        assert_eq!(e.coeff(2), LaurentPoly::q_pow(2));
        assert_eq!(shift_expand(3).coeff(3), LaurentPoly::q_pow(6));
    }
}
