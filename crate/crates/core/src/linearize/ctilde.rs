use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{d_iterated, shift_expand, LinExpansion, RVector};
use crate::error::{Error, Result};
use crate::qbasic::{q_binomial, q_integer};
use crate::qpoly::{LaurentPoly, QFraction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CTildeRoute {
    /// Sum over `k` of `d_l(k)` weighted by the shift expansion.
    ViaD,
    /// Alternating single sum from the q-difference operator.
    ViaDiff,
    /// `Delta_q^k p(0)` by the operator recursion.
    NewtonOracle,
    /// Back-substitution against `[x l]_q` at integer points.
    TriangularOracle,
}

impl CTildeRoute {
    pub const ALL: [CTildeRoute; 4] = [
        CTildeRoute::ViaD,
        CTildeRoute::ViaDiff,
        CTildeRoute::NewtonOracle,
        CTildeRoute::TriangularOracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CTildeRoute::ViaD => "via_d",
            CTildeRoute::ViaDiff => "via_diff",
            CTildeRoute::NewtonOracle => "newton_oracle",
            CTildeRoute::TriangularOracle => "triangular_oracle",
        }
    }
}

impl fmt::Display for CTildeRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CTildeRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CTildeRoute::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown c_tilde route {s:?}")))
    }
}

/// `p(x) = prod_i [x+r_i-1 r_i]_q` at an integer `x`.
fn shifted_product_at(r: &RVector, x: u32) -> LaurentPoly {
    r.entries()
        .iter()
        .map(|&ri| q_binomial(x as i64 + ri as i64 - 1, ri as i64))
        .product()
}

fn all_k_tuples(r: &[u32]) -> Vec<Vec<u32>> {
    r.iter().fold(vec![Vec::new()], |acc, &ri| {
        acc.into_iter()
            .flat_map(|prefix| {
                (1..=ri).map(move |ki| {
                    let mut t = prefix.clone();
                    t.push(ki);
                    t
                })
            })
            .collect()
    })
}

fn via_d(r: &RVector) -> LinExpansion {
    let shifts: Vec<LinExpansion> = r.entries().iter().map(|&ri| shift_expand(ri)).collect();
    let mut memo: HashMap<Vec<u32>, LinExpansion> = HashMap::new();
    let mut out = LinExpansion::new();
    for k in all_k_tuples(r.entries()) {
        let weight: LaurentPoly = k.iter().zip(&shifts).map(|(&ki, s)| s.coeff(ki)).product();
        let d = memo.entry(k.clone()).or_insert_with(|| d_iterated(&k));
        for (l, c) in d.iter() {
            out.add(l, c * &weight);
        }
    }
    out
}

fn via_diff(r: &RVector) -> LinExpansion {
    let mut out = LinExpansion::new();
    for k in 1..=r.total() as i64 {
        let c: LaurentPoly = (1..=k)
            .map(|j| {
                let sign = if (k - j) % 2 == 1 { -1 } else { 1 };
                let prod: LaurentPoly = r
                    .entries()
                    .iter()
                    .map(|&rl| q_binomial(j + rl as i64 - 1, rl as i64))
                    .product();
                q_binomial(k, j) * LaurentPoly::monomial(sign, (k - j) * (k - j - 1) / 2) * prod
            })
            .sum();
        out.add(k as u32, c);
    }
    out
}

/// `Delta^(n+1) = Delta^n (E - q^n I)`: row `n` holds `Delta^n p(x)` for
/// `x = 0..=K-n`.
fn newton_oracle(r: &RVector) -> LinExpansion {
    let top = r.total();
    let mut row: Vec<LaurentPoly> = (0..=top).map(|x| shifted_product_at(r, x)).collect();
    let mut out = LinExpansion::new();
    out.add(0, row[0].clone());
    for n in 0..top {
        row = row.windows(2).map(|w| &w[1] - w[0].shift(n as i64)).collect();
        out.add(n + 1, row[0].clone());
    }
    out
}

/// Coefficients `a_l` with `values[x] = sum_l a_l [x l]_q` for `x = 0..values.len()`.
///
/// Ascending in `l`: `a_l = values[l] - sum_{l' < l} a_l' [l l']_q`, using
/// `[l l]_q = 1` and `[x l]_q = 0` for `x < l`.
pub fn triangular_solve(values: &[QFraction]) -> Result<LinExpansion> {
    let mut found: Vec<QFraction> = Vec::with_capacity(values.len());
    let mut out = LinExpansion::new();
    for (l, v) in values.iter().enumerate() {
        let li = l as i64;
        let below: QFraction = found
            .iter()
            .enumerate()
            .map(|(lp, a)| a * QFraction::from_poly(q_binomial(li, lp as i64)))
            .sum();
        let a = v - below;
        out.add(l as u32, a.to_polynomial()?);
        found.push(a);
    }
    Ok(out)
}

fn triangular_oracle(r: &RVector) -> Result<LinExpansion> {
    let values: Vec<QFraction> = (0..=r.total())
        .map(|x| QFraction::from_poly(shifted_product_at(r, x)))
        .collect();
    triangular_solve(&values)
}

/// `c~_l(r)` by the chosen route.
pub fn c_tilde(r: &RVector, route: CTildeRoute) -> Result<LinExpansion> {
    match route {
        CTildeRoute::ViaD => Ok(via_d(r)),
        CTildeRoute::ViaDiff => Ok(via_diff(r)),
        CTildeRoute::NewtonOracle => Ok(newton_oracle(r)),
        CTildeRoute::TriangularOracle => triangular_oracle(r),
    }
}

/// Index conventions tried for the double-sum form of `c_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Q1Reading {
    /// As displayed: `[j+r_i-1 r_i] prod_{l != j} [r_l+i-1 r_l]`.
    A,
    /// `[j+r_i-1 r_i] prod_{l != i} [r_l+j-1 r_l]`.
    B,
    /// `[j+r_i-1 r_i-1] prod_{l != i} [r_l+j-1 r_l]`.
    C,
}

impl Q1Reading {
    pub const ALL: [Q1Reading; 3] = [Q1Reading::A, Q1Reading::B, Q1Reading::C];
}

fn q1_double_sum(r: &[u32], k: i64, reading: Q1Reading) -> LaurentPoly {
    let m = r.len();
    let mut total = LaurentPoly::zero();
    for i in 0..m {
        let ri = r[i] as i64;
        let offset: i64 = r[..i].iter().map(|&x| x as i64).sum();
        for j in 1..=k {
            let sign = if (k - j) % 2 == 1 { -1 } else { 1 };
            let lead = match reading {
                Q1Reading::A | Q1Reading::B => q_binomial(j + ri - 1, ri),
                Q1Reading::C => q_binomial(j + ri - 1, ri - 1),
            };
            // 1-based i and j as in the display
            let (i1, j1) = (i as i64 + 1, j);
            let prod: LaurentPoly = (0..m)
                .filter(|&l| match reading {
                    Q1Reading::A => l as i64 + 1 != j1,
                    Q1Reading::B | Q1Reading::C => l != i,
                })
                .map(|l| {
                    let rl = r[l] as i64;
                    let top = match reading {
                        Q1Reading::A => rl + i1 - 1,
                        Q1Reading::B | Q1Reading::C => rl + j - 1,
                    };
                    q_binomial(top, rl)
                })
                .product();
            total += LaurentPoly::monomial(sign, offset + (k - j) * (k - j - 1) / 2)
                * q_binomial(k - 1, j - 1)
                * lead
                * prod;
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CScaled {
    pub expansion: LinExpansion,
    /// First reading of the double-sum form that reproduces every coefficient.
    pub q1_reading: Q1Reading,
    /// Readings tried before it that disagreed.
    pub rejected: Vec<Q1Reading>,
}

/// `c_l(r) = [|r|]_q / [l]_q * c~_l(r)`, cross-checked against the double-sum form.
pub fn c_scaled(r: &RVector) -> Result<CScaled> {
    let ct = c_tilde(r, CTildeRoute::ViaDiff)?;
    let total = q_integer(r.total());
    let mut expansion = LinExpansion::new();
    for (l, c) in ct.iter() {
        expansion.add(l, (c * &total).exact_div(&q_integer(l))?);
    }
    let mut rejected = Vec::new();
    for reading in Q1Reading::ALL {
        let agrees = (1..=r.total()).all(|k| q1_double_sum(r.entries(), k as i64, reading) == expansion.coeff(k));
        if agrees {
            return Ok(CScaled {
                expansion,
                q1_reading: reading,
                rejected,
            });
        }
        rejected.push(reading);
    }
    Err(Error::RouteMismatch(format!(
        "no reading of the double-sum form matches c_l{r}"
    )))
}
