use rayon::prelude::*;
use serde::Serialize;

use super::{c_scaled, c_tilde, d_expand, triangular_solve, CTildeRoute, DRoute, LinExpansion, RVector};
use crate::lassalle::value;
use crate::lassalle::Family;
use crate::qbasic::{q_binomial, q_integer};
use crate::qpoly::{LaurentPoly, QFraction};
use crate::report::{Failure, Outcome, SweepReport};

/// Every `r` with `1 <= m <= m_max` entries in `1..=r_max`, lexicographic by `m` then entries.
pub fn r_vectors(m_max: usize, r_max: u32) -> Vec<RVector> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..m_max {
        layer = layer
            .into_iter()
            .flat_map(|prefix| {
                (1..=r_max).map(move |ri| {
                    let mut t = prefix.clone();
                    t.push(ri);
                    t
                })
            })
            .collect();
        out.extend(
            layer
                .iter()
                .map(|v| RVector::new(v.clone()).expect("entries are positive")),
        );
    }
    out
}

fn permutations(v: &[u32]) -> Vec<Vec<u32>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `d_l(r)` is unchanged under every permutation of `r`.
pub fn check_d_symmetry(r: &RVector) -> Outcome {
    let base = d_expand(r, DRoute::Iterated).expect("iterated route accepts any r");
    for perm in permutations(r.entries()) {
        let pr = RVector::new(perm).expect("permutation keeps entries positive");
        let d = d_expand(&pr, DRoute::Iterated).expect("iterated route accepts any r");
        if d != base {
            return Some(Failure::new(format!("d symmetry {r} vs {pr}"), &base, &d));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeCheck {
    pub r1: u32,
    pub r2: u32,
    /// `k` where `c_k(r1,r2) != q^(k(k-1)-r1 r2) (r1+r2; r1, k)_q`.
    pub coefficient_mismatches: Vec<u32>,
    /// Integer `x` where the two sides of the expansion differ.
    pub sample_mismatches: Vec<u32>,
}

impl BridgeCheck {
    pub fn holds(&self) -> bool {
        self.coefficient_mismatches.is_empty() && self.sample_mismatches.is_empty()
    }
}

/// `c_k(r1, r2) = q^(k(k-1) - r1 r2) (r1+r2; r1, k)_q` for `1 <= k <= r1+r2`,
/// and the resulting expansion of `[x+r1-1 r1][x+r2-1 r2]` at `x = 0..=r1+r2`.
pub fn check_bridge(r1: u32, r2: u32) -> BridgeCheck {
    let r = RVector::new(vec![r1, r2]).expect("r1, r2 >= 1");
    let c = c_scaled(&r).expect("c_l is a polynomial");
    let n = r1 + r2;
    let shift = -((r1 * r2) as i64);
    let coefficient_mismatches = (1..=n)
        .filter(|&k| {
            let ki = k as i64;
            let bridge = value(Family::First, n, r1, k).shift(ki * (ki - 1) + shift);
            c.expansion.coeff(k) != bridge
        })
        .collect();
    let sample_mismatches = (0..=n)
        .filter(|&x| {
            let xi = x as i64;
            let lhs = QFraction::from_poly(
                q_binomial(xi + r1 as i64 - 1, r1 as i64) * q_binomial(xi + r2 as i64 - 1, r2 as i64),
            );
            let rhs: QFraction = (1..=n)
                .map(|k| {
                    let ki = k as i64;
                    let num =
                        q_integer(k) * value(Family::First, n, r1, k).shift(ki * (ki - 1) + shift) * q_binomial(xi, ki);
                    QFraction::ratio(&num, &q_integer(n)).expect("[r1+r2]_q is nonzero")
                })
                .sum();
            lhs != rhs
        })
        .collect();
    BridgeCheck {
        r1,
        r2,
        coefficient_mismatches,
        sample_mismatches,
    }
}

fn differ(case: String, a: &LinExpansion, b: &LinExpansion) -> Outcome {
    (a != b).then(|| {
        Failure::new(
            case,
            a.to_string().replace('\n', "; "),
            b.to_string().replace('\n', "; "),
        )
    })
}

/// Per `r`: both `d` routes, positivity and symmetry of `d`, the triangular
/// solve on the unshifted product, all four `c~` routes, and `c_l`
/// (polynomial, q-positive, double-sum form). Outcomes follow [`r_vectors`] order.
pub fn linearization_battery(m_max: usize, r_max: u32) -> SweepReport {
    let rs = r_vectors(m_max, r_max);
    let per_r: Vec<Vec<Outcome>> = rs.par_iter().map(check_one).collect();
    let mut report = SweepReport::from_outcomes("linearization", per_r.into_iter().flatten());
    if let Some(reading) = rs.first().and_then(|r| c_scaled(r).ok()).map(|c| c.q1_reading) {
        report
            .notes
            .push(format!("double-sum form of c_l matched with reading {reading:?}"));
    }
    report
}

fn check_one(r: &RVector) -> Vec<Outcome> {
    let mut out = Vec::new();
    let d = d_expand(r, DRoute::Iterated).expect("iterated route accepts any r");
    if r.m() >= 2 {
        let closed = d_expand(r, DRoute::Closed).expect("m >= 2");
        out.push(differ(format!("d iterated vs closed {r}"), &d, &closed));
    }
    out.push((!d.is_q_positive()).then(|| Failure::new(format!("d positivity {r}"), d.to_string(), "q-positive")));
    out.push(check_d_symmetry(r));
    let values: Vec<QFraction> = (0..=r.total() as i64)
        .map(|x| {
            QFraction::from_poly(
                r.entries()
                    .iter()
                    .map(|&ri| q_binomial(x, ri as i64))
                    .product::<LaurentPoly>(),
            )
        })
        .collect();
    out.push(match triangular_solve(&values) {
        Ok(t) => differ(format!("d triangular {r}"), &d, &t),
        Err(e) => Some(Failure::error(format!("d triangular {r}"), e)),
    });

    let reference = c_tilde(r, CTildeRoute::ViaD).expect("via_d is total");
    for route in [
        CTildeRoute::ViaDiff,
        CTildeRoute::NewtonOracle,
        CTildeRoute::TriangularOracle,
    ] {
        out.push(match c_tilde(r, route) {
            Ok(c) => differ(format!("c_tilde via_d vs {route} {r}"), &reference, &c),
            Err(e) => Some(Failure::error(format!("c_tilde {route} {r}"), e)),
        });
    }
    out.push(match c_scaled(r) {
        Ok(c) if c.expansion.is_q_positive() => None,
        Ok(c) => Some(Failure::new(
            format!("c positivity {r}"),
            c.expansion.to_string(),
            "q-positive",
        )),
        Err(e) => Some(Failure::error(format!("c_scaled {r}"), e)),
    });
    out
}
