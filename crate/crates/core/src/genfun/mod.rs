//! The joint and single generating functions of both coefficient families,
//! checked as exact polynomial identities in `x` and `y`.

mod series;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::lassalle::{expansion_raw, value, Family};
use crate::qbasic::{q_binomial, q_integer, q_pochhammer};
use crate::qpoly::{LaurentPoly, QFraction};
use crate::report::{Failure, Outcome, SweepReport};

pub use series::{y_pochhammer, BivarPoly, Var, YSeriesPoly};

fn c2(m: i64) -> i64 {
    m * (m - 1) / 2
}

fn frac(p: LaurentPoly) -> QFraction {
    QFraction::from_poly(p)
}

/// One coefficient where the two sides disagree, rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub x_degree: u32,
    pub y_degree: u32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GfCheck {
    pub family: Family,
    pub n: u32,
    /// Set for the single generating function.
    pub p: Option<u32>,
    pub terms_compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl GfCheck {
    pub fn equal(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn case(&self) -> String {
        match self.p {
            Some(p) => format!("single/{}(n={},p={p})", self.family, self.n),
            None => format!("joint/{}(n={})", self.family, self.n),
        }
    }

    fn outcome(&self) -> Outcome {
        self.mismatches.first().map(|m| {
            Failure::new(
                format!(
                    "{} at x^{} y^{} ({} mismatches)",
                    self.case(),
                    m.x_degree,
                    m.y_degree,
                    self.mismatches.len()
                ),
                &m.lhs,
                &m.rhs,
            )
        })
    }
}

fn compare_bivar(lhs: &BivarPoly, rhs: &BivarPoly) -> (usize, Vec<Mismatch>) {
    let mut keys: Vec<_> = lhs.terms().map(|(k, _)| k).chain(rhs.terms().map(|(k, _)| k)).collect();
    keys.sort_unstable();
    keys.dedup();
    let mismatches = keys
        .iter()
        .filter_map(|&(dx, dy)| {
            let (a, b) = (lhs.coeff(dx, dy), rhs.coeff(dx, dy));
            (a != b).then(|| Mismatch {
                x_degree: dx,
                y_degree: dy,
                lhs: a.to_string(),
                rhs: b.to_string(),
            })
        })
        .collect();
    (keys.len(), mismatches)
}

/// `sum_{p,k} C(n,p,k) x^p q^C(p,2) y^k q^C(k,2)`. The `k = 0` column takes
/// the value of the alternating expansion there (1 at `p = 0` and `p = n`),
/// which is what the closed product form produces.
pub fn joint_lhs(family: Family, n: u32) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for p in 0..=n {
        for k in 0..=n {
            let c = if k == 0 {
                expansion_raw(family, n, p, 0)
            } else {
                frac(value(family, n, p, k))
            };
            out.add_term((p, k), c.shift(c2(p as i64) + c2(k as i64)));
        }
    }
    out
}

/// Product side: `(-y;q)_n (-x;q)_n sum_i [n]/[n-i] [n-i i] (-x)^i q^(i^2-i)`
/// divided per term by `(-x;q)_i (-x q^(n-i);q)_i` and by `(-y q^(n-i);q)_i`
/// (first family) or `(-y;q)_i` (second family).
pub fn joint_rhs(family: Family, n: u32) -> Result<BivarPoly> {
    let ni = n as i64;
    let numerator = &BivarPoly::from_y(&y_pochhammer(-1, 0, n)) * &BivarPoly::embed(&y_pochhammer(-1, 0, n), Var::X);
    let mut out = BivarPoly::zero();
    for i in 0..=n / 2 {
        let ii = i as i64;
        let mut term = numerator.clone();
        for j in 0..ii {
            term = term.div_linear(Var::X, j)?.div_linear(Var::X, ni - ii + j)?;
            let y_exp = match family {
                Family::First => ni - ii + j,
                Family::Second => j,
            };
            term = term.div_linear(Var::Y, y_exp)?;
        }
        let sign = if i % 2 == 1 { -1 } else { 1 };
        let weight = QFraction::ratio(
            &(q_integer(n) * q_binomial(ni - ii, ii) * LaurentPoly::monomial(sign, ii * ii - ii)),
            &q_integer(n - i),
        )?;
        let shifted = &term * &BivarPoly::monomial(QFraction::one(), i, 0);
        out = &out + &shifted.scale(&weight);
    }
    Ok(out)
}

/// Checks the joint generating function of `family` at level `n`.
pub fn check_joint_gf(family: Family, n: u32) -> Result<GfCheck> {
    let (terms_compared, mismatches) = compare_bivar(&joint_lhs(family, n), &joint_rhs(family, n)?);
    Ok(GfCheck {
        family,
        n,
        p: None,
        terms_compared,
        mismatches,
    })
}

/// `sum_{k>=1} C(n,p,k) y^k q^C(k,2)`.
pub fn single_lhs(family: Family, n: u32, p: u32) -> YSeriesPoly {
    (1..=n).fold(YSeriesPoly::zero(), |acc, k| {
        &acc + &YSeriesPoly::monomial(frac(value(family, n, p, k).shift(c2(k as i64))), k)
    })
}

/// `sum_l (q^(p+1);q)_l (q^(p-n+1);q)_l / ((q^2;q)_l (q;q)_l) (-y q^(n-p))^l`
/// for `l <= l_max`.
pub fn single_gf_series(n: u32, p: u32, l_max: u32) -> YSeriesPoly {
    let (ni, pi) = (n as i64, p as i64);
    (0..=l_max).fold(YSeriesPoly::zero(), |acc, l| {
        let li = l as i64;
        let sign = if l % 2 == 1 { -1 } else { 1 };
        let num = q_pochhammer(pi + 1, l) * q_pochhammer(pi - ni + 1, l) * LaurentPoly::monomial(sign, (ni - pi) * li);
        let den = q_pochhammer(2, l) * q_pochhammer(1, l);
        let c = QFraction::new(num, den).expect("(q^2;q)_l (q;q)_l is nonzero");
        &acc + &YSeriesPoly::monomial(c, l)
    })
}

/// Product side of the single generating function, modulo `y^(n+1)`.
///
/// For `p < n` the series stops by itself after `n - p` terms. For `p = n`
/// it does not terminate, and the comparison is as formal power series in `y`
/// up to degree `n`.
pub fn single_rhs(family: Family, n: u32, p: u32) -> YSeriesPoly {
    let (ni, pi) = (n as i64, p as i64);
    let prefactor = match family {
        Family::First => y_pochhammer(-1, 0, p).scale(&QFraction::q_pow(pi * (ni - pi))),
        Family::Second => y_pochhammer(-1, ni - pi, p),
    };
    let l_max = n.saturating_sub(1);
    let y_times = &YSeriesPoly::monomial(frac(q_integer(n)), 1) * &prefactor;
    (&y_times * &single_gf_series(n, p, l_max)).truncate(n)
}

/// Checks the single generating function of `family` at `(n, p)`.
pub fn check_single_gf(family: Family, n: u32, p: u32) -> GfCheck {
    let lhs = BivarPoly::from_y(&single_lhs(family, n, p));
    let rhs = BivarPoly::from_y(&single_rhs(family, n, p));
    let (terms_compared, mismatches) = compare_bivar(&lhs, &rhs);
    GfCheck {
        family,
        n,
        p: Some(p),
        terms_compared,
        mismatches,
    }
}

/// The `x^p` slice of the joint product side, without its `y^0` term, equals
/// `q^C(p,2)` times the single product side.
pub fn check_slice_consistency(family: Family, n: u32) -> Result<SweepReport> {
    let joint = joint_rhs(family, n)?;
    let outcomes = (0..=n).map(|p| {
        let slice = joint.x_slice(p);
        let without_const = &slice + &YSeriesPoly::monomial(-slice.coeff(0), 0);
        let single = single_rhs(family, n, p).scale(&QFraction::q_pow(c2(p as i64)));
        (without_const != single).then(|| Failure::new(format!("slice/{family}(n={n},p={p})"), &without_const, &single))
    });
    Ok(SweepReport::from_outcomes(
        format!("genfun_slice/{family}"),
        outcomes.collect::<Vec<_>>(),
    ))
}

/// Joint identity for `1 <= n <= n_max`.
pub fn joint_gf_sweep(family: Family, n_max: u32) -> SweepReport {
    let outcomes: Vec<Outcome> = (1..=n_max)
        .into_par_iter()
        .map(|n| match check_joint_gf(family, n) {
            Ok(c) => c.outcome(),
            Err(e) => Some(Failure::error(format!("joint/{family}(n={n})"), e)),
        })
        .collect();
    SweepReport::from_outcomes(format!("genfun_joint/{family}"), outcomes)
}

/// Single identity for all `0 <= p <= n <= n_max`.
pub fn single_gf_sweep(family: Family, n_max: u32) -> SweepReport {
    let grid: Vec<(u32, u32)> = (0..=n_max).flat_map(|n| (0..=n).map(move |p| (n, p))).collect();
    let outcomes: Vec<Outcome> = grid
        .into_par_iter()
        .map(|(n, p)| check_single_gf(family, n, p).outcome())
        .collect();
    let mut report = SweepReport::from_outcomes(format!("genfun_single/{family}"), outcomes);
    report
        .notes
        .push("p = n compared as formal power series modulo y^(n+1)".into());
    report
}
