//! Sweeps over the `(n, p, k)` grid. Every sweep evaluates points in parallel
//! and reports them in lexicographic `(n, p, k)` order.

use rayon::prelude::*;
use serde::Serialize;

use super::{coeff, value, CoeffQuery, Family, Method};
use crate::qbasic::{q_binomial, q_integer, q_integer_signed};
use crate::qpoly::{LaurentPoly, QFraction};
use crate::report::{compare, Failure, Outcome, SweepReport};

/// All `(n, p, k)` with `0 <= p, k <= n`, `n_min <= n <= n_max`, in lexicographic order.
pub fn coefficient_grid(n_min: u32, n_max: u32) -> Vec<(u32, u32, u32)> {
    (n_min..=n_max)
        .flat_map(|n| (0..=n).flat_map(move |p| (0..=n).map(move |k| (n, p, k))))
        .collect()
}

fn sweep<F>(suite: String, grid: Vec<(u32, u32, u32)>, f: F) -> SweepReport
where
    F: Fn(u32, u32, u32) -> Outcome + Sync,
{
    let outcomes: Vec<Outcome> = grid.into_par_iter().map(|(n, p, k)| f(n, p, k)).collect();
    SweepReport::from_outcomes(suite, outcomes)
}

fn qi(n: i64) -> LaurentPoly {
    q_integer(n as u32)
}

fn frac(p: LaurentPoly) -> QFraction {
    QFraction::from_poly(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormOrigin {
    /// As displayed in the source.
    Printed,
    /// Recomputed from the single-sum form, where the printed one is wrong.
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormComparison {
    /// `p=1`, `p=2`, `k=1`, `k=2`, or `k=n`.
    pub form: &'static str,
    pub origin: FormOrigin,
    pub p: u32,
    pub k: u32,
    pub computed: LaurentPoly,
    pub closed_form: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub family: Family,
    pub n: u32,
    pub comparisons: Vec<ClosedFormComparison>,
}

impl ClosedFormReport {
    pub fn failures(&self, origin: FormOrigin) -> impl Iterator<Item = &ClosedFormComparison> {
        self.comparisons.iter().filter(move |c| c.origin == origin && !c.equal)
    }

    /// Counts every derived comparison and every printed one except the `k=2`
    /// forms that have a derived replacement; those become notes.
    pub fn to_sweep(&self) -> SweepReport {
        let mut report = SweepReport::new(format!("closed_forms/{}", self.family));
        for c in &self.comparisons {
            let case = format!(
                "{}({},{},{}) {} {}",
                self.family,
                self.n,
                c.p,
                c.k,
                c.form,
                origin_str(c.origin)
            );
            if c.origin == FormOrigin::Printed && c.form == "k=2" {
                if !c.equal {
                    report.notes.push(format!(
                        "erratum: printed {case}: computed {} vs {}",
                        c.computed, c.closed_form
                    ));
                }
                continue;
            }
            report.push((!c.equal).then(|| Failure::new(case, &c.computed, &c.closed_form)));
        }
        report
    }
}

fn origin_str(o: FormOrigin) -> &'static str {
    match o {
        FormOrigin::Printed => "printed",
        FormOrigin::Derived => "derived",
    }
}

/// Compares the coefficients against their closed forms for `p = 1, 2`,
/// `k = 1, 2` and `k = n`. For `k = 2` both the printed and the derived form
/// are listed.
pub fn closed_form_check(family: Family, n: u32) -> ClosedFormReport {
    let ni = n as i64;
    let mut comparisons = Vec::new();
    let mut push = |form, origin, p: u32, k: u32, closed: QFraction| {
        let computed = value(family, n, p, k);
        let equal = frac(computed.clone()) == closed;
        comparisons.push(ClosedFormComparison {
            form,
            origin,
            p,
            k,
            computed,
            closed_form: closed.to_string(),
            equal,
        });
    };
    let first = family == Family::First;
    if n >= 1 {
        for k in 0..=n {
            let ki = k as i64;
            let base = qi(ki) * q_binomial(ni, ki);
            let closed = if first { base.shift(ni - ki) } else { base };
            push("p=1", FormOrigin::Printed, 1, k, frac(closed));
        }
    }
    if n >= 2 {
        // [n-3]_q is taken as (1 - q^(n-3)) / (1 - q), so [-1]_q = -q^-1
        let tail = QFraction::ratio(&(qi(ni) * q_integer_signed(ni - 3)), &qi(2)).expect("[2]_q is nonzero");
        for k in 0..=n {
            let ki = k as i64;
            let head = qi(ki) * q_binomial(ni, ki);
            let tail_k = tail.clone() * frac(q_binomial(ni - 2, ki - 2));
            let closed = if first {
                frac(head.shift(2 * ni - 3 - ki)) + tail_k.shift(2 * (ni - ki))
            } else {
                frac(head) + tail_k.shift(2)
            };
            push("p=2", FormOrigin::Printed, 2, k, closed);
        }
    }
    for p in 1..=n {
        let pi = p as i64;
        let prefactor = if first { (ni - pi) * pi } else { 0 };
        push("k=1", FormOrigin::Printed, p, 1, frac(qi(ni).shift(prefactor)));
        if n >= 2 {
            let over_two = |body: LaurentPoly| QFraction::ratio(&(qi(ni) * body), &qi(2)).expect("[2]_q is nonzero");
            let mixed = qi(pi) * qi(ni - pi);
            let printed = over_two(qi(ni - 1) + &mixed).shift(prefactor);
            push("k=2", FormOrigin::Printed, p, 2, printed);
            let derived = if first {
                over_two(qi(ni - 1).shift(1) + &mixed).shift(prefactor - 1)
            } else {
                over_two(qi(ni - 1) + mixed.shift(1))
            };
            push("k=2", FormOrigin::Derived, p, 2, derived);
        }
        push("k=n", FormOrigin::Printed, p, n, frac(q_binomial(ni, pi)));
    }
    ClosedFormReport { family, n, comparisons }
}

/// `C(n,p,k) = C(n,n-p,k)` for `0 <= p, k <= n`. The single pair
/// `(n,0,0)` / `(n,n,0)` is skipped: the boundary conventions give 1 and 0.
pub fn check_symmetry(family: Family, n_max: u32) -> SweepReport {
    let grid: Vec<_> = coefficient_grid(1, n_max)
        .into_iter()
        .filter(|&(n, p, k)| !(k == 0 && (p == 0 || p == n)))
        .collect();
    let mut report = sweep(format!("symmetry/{family}"), grid, |n, p, k| {
        compare(
            || format!("{family}({n},{p},{k}) vs ({n},{},{k})", n - p),
            &value(family, n, p, k),
            &value(family, n, n - p, k),
        )
    });
    report
        .notes
        .push("skipped (n,0,0) vs (n,n,0): boundary conventions give 1 and 0".into());
    report
}

/// The three-term recurrence in `p`, checked in fraction arithmetic for
/// `2 <= n <= n_max`, `1 <= p, k <= n`.
pub fn check_recurrence(family: Family, n_max: u32) -> SweepReport {
    let grid: Vec<_> = coefficient_grid(2, n_max)
        .into_iter()
        .filter(|&(_, p, k)| p >= 1 && k >= 1)
        .collect();
    sweep(format!("recurrence/{family}"), grid, |n, p, k| {
        let (ni, pi, ki) = (n as i64, p as i64, k as i64);
        let lhs = frac(
            LaurentPoly::one_minus_q_pow(ni - pi + 1) * value(family, n, p - 1, k)
                - LaurentPoly::one_minus_q_pow(pi) * value(family, n, p, k),
        );
        let shift = match family {
            Family::First => pi - 1,
            Family::Second => ki + pi - 1,
        };
        let rhs = QFraction::ratio(&qi(ni), &qi(ni - 1)).expect("[n-1]_q is nonzero for n >= 2")
            * frac(LaurentPoly::one_minus_q_pow(ni - 2 * pi + 1) * value(family, n - 1, p - 1, k)).shift(shift);
        compare(|| format!("{family}({n},{p},{k})"), &lhs, &rhs)
    })
}

/// Every coefficient, computed from the defining 3phi2 rather than the
/// positive split, is a polynomial with nonnegative integer coefficients;
/// and both families agree at `q = 1`.
pub fn check_positivity_and_integrality(family: Family, n_max: u32) -> SweepReport {
    let other = match family {
        Family::First => Family::Second,
        Family::Second => Family::First,
    };
    sweep(format!("positivity/{family}"), coefficient_grid(0, n_max), |n, p, k| {
        let case = || format!("{family}({n},{p},{k})");
        let v = match coeff(CoeffQuery::new(family, n, p, k, Method::Definition)) {
            Ok(r) => r.value,
            Err(e) => return Some(Failure::error(case(), e)),
        };
        if !v.is_polynomial() || !v.has_nonnegative_coeffs() {
            return Some(Failure::new(case(), &v, "nonnegative polynomial"));
        }
        let (a, b) = (v.eval_at_one(), value(other, n, p, k).eval_at_one());
        compare(|| format!("{} at q=1 vs {other}", case()), &a, &b)
    })
}

/// All methods defined for `family` return the same polynomial.
pub fn check_methods(family: Family, n_max: u32) -> SweepReport {
    let methods = Method::concrete_for(family);
    sweep(format!("methods/{family}"), coefficient_grid(0, n_max), |n, p, k| {
        let mut reference: Option<(Method, LaurentPoly)> = None;
        for &m in &methods {
            let case = || format!("{family}({n},{p},{k}) by {m}");
            let v = match coeff(CoeffQuery::new(family, n, p, k, m)) {
                Ok(r) => r.value,
                Err(e) => return Some(Failure::error(case(), e)),
            };
            match &reference {
                None => reference = Some((m, v)),
                Some((m0, v0)) if *v0 != v => {
                    return Some(Failure::new(format!("{} vs {m0}", case()), &v, v0));
                }
                Some(_) => {}
            }
        }
        None
    })
}

/// `C(n,p,n) = [n p]_q`.
pub fn check_column_n(family: Family, n_max: u32) -> SweepReport {
    let grid = (1..=n_max).flat_map(|n| (0..=n).map(move |p| (n, p, n))).collect();
    sweep(format!("column_k_eq_n/{family}"), grid, |n, p, k| {
        compare(
            || format!("{family}({n},{p},{k})"),
            &value(family, n, p, k),
            &q_binomial(n as i64, p as i64),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order_is_lexicographic() {
        let g = coefficient_grid(1, 2);
        assert_eq!(g[0], (1, 0, 0));
        assert_eq!(g[4], (2, 0, 0));
        let mut sorted = g.clone();
        sorted.sort();
        assert_eq!(g, sorted);
    }

    #[test]
    fn closed_form_examples() {
        let r = closed_form_check(Family::First, 4);
        let c = r.comparisons.iter().find(|c| c.form == "p=1" && c.k == 2).unwrap();
        assert!(c.equal);
        assert_eq!(c.computed, (qi(3) * qi(4)).shift(2));

        let r = closed_form_check(Family::Second, 3);
        let c = r
            .comparisons
            .iter()
            .find(|c| c.form == "k=2" && c.origin == FormOrigin::Derived && c.p == 2)
            .unwrap();
        assert_eq!(c.computed, qi(2) * qi(3));
        assert!(c.equal);
    }

    #[test]
    fn only_printed_k2_forms_fail() {
        for family in Family::ALL {
            for n in 1..=9 {
                let r = closed_form_check(family, n);
                assert_eq!(r.failures(FormOrigin::Derived).count(), 0);
                for c in r.failures(FormOrigin::Printed) {
                    assert_eq!(c.form, "k=2", "{family} n={n} p={} k={}", c.p, c.k);
                    assert!(c.p >= 1 && c.p < n);
                }
                assert!(r.to_sweep().is_clean());
            }
        }
        // and they do fail somewhere, e.g. first family (3,1,2)
        let r = closed_form_check(Family::First, 3);
        assert!(r.failures(FormOrigin::Printed).any(|c| c.p == 1));
    }

    #[test]
    fn small_sweeps_are_clean() {
        for family in Family::ALL {
            assert!(check_symmetry(family, 6).is_clean());
            assert!(check_recurrence(family, 6).is_clean());
            assert!(check_positivity_and_integrality(family, 6).is_clean());
            assert!(check_methods(family, 6).is_clean());
            assert!(check_column_n(family, 6).is_clean());
        }
    }

    #[test]
    fn recurrence_first_example() {
        // n=2, p=1, k=1: (1-q^2)[2 1] - (1-q)(q+q^2) = (1+q)(1-q)
        let r = check_recurrence(Family::First, 2);
        assert!(r.is_clean());
        assert_eq!(r.cases_total, 4);
    }
}
