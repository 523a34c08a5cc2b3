use std::time::{Duration, Instant};

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use crate::genfun::{check_slice_consistency, joint_gf_sweep, single_gf_sweep};
use crate::lassalle::{
    check_column_n, check_methods, check_positivity_and_integrality, check_recurrence, check_symmetry,
    closed_form_check, Family,
};
use crate::linearize::{check_bridge, linearization_battery, qdiff_sweep};
use crate::qbasic::{classical_battery, q_binomial};
use crate::report::{Failure, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Symmetry,
    #[value(name = "closed_forms")]
    ClosedForms,
    Recurrence,
    #[value(name = "genfun_joint")]
    GenfunJoint,
    #[value(name = "genfun_single")]
    GenfunSingle,
    Positivity,
    Linearization,
    Classical,
    Methods,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Symmetry => "symmetry",
            Suite::ClosedForms => "closed_forms",
            Suite::Recurrence => "recurrence",
            Suite::GenfunJoint => "genfun_joint",
            Suite::GenfunSingle => "genfun_single",
            Suite::Positivity => "positivity",
            Suite::Linearization => "linearization",
            Suite::Classical => "classical",
            Suite::Methods => "methods",
            Suite::All => "all",
        }
    }

    fn default_n_max(self) -> u32 {
        match self {
            Suite::GenfunJoint => 6,
            Suite::GenfunSingle => 8,
            _ => 12,
        }
    }
}

/// Result of one `verify` run. `wall_time` is reported on stderr only, so
/// stdout stays byte-identical between runs.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases_total: usize,
    pub cases_failed: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
    /// Per-subsuite `(name, cases, failed)`.
    pub parts: Vec<(String, usize, usize)>,
}

/// Runs `suite`; `n_max` falls back to the suite default. For `all`, an
/// explicit `n_max` caps the generating-function defaults too.
pub fn run_suite(suite: Suite, n_max: Option<u32>, r_max: u32, m_max: usize) -> VerifyReport {
    let start = Instant::now();
    let parts = if suite == Suite::All {
        [
            Suite::Symmetry,
            Suite::ClosedForms,
            Suite::Recurrence,
            Suite::GenfunJoint,
            Suite::GenfunSingle,
            Suite::Positivity,
            Suite::Linearization,
            Suite::Classical,
            Suite::Methods,
        ]
        .into_iter()
        .flat_map(|s| {
            let n = n_max.map_or(s.default_n_max(), |n| n.min(s.default_n_max()));
            sweeps(s, n, r_max, m_max)
        })
        .collect()
    } else {
        sweeps(suite, n_max.unwrap_or(suite.default_n_max()), r_max, m_max)
    };
    let mut report = VerifyReport {
        suite: suite.name().to_string(),
        cases_total: 0,
        cases_failed: 0,
        failures: Vec::new(),
        notes: Vec::new(),
        wall_time: Duration::ZERO,
        parts: Vec::new(),
    };
    for p in parts {
        report.parts.push((p.suite.clone(), p.cases_total, p.cases_failed()));
        report.cases_total += p.cases_total;
        report.failures.extend(p.failures);
        report.notes.extend(p.notes);
    }
    report.cases_failed = report.failures.len();
    report.wall_time = start.elapsed();
    report
}

fn per_family(f: impl Fn(Family) -> SweepReport) -> Vec<SweepReport> {
    Family::ALL.iter().map(|&fam| f(fam)).collect()
}

fn sweeps(suite: Suite, n_max: u32, r_max: u32, m_max: usize) -> Vec<SweepReport> {
    match suite {
        Suite::Symmetry => per_family(|f| {
            let mut r = check_symmetry(f, n_max);
            r.merge(check_column_n(f, n_max));
            r
        }),
        Suite::ClosedForms => per_family(|f| {
            let mut r = SweepReport::new(format!("closed_forms/{f}"));
            for n in 1..=n_max {
                r.merge(closed_form_check(f, n).to_sweep());
            }
            r
        }),
        Suite::Recurrence => per_family(|f| check_recurrence(f, n_max)),
        Suite::GenfunJoint => per_family(|f| {
            let mut r = joint_gf_sweep(f, n_max);
            for n in 1..=n_max {
                match check_slice_consistency(f, n) {
                    Ok(s) => r.merge(s),
                    Err(e) => r.push(Some(Failure::error(format!("slice/{f}(n={n})"), e))),
                }
            }
            r
        }),
        Suite::GenfunSingle => per_family(|f| single_gf_sweep(f, n_max)),
        Suite::Positivity => {
            let mut out = per_family(|f| check_positivity_and_integrality(f, n_max));
            out.push(binomial_at_one(20));
            out
        }
        Suite::Linearization => {
            let mut r = linearization_battery(m_max, r_max);
            for r1 in 1..=r_max + 1 {
                for r2 in 1..=r_max + 1 {
                    let c = check_bridge(r1, r2);
                    r.push((!c.holds()).then(|| {
                        Failure::new(
                            format!("bridge(r1={r1},r2={r2})"),
                            format!("k mismatches {:?}", c.coefficient_mismatches),
                            format!("x mismatches {:?}", c.sample_mismatches),
                        )
                    }));
                }
            }
            vec![r, qdiff_sweep(r_max + 1, r_max + 2)]
        }
        Suite::Classical => vec![classical_battery()],
        Suite::Methods => per_family(|f| check_methods(f, n_max)),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// `[n k]_q` at `q = 1` is the ordinary binomial coefficient, `n <= n_max`.
pub(crate) fn binomial_at_one(n_max: u32) -> SweepReport {
    let mut r = SweepReport::new("q_binomial_at_one");
    for n in 0..=n_max {
        let mut ordinary = BigInt::from(1);
        for k in 0..=n {
            let got = q_binomial(n as i64, k as i64).eval_at_one();
            r.push((got != ordinary).then(|| Failure::new(format!("[{n} {k}] at q=1"), &got, &ordinary)));
            ordinary = ordinary * (n - k) / (k + 1);
        }
    }
    r
}
