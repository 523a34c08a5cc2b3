//! Outcome records shared by the verification sweeps.

use std::fmt::Display;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(case: impl Into<String>, lhs: impl Display, rhs: impl Display) -> Self {
        Self {
            case: case.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// A case that could not be evaluated at all.
    pub fn error(case: impl Into<String>, err: impl Display) -> Self {
        Self {
            case: case.into(),
            lhs: format!("error: {err}"),
            rhs: String::new(),
        }
    }
}

/// One pass/fail outcome per grid point; `None` is a pass.
pub type Outcome = Option<Failure>;

/// Compares two values, producing a failure record only on mismatch.
pub fn compare<T: PartialEq + Display>(case: impl FnOnce() -> String, lhs: &T, rhs: &T) -> Outcome {
    (lhs != rhs).then(|| Failure::new(case(), lhs, rhs))
}

/// Aggregate of one sweep, in deterministic case order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub cases_total: usize,
    pub failures: Vec<Failure>,
    /// Informational lines that do not count as failures.
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            ..Self::default()
        }
    }

    pub fn from_outcomes(suite: impl Into<String>, outcomes: impl IntoIterator<Item = Outcome>) -> Self {
        let mut report = Self::new(suite);
        report.extend(outcomes);
        report
    }

    pub fn extend(&mut self, outcomes: impl IntoIterator<Item = Outcome>) {
        for outcome in outcomes {
            self.push(outcome);
        }
    }

    pub fn push(&mut self, outcome: Outcome) {
        self.cases_total += 1;
        if let Some(f) = outcome {
            self.failures.push(f);
        }
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.cases_total += other.cases_total;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
    }

    pub fn cases_failed(&self) -> usize {
        self.failures.len()
    }

    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}
