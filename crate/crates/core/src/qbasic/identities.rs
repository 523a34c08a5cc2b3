//! Classical terminating identities used as self-checks of the evaluator:
//! q-Chu-Vandermonde (convolution and 2phi1 forms), the two Sears 3phi2
//! transformations, and the base inversion `q -> 1/q` of a q-Pochhammer.

use std::fmt;

use rayon::prelude::*;

use super::{hyper_eval, q_binomial, q_pochhammer, HyperSpec};
use crate::error::{Error, Result};
use crate::qpoly::{LaurentPoly, QFraction};
use crate::report::{Failure, SweepReport};

/// Which 2phi1 expression of `[n p]_q` to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiForm {
    /// `2phi1[q^-p, q^(p-n); q | q; q^(n+1)]`
    Argument,
    /// `q^(p(n-p)) 2phi1[q^-p, q^(p-n); q | q; q]`, the prefactor being `a^-p`
    /// for `a = q^(p-n)` in q-Chu-Vandermonde
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalIdentity {
    /// `[n+m k] = sum_i [n i][m k-i] q^((n-i)(k-i))`
    ChuVandermondeConv {
        n: u32,
        m: u32,
        k: u32,
    },
    ChuVandermondePhi {
        n: u32,
        p: u32,
        form: PhiForm,
    },
    /// Sears transformation with argument `cd q^n / ab` on the left.
    SearsZ {
        n: u32,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
    },
    /// Sears transformation with argument `q` on the left.
    SearsQ {
        n: u32,
        a: i64,
        b: i64,
        c: i64,
        d: i64,
    },
    /// `(q^a;q)_n = (q^-a;q^-1)_n (-q^a)^n q^C(n,2)`
    QInversion {
        a: i64,
        n: u32,
    },
}

impl fmt::Display for ClassicalIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::ChuVandermondeConv { n, m, k } => write!(f, "chu_vandermonde_conv(n={n},m={m},k={k})"),
            Self::ChuVandermondePhi { n, p, form } => {
                write!(f, "chu_vandermonde_phi(n={n},p={p},form={form:?})")
            }
            Self::SearsZ { n, a, b, c, d } => write!(f, "sears_z(n={n},a=q^{a},b=q^{b},c=q^{c},d=q^{d})"),
            Self::SearsQ { n, a, b, c, d } => write!(f, "sears_q(n={n},a=q^{a},b=q^{b},c=q^{c},d=q^{d})"),
            Self::QInversion { a, n } => write!(f, "q_inversion(a={a},n={n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: ClassicalIdentity,
    pub lhs: QFraction,
    pub rhs: QFraction,
    pub equal: bool,
}

fn report(identity: ClassicalIdentity, lhs: QFraction, rhs: QFraction) -> IdentityReport {
    let equal = lhs == rhs;
    IdentityReport {
        identity,
        lhs,
        rhs,
        equal,
    }
}

/// `(c/a;q)_n / (c;q)_n`, the Sears prefactor.
fn sears_prefactor(n: u32, a: i64, c: i64) -> Result<QFraction> {
    let den = q_pochhammer(c, n);
    if den.is_zero() {
        return Err(Error::ZeroDenominator {
            exponent: c,
            index: n as u64,
        });
    }
    QFraction::new(q_pochhammer(c - a, n), den)
}

/// `3phi2[q^-n, a, d/b; d, q^(1-n) a/c | q; z]` shared by both Sears forms.
fn sears_rhs_series(n: u32, a: i64, b: i64, c: i64, d: i64, arg_exp: i64) -> Result<QFraction> {
    let n = n as i64;
    hyper_eval(&HyperSpec::at(vec![-n, a, d - b], vec![d, 1 - n + a - c], arg_exp))
}

/// Evaluates both sides of a classical identity exactly.
pub fn check_classical_identity(identity: ClassicalIdentity) -> Result<IdentityReport> {
    match identity {
        ClassicalIdentity::ChuVandermondeConv { n, m, k } => {
            let (n, m, k) = (n as i64, m as i64, k as i64);
            let lhs = q_binomial(n + m, k);
            let rhs: LaurentPoly = (0..=k)
                .map(|i| q_binomial(n, i) * q_binomial(m, k - i) * LaurentPoly::q_pow((n - i) * (k - i)))
                .sum();
            Ok(report(identity, lhs.into(), rhs.into()))
        }
        ClassicalIdentity::ChuVandermondePhi { n, p, form } => {
            let (ni, pi) = (n as i64, p as i64);
            let lhs = q_binomial(ni, pi);
            let rhs = match form {
                PhiForm::Argument => hyper_eval(&HyperSpec::at(vec![-pi, pi - ni], vec![1], ni + 1))?,
                PhiForm::Unit => hyper_eval(&HyperSpec::at(vec![-pi, pi - ni], vec![1], 1))?.shift(pi * (ni - pi)),
            };
            Ok(report(identity, lhs.into(), rhs))
        }
        ClassicalIdentity::SearsZ { n, a, b, c, d } => {
            let ni = n as i64;
            let lhs = hyper_eval(&HyperSpec::at(vec![-ni, a, b], vec![c, d], c + d + ni - a - b))?;
            let rhs = sears_prefactor(n, a, c)? * sears_rhs_series(n, a, b, c, d, 1)?;
            Ok(report(identity, lhs, rhs))
        }
        ClassicalIdentity::SearsQ { n, a, b, c, d } => {
            let ni = n as i64;
            let lhs = hyper_eval(&HyperSpec::at(vec![-ni, a, b], vec![c, d], 1))?;
            let rhs = sears_prefactor(n, a, c)?.shift(a * ni) * sears_rhs_series(n, a, b, c, d, b + 1 - c)?;
            Ok(report(identity, lhs, rhs))
        }
        ClassicalIdentity::QInversion { a, n } => {
            let lhs = q_pochhammer(a, n);
            // (q^-a; q^-1)_n is (q^a; q)_n with q replaced by 1/q
            let inverted_base = q_pochhammer(a, n).invert_q();
            let ni = n as i64;
            let sign = if n % 2 == 1 { -1 } else { 1 };
            let rhs = inverted_base * LaurentPoly::monomial(sign, a * ni + ni * (ni - 1) / 2);
            Ok(report(identity, lhs.into(), rhs.into()))
        }
    }
}

/// Sears parameters avoid every vanishing lower Pochhammer through length `n`
/// (`c`, `d`, and `q^(1-n) a/c`), so both sides are regular specializations.
pub fn sears_admissible(n: u32, a: i64, c: i64, d: i64) -> bool {
    let n = n as i64;
    [c, d, 1 - n + a - c].iter().all(|&f| !(-(n - 1) <= f && f <= 0))
}

/// The parameter grids of the classical battery:
/// convolution `n, m, k <= 6`; both 2phi1 forms for `0 <= p <= n <= 10`;
/// Sears with `n <= 3` and exponents in `[-3, 3]` (admissible points only);
/// inversion with `a` in `[-5, 5]`, `n <= 6`.
pub fn classical_grid() -> Vec<ClassicalIdentity> {
    let mut grid = Vec::new();
    for n in 0..=6 {
        for m in 0..=6 {
            for k in 0..=6 {
                grid.push(ClassicalIdentity::ChuVandermondeConv { n, m, k });
            }
        }
    }
    for n in 0..=10 {
        for p in 0..=n {
            for form in [PhiForm::Argument, PhiForm::Unit] {
                grid.push(ClassicalIdentity::ChuVandermondePhi { n, p, form });
            }
        }
    }
    for n in 0..=3u32 {
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    for d in -3..=3 {
                        if sears_admissible(n, a, c, d) {
                            grid.push(ClassicalIdentity::SearsZ { n, a, b, c, d });
                            grid.push(ClassicalIdentity::SearsQ { n, a, b, c, d });
                        }
                    }
                }
            }
        }
    }
    for a in -5..=5 {
        for n in 0..=6 {
            grid.push(ClassicalIdentity::QInversion { a, n });
        }
    }
    grid
}

/// Runs [`classical_grid`] in parallel; cases keep grid order.
pub fn classical_battery() -> SweepReport {
    let outcomes: Vec<_> = classical_grid()
        .into_par_iter()
        .map(|id| match check_classical_identity(id) {
            Ok(r) if r.equal => None,
            Ok(r) => Some(Failure::new(id.to_string(), &r.lhs, &r.rhs)),
            Err(e) => Some(Failure::error(id.to_string(), e)),
        })
        .collect();
    SweepReport::from_outcomes("classical", outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convolution_example() {
        let r = check_classical_identity(ClassicalIdentity::ChuVandermondeConv { n: 2, m: 2, k: 2 }).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, LaurentPoly::from_coeffs(0, [1, 1, 2, 1, 1]).into());
    }

    #[test]
    fn sears_q_example() {
        let id = ClassicalIdentity::SearsQ {
            n: 2,
            a: -1,
            b: 1,
            c: 2,
            d: 3,
        };
        assert!(check_classical_identity(id).unwrap().equal);
        let id = ClassicalIdentity::SearsZ {
            n: 2,
            a: -1,
            b: 1,
            c: 2,
            d: 3,
        };
        assert!(check_classical_identity(id).unwrap().equal);
    }

    #[test]
    fn inversion_example() {
        let r = check_classical_identity(ClassicalIdentity::QInversion { a: 1, n: 1 }).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, LaurentPoly::one_minus_q_pow(1).into());
    }

    #[test]
    fn both_phi_forms_reproduce_q_binomials() {
        for n in 0..=10 {
            for p in 0..=n {
                for form in [PhiForm::Argument, PhiForm::Unit] {
                    let r = check_classical_identity(ClassicalIdentity::ChuVandermondePhi { n, p, form }).unwrap();
                    assert!(r.equal, "n={n} p={p} {form:?}");
                }
            }
        }
    }

    #[test]
    fn vanishing_prefactor_denominator_is_an_error() {
        let id = ClassicalIdentity::SearsQ {
            n: 2,
            a: 1,
            b: 1,
            c: 0,
            d: 3,
        };
        assert!(matches!(
            check_classical_identity(id),
            Err(Error::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn admissibility_excludes_zero_lower_pochhammers() {
        assert!(sears_admissible(2, -1, 2, 3));
        assert!(!sears_admissible(2, 1, 0, 3));
        assert!(!sears_admissible(2, 1, 3, -1));
        // q^{1-n} a / c = q^{-1 - 1 - 2}: length 3 reaches exponent -2, still nonzero
        assert!(sears_admissible(3, -1, 2, 3));
        assert!(!sears_admissible(3, 0, 0, 1));
    }

    #[test]
    fn full_battery_is_clean() {
        let r = classical_battery();
        assert!(r.is_clean(), "{:?}", &r.failures[..r.failures.len().min(3)]);
        assert_eq!(r.cases_total, classical_grid().len());
    }
}
