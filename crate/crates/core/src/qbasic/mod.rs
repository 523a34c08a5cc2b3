//! q-integers, q-factorials, Gaussian binomials, q-Pochhammer products, and a
//! terminating basic hypergeometric evaluator.

mod hyper;
mod identities;

use std::sync::RwLock;

use crate::qpoly::LaurentPoly;

pub use hyper::{hyper_eval, ArgSign, HyperSpec};
pub use identities::{
    check_classical_identity, classical_battery, classical_grid, sears_admissible, ClassicalIdentity, IdentityReport,
    PhiForm,
};

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
pub fn q_integer(n: u32) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, std::iter::repeat_n(1, n as usize))
}

/// `[n]_q = (1 - q^n) / (1 - q)` for any integer `n`; for negative `n` this is
/// `-q^n [-n]_q`.
pub fn q_integer_signed(n: i64) -> LaurentPoly {
    if n >= 0 {
        q_integer(u32::try_from(n).expect("q-integer index fits in u32"))
    } else {
        -q_integer(u32::try_from(-n).expect("q-integer index fits in u32")).shift(n)
    }
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> LaurentPoly {
    (1..=n).map(q_integer).product()
}

/// `(q^a_exp; q)_k = (1 - q^a_exp)(1 - q^(a_exp+1)) ... (1 - q^(a_exp+k-1))`.
pub fn q_pochhammer(a_exp: i64, k: u32) -> LaurentPoly {
    (0..k as i64).map(|j| LaurentPoly::one_minus_q_pow(a_exp + j)).product()
}

static PASCAL: RwLock<Vec<Vec<LaurentPoly>>> = RwLock::new(Vec::new());

fn ensure_rows(n: usize) {
    if PASCAL.read().unwrap().len() > n {
        return;
    }
    let mut rows = PASCAL.write().unwrap();
    // another writer may have filled the table meanwhile
    while rows.len() <= n {
        let m = rows.len();
        let row = if m == 0 {
            vec![LaurentPoly::one()]
        } else {
            let prev = &rows[m - 1];
            (0..=m)
                .map(|k| {
                    let left = if k > 0 {
                        prev[k - 1].clone()
                    } else {
                        LaurentPoly::zero()
                    };
                    let right = prev.get(k).map(|p| p.shift(k as i64)).unwrap_or_default();
                    left + right
                })
                .collect()
        };
        rows.push(row);
    }
}

/// Gaussian binomial `[n k]_q`, zero when `k < 0` or `k > n` (so also for `n < 0`).
///
/// Rows come from a shared Pascal table `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    ensure_rows(n);
    PASCAL.read().unwrap()[n][k].clone()
}

/// `(q;q)_n / ((q;q)_k (q;q)_(n-k))` by exact division, independent of the Pascal table.
pub fn q_binomial_by_quotient(n: u32, k: u32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let den = q_pochhammer(1, k) * q_pochhammer(1, n - k);
    q_pochhammer(1, n)
        .exact_div(&den)
        .expect("Gaussian binomial is a polynomial")
}

/// q-multinomial `[a; b, c, d]_q = [a]! / ([b]! [c]! [d]!)`, zero unless
/// `b, c, d >= 0` and `b + c + d = a`.
pub fn q_multinomial(a: i64, parts: &[i64]) -> LaurentPoly {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != a {
        return LaurentPoly::zero();
    }
    let mut rest = a;
    let mut acc = LaurentPoly::one();
    for &part in parts {
        acc = acc * q_binomial(rest, part);
        rest -= part;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, c.iter().copied())
    }

    #[test]
    fn q_integer_examples() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), LaurentPoly::one());
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
    }

    #[test]
    fn signed_q_integer_matches_quotient() {
        for n in -6i64..=6 {
            let quotient = LaurentPoly::one_minus_q_pow(n)
                .exact_div(&LaurentPoly::one_minus_q_pow(1))
                .unwrap();
            assert_eq!(q_integer_signed(n), quotient, "n = {n}");
        }
        assert_eq!(q_integer_signed(-1), -LaurentPoly::q_pow(-1));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), LaurentPoly::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        // (1+q)(1+q+q^2), expanded by hand
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_examples() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0), LaurentPoly::one());
        }
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(5, 7).is_zero());
        assert!(q_binomial(5, -1).is_zero());
        assert!(q_binomial(-1, 0).is_zero());
    }

    #[test]
    fn q_pochhammer_examples() {
        assert_eq!(q_pochhammer(1, 2), p(&[1, -1]) * p(&[1, 0, -1]));
        assert!(q_pochhammer(0, 1).is_zero());
        assert!(q_pochhammer(-2, 5).is_zero());
        assert!(!q_pochhammer(-2, 2).is_zero());
        assert_eq!(q_pochhammer(7, 0), LaurentPoly::one());
    }

    #[test]
    fn pochhammer_vanishes_exactly_when_it_hits_one() {
        for a in -5i64..=5 {
            for k in 0u32..=7 {
                let expect_zero = a <= 0 && (k as i64) >= 1 - a;
                assert_eq!(q_pochhammer(a, k).is_zero(), expect_zero, "a={a} k={k}");
            }
        }
    }

    #[test]
    fn pascal_table_matches_quotient_definition() {
        for n in 0..=20u32 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n as i64, k as i64),
                    q_binomial_by_quotient(n, k),
                    "[{n} {k}]"
                );
            }
        }
    }

    #[test]
    fn symmetry_and_both_pascal_rules() {
        for n in 1..=20i64 {
            for k in 0..=n {
                assert_eq!(q_binomial(n, k), q_binomial(n, n - k));
                let rule_a = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k);
                let rule_b = q_binomial(n - 1, k - 1).shift(n - k) + q_binomial(n - 1, k);
                assert_eq!(q_binomial(n, k), rule_a);
                assert_eq!(q_binomial(n, k), rule_b);
            }
        }
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        for n in 0..=20u64 {
            let mut expected = BigInt::from(1);
            for k in 0..=n {
                assert_eq!(q_binomial(n as i64, k as i64).eval_at_one(), expected);
                expected = expected * BigInt::from(n - k) / BigInt::from(k + 1);
            }
        }
    }

    #[test]
    fn concurrent_table_fill_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || q_binomial(24 + t, 12)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            assert_eq!(h.join().unwrap(), q_binomial_by_quotient(24 + t as u32, 12));
        }
    }

    #[test]
    fn multinomial_is_product_of_binomials() {
        // [4; 1, 1, 2] = [4]! / ([1]! [1]! [2]!)
        let direct = q_factorial(4).exact_div(&q_factorial(2)).unwrap();
        assert_eq!(q_multinomial(4, &[1, 1, 2]), direct);
        assert!(q_multinomial(4, &[1, 1, 1]).is_zero());
        assert!(q_multinomial(2, &[3, -1, 0]).is_zero());
    }
}
