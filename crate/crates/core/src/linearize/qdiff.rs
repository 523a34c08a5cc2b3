use serde::Serialize;

use crate::error::{Error, Result};
use crate::qbasic::{q_binomial, q_integer_signed};
use crate::qpoly::{LaurentPoly, QFraction};
use crate::report::{compare, SweepReport};

/// `Delta_q^n f(x_0) = sum_k (-1)^k [n k]_q q^C(k,2) f(x_0+n-k)`, where
/// `values[i] = f(x_0 + i)`.
pub fn qdiff_apply(values: &[QFraction], n: u32) -> Result<QFraction> {
    let needed = n as usize + 1;
    if values.len() < needed {
        return Err(Error::InsufficientValues {
            needed,
            got: values.len(),
        });
    }
    let ni = n as i64;
    Ok((0..=ni)
        .map(|k| {
            let sign = if k % 2 == 1 { -1 } else { 1 };
            let w = q_binomial(ni, k) * LaurentPoly::monomial(sign, k * (k - 1) / 2);
            QFraction::from_poly(w) * &values[(ni - k) as usize]
        })
        .sum())
}

/// `[x;q]_m = [x;q][x-1;q] ... [x-m+1;q]` with `[y;q] = (q^y - 1)/(q - 1)`.
pub fn falling_factorial(x: i64, m: u32) -> LaurentPoly {
    (0..m as i64).map(|j| q_integer_signed(x - j)).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QDiffCheck {
    pub n: u32,
    pub m: u32,
    pub x: u32,
    pub lhs: QFraction,
    pub rhs: QFraction,
    pub equal: bool,
}

/// `Delta_q^n [x;q]_m = [m;q]_n [x;q]_(m-n) q^(n(x+n-m))`, zero for `n > m`.
pub fn check_qdiff_falling(n: u32, m: u32, x: u32) -> QDiffCheck {
    let values: Vec<QFraction> = (0..=n)
        .map(|i| QFraction::from_poly(falling_factorial((x + i) as i64, m)))
        .collect();
    let lhs = qdiff_apply(&values, n).expect("n + 1 values supplied");
    let rhs = if n > m {
        QFraction::zero()
    } else {
        let (ni, mi, xi) = (n as i64, m as i64, x as i64);
        QFraction::from_poly(
            falling_factorial(mi, n) * falling_factorial(xi, m - n) * LaurentPoly::q_pow(ni * (xi + ni - mi)),
        )
    };
    let equal = lhs == rhs;
    QDiffCheck {
        n,
        m,
        x,
        lhs,
        rhs,
        equal,
    }
}

/// [`check_qdiff_falling`] over `n, m <= order_max`, `x <= x_max`.
pub fn qdiff_sweep(order_max: u32, x_max: u32) -> SweepReport {
    let mut report = SweepReport::new("qdiff_falling");
    for n in 0..=order_max {
        for m in 0..=order_max {
            for x in 0..=x_max {
                let c = check_qdiff_falling(n, m, x);
                report.push(compare(|| format!("n={n},m={m},x={x}"), &c.lhs, &c.rhs));
            }
        }
    }
    report
}
