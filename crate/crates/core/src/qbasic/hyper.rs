use crate::error::{Error, Result};
use crate::qpoly::{add_exp, mul_exp, LaurentPoly, QFraction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArgSign {
    Plus,
    Minus,
}

impl ArgSign {
    fn factor(self) -> i64 {
        match self {
            ArgSign::Plus => 1,
            ArgSign::Minus => -1,
        }
    }
}

/// `r phi s [q^upper; q^lower | q; ± q^arg_exp]` with every parameter an
/// integer power of `q`, stored by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperSpec {
    pub upper: Vec<i64>,
    pub lower: Vec<i64>,
    pub arg_sign: ArgSign,
    pub arg_exp: i64,
}

impl HyperSpec {
    pub fn new(upper: Vec<i64>, lower: Vec<i64>, arg_sign: ArgSign, arg_exp: i64) -> Self {
        Self {
            upper,
            lower,
            arg_sign,
            arg_exp,
        }
    }

    /// Argument `+q^arg_exp`.
    pub fn at(upper: Vec<i64>, lower: Vec<i64>, arg_exp: i64) -> Self {
        Self::new(upper, lower, ArgSign::Plus, arg_exp)
    }

    pub fn r(&self) -> usize {
        self.upper.len()
    }

    pub fn s(&self) -> usize {
        self.lower.len()
    }

    /// Smallest `N` with an upper parameter `q^-N`; terms past `N` vanish.
    pub fn termination_index(&self) -> Option<u64> {
        self.upper.iter().filter(|&&e| e <= 0).map(|&e| e.unsigned_abs()).min()
    }
}

/// Exact value of a terminating series, summed up to its termination index.
///
/// Terms are accumulated over the running denominator
/// `(q;q)_j (b_1;q)_j ... (b_s;q)_j`, so only one fraction normalization
/// happens at the end.
pub fn hyper_eval(spec: &HyperSpec) -> Result<QFraction> {
    let last = spec.termination_index().ok_or(Error::NonTerminating)?;
    // (-1)^{(1+s-r)k} q^{(1+s-r) C(k,2)}
    let excess = 1 + spec.s() as i64 - spec.r() as i64;
    let excess_sign = if excess.rem_euclid(2) == 1 { -1 } else { 1 };

    let mut term_num = LaurentPoly::one();
    let mut sum_num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for j in 1..=last {
        let jm1 = i64::try_from(j - 1).expect("series index fits in i64");
        let mut step_den = LaurentPoly::one_minus_q_pow(add_exp(jm1, 1));
        for &f in &spec.lower {
            let factor = LaurentPoly::one_minus_q_pow(add_exp(f, jm1));
            if factor.is_zero() {
                return Err(Error::ZeroDenominator { exponent: f, index: j });
            }
            step_den = step_den * factor;
        }
        let mut step_num: LaurentPoly = spec
            .upper
            .iter()
            .map(|&e| LaurentPoly::one_minus_q_pow(add_exp(e, jm1)))
            .product();
        let exp = add_exp(spec.arg_exp, mul_exp(excess, jm1));
        step_num = step_num * LaurentPoly::monomial(spec.arg_sign.factor() * excess_sign, exp);

        term_num = term_num * step_num;
        sum_num = &sum_num * &step_den + &term_num;
        den = den * step_den;
    }
    QFraction::new(sum_num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbasic::q_binomial;

    #[test]
    fn q_binomial_via_chu_vandermonde_argument_form() {
        // 2phi1[q^-1, q^-1; q | q; q^3] = [2 1]_q
        let v = hyper_eval(&HyperSpec::at(vec![-1, -1], vec![1], 3)).unwrap();
        assert_eq!(v.to_polynomial().unwrap(), q_binomial(2, 1));
    }

    #[test]
    fn q_binomial_via_unit_argument_form() {
        // q^{p(n-p)} 2phi1[q^-p, q^{p-n}; q | q; q] at n=3, p=1
        let v = hyper_eval(&HyperSpec::at(vec![-1, -2], vec![1], 1)).unwrap();
        let v = v.shift(2).to_polynomial().unwrap();
        assert_eq!(v, LaurentPoly::from_coeffs(0, [1, 1, 1]));
        assert_eq!(v, q_binomial(3, 1));
    }

    #[test]
    fn unit_upper_parameter_leaves_only_first_term() {
        let v = hyper_eval(&HyperSpec::at(vec![0, 5, -3], vec![2, 7], 4)).unwrap();
        assert_eq!(v, QFraction::one());
    }

    #[test]
    fn non_terminating_is_rejected() {
        assert_eq!(
            hyper_eval(&HyperSpec::at(vec![1, 2], vec![3], 1)),
            Err(Error::NonTerminating)
        );
    }

    #[test]
    fn vanishing_lower_parameter_is_reported() {
        // lower q^-1 vanishes at j = 2, before termination at N = 3
        assert_eq!(
            hyper_eval(&HyperSpec::at(vec![-3], vec![-1], 1)),
            Err(Error::ZeroDenominator { exponent: -1, index: 2 })
        );
        // but is fine if the series stops first
        assert!(hyper_eval(&HyperSpec::at(vec![-1], vec![-1], 1)).is_ok());
    }

    #[test]
    fn general_excess_factor_matches_direct_sum() {
        // 1phi1[q^-2; q^3 | q; -q]: excess 1+s-r = 1
        let spec = HyperSpec::new(vec![-2], vec![3], ArgSign::Minus, 1);
        let direct: QFraction = (0..=2u32)
            .map(|k| {
                let num = crate::qbasic::q_pochhammer(-2, k);
                let den = crate::qbasic::q_pochhammer(3, k) * crate::qbasic::q_pochhammer(1, k);
                let k = k as i64;
                // (-1)^k q^{C(k,2)} (-q)^k = q^{C(k,2) + k}
                let weight = LaurentPoly::q_pow(k * (k - 1) / 2 + k);
                QFraction::new(num * weight, den).unwrap()
            })
            .sum();
        assert_eq!(hyper_eval(&spec).unwrap(), direct);
    }
}
