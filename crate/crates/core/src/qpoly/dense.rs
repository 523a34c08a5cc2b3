//! Dense integer polynomial kernels (ascending coefficient vectors).
//!
//! Used behind [`LaurentPoly`](super::LaurentPoly) for exact division and for
//! the gcd that normalizes fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Quotient `a / b` if `b` divides `a` exactly over the integers.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "division by the zero polynomial");
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lead = &b[db];
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = content(&v);
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` (`deg a >= deg b`).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    while rem.len() > db {
        let top = rem.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = rem.len() - db;
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (j, bj) in b[..db].iter().enumerate() {
            rem[shift + j] -= &top * bj;
        }
        trim(&mut rem);
    }
    trim(&mut rem);
    rem
}

/// Primitive gcd over the integers, normalized to positive leading coefficient.
///
/// Integer contents are ignored: the result is always primitive.
pub(crate) fn primitive_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a.to_vec());
    let mut y = primitive(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1-q^2)(1-q^3) divides (1-q)(1-q^6), so it is the gcd
        let a = v(&[1, 0, -1, -1, 0, 1]);
        let b = v(&[1, -1, 0, 0, 0, 0, -1, 1]);
        assert_eq!(primitive_gcd(&a, &b), a);
        // (1-q^2) and (1-q^3) share only 1-q
        let g = primitive_gcd(&v(&[1, 0, -1]), &v(&[1, 0, 0, -1]));
        assert_eq!(g, v(&[-1, 1]));
    }

    #[test]
    fn gcd_ignores_integer_content() {
        assert_eq!(primitive_gcd(&v(&[2, 2]), &v(&[4, 4])), v(&[1, 1]));
        assert_eq!(primitive_gcd(&v(&[2]), &v(&[1, 1])), v(&[1]));
    }

    #[test]
    fn exact_div_detects_remainder() {
        assert_eq!(exact_div(&v(&[1, 0, -1]), &v(&[1, 1])), Some(v(&[1, -1])));
        assert_eq!(exact_div(&v(&[1, 1]), &v(&[1, -1])), None);
        assert_eq!(exact_div(&v(&[1, 1]), &v(&[2])), None);
    }
}
