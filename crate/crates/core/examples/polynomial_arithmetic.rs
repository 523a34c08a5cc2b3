//! Laurent polynomials and normalized rational functions in q.

use qpositive::{LaurentPoly, QFraction};

fn main() -> qpositive::Result<()> {
    let a: LaurentPoly = "1 + 3q + 2q^2 + q^3".parse()?;
    let b: LaurentPoly = "q^-1 - q".parse()?;
    println!("a = {a}");
    println!("b = {b}");
    println!("a * b = {}", &a * &b);
    println!("a(1) = {}", a.eval_at_one());
    println!("a as json = {}", serde_json::to_string(&a).expect("serializes"));

    let prof = a.coefficient_profile()?;
    println!("coefficients {:?}, unimodal {}", prof.coeffs, prof.is_unimodal);

    // (1 - q^6) / (1 - q^2) reduces to 1 + q^2 + q^4
    let f = QFraction::new(LaurentPoly::one_minus_q_pow(6), LaurentPoly::one_minus_q_pow(2))?;
    println!("(1-q^6)/(1-q^2) = {f}, polynomial: {}", f.is_polynomial());

    let g = QFraction::new(LaurentPoly::one(), LaurentPoly::one_minus_q_pow(1))?;
    println!("1/(1-q) + 1/(1-q) = {}", &g + &g);
    Ok(())
}
