//! q-integers, q-Pochhammer symbols, Gaussian binomials and terminating
//! basic hypergeometric series.

use qpositive::qbasic::{hyper_eval, q_binomial, q_factorial, q_integer, q_pochhammer, HyperSpec};

fn main() -> qpositive::Result<()> {
    println!("[5]_q = {}", q_integer(5));
    println!("[4]_q! = {}", q_factorial(4));
    println!("(q^2;q)_3 = {}", q_pochhammer(2, 3));
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|k| q_binomial(n, k).to_string()).collect();
        println!("n={n}: {}", row.join(" | "));
    }

    // 2phi1(q^-1, q^-2; q; q; q) = q^-2 [3 1]_q
    let spec = HyperSpec::at(vec![-1, -2], vec![1], 1);
    let v = hyper_eval(&spec)?;
    println!("2phi1 = {v}, times q^2 = {}", v.shift(2));
    Ok(())
}
