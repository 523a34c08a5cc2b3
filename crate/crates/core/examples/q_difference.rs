//! The q-difference operator on sampled values and on q-falling factorials.

use qpositive::linearize::{check_qdiff_falling, falling_factorial, qdiff_apply};
use qpositive::QFraction;

fn main() -> qpositive::Result<()> {
    // f(x) = [x;q]_3 sampled at x = 2..=5
    let values: Vec<QFraction> = (2..=5).map(|x| QFraction::from_poly(falling_factorial(x, 3))).collect();
    for n in 0..=3 {
        println!("Delta^{n} f(2) = {}", qdiff_apply(&values, n)?);
    }
    for (n, m, x) in [(1, 3, 2), (2, 3, 2), (3, 3, 2), (4, 3, 2)] {
        let c = check_qdiff_falling(n, m, x);
        println!("n={n} m={m} x={x}: {} == {} -> {}", c.lhs, c.rhs, c.equal);
    }
    Ok(())
}
