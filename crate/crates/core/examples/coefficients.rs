//! One coefficient of each family by every available method.

use qpositive::lassalle::{coeff, CoeffQuery, Family, Method};

fn main() -> qpositive::Result<()> {
    let (n, p, k) = (6, 2, 3);
    for family in Family::ALL {
        println!("{family} family, (n,p,k) = ({n},{p},{k})");
        for method in Method::concrete_for(family) {
            let r = coeff(CoeffQuery::new(family, n, p, k, method))?;
            println!("  {method:>14}: {}", r.value);
        }
    }
    // boundary rules
    for (p, k) in [(0, 3), (2, 0), (7, 1)] {
        let r = coeff(CoeffQuery::new(Family::First, n, p, k, Method::Default))?;
        println!("first({n},{p},{k}) = {} by {}", r.value, r.formula_used);
    }
    Ok(())
}
