//! Joint and single generating functions, compared coefficient by coefficient.

use qpositive::genfun::{check_joint_gf, check_single_gf, single_gf_series};
use qpositive::lassalle::Family;

fn main() -> qpositive::Result<()> {
    for family in Family::ALL {
        for n in 1..=4 {
            let c = check_joint_gf(family, n)?;
            println!("joint {family} n={n}: {} terms, equal {}", c.terms_compared, c.equal());
        }
        for p in 0..=4 {
            let c = check_single_gf(family, 4, p);
            println!(
                "single {family} n=4 p={p}: {} terms, equal {}",
                c.terms_compared,
                c.equal()
            );
        }
    }
    println!("series for n=3, p=1 up to y^3:\n{}", single_gf_series(3, 1, 3));
    Ok(())
}
