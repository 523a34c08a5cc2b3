//! Looks for coefficients whose coefficient sequence is not unimodal.

use qpositive::lassalle::{value, Family};

fn main() {
    let n_max: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    for family in Family::ALL {
        let mut scanned = 0;
        let mut found = Vec::new();
        for n in 1..=n_max {
            for p in 0..=n {
                for k in 1..=n {
                    scanned += 1;
                    let v = value(family, n, p, k);
                    if v.coefficient_profile().is_ok_and(|prof| !prof.is_unimodal) {
                        found.push(format!("({n},{p},{k}) {v}"));
                    }
                }
            }
        }
        println!(
            "{family} family, n<={n_max}: {scanned} scanned, {} not unimodal",
            found.len()
        );
        for f in found {
            println!("  {f}");
        }
    }
}
