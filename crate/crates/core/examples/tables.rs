//! Coefficient tables for n = 1..5, rows p and columns k.
//!
//! `cargo run --example tables -- 7` prints up to n = 7 instead.

use qpositive::lassalle::{table, Family};

fn main() {
    let n_max: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    for family in Family::ALL {
        for n in 1..=n_max {
            println!("{family} family, n={n}");
            for (i, row) in table(family, n).iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                println!("  p={}: {}", i + 1, cells.join(" | "));
            }
        }
    }
}
