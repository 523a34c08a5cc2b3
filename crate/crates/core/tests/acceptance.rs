//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout.
//!
//! Criteria 1 and 3 compare against printed values that are themselves wrong
//! in a few places; they are checked literally and expected to fail. The
//! process exits nonzero if the set of failing criteria is anything else.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qpositive::genfun::{joint_gf_sweep, single_gf_sweep};
use qpositive::lassalle::{
    check_methods, check_recurrence, check_symmetry, closed_form_check, coefficient_grid, value, Family, FormOrigin,
};
use qpositive::linearize::{c_scaled, c_tilde, check_bridge, d_expand, r_vectors, CTildeRoute, DRoute};
use qpositive::qbasic::{classical_battery, q_binomial};
use qpositive::LaurentPoly;

const KNOWN_FAILING: [u32; 2] = [1, 3];

struct Line {
    id: u32,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn first_of(bad: &[String]) -> String {
    bad.first().map(|b| format!(", first {b}")).unwrap_or_default()
}

fn timed(id: u32, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (pass, detail) = f();
    Line {
        id,
        pass,
        detail,
        elapsed: start.elapsed(),
    }
}

fn table_reproduction() -> (bool, String) {
    let start = Instant::now();
    let cells = common::printed_tables();
    let mut literal_bad = Vec::new();
    for fam in Family::ALL {
        for n in 2..=5u32 {
            let out = common::cli(&[
                "table",
                "--family",
                fam.as_str(),
                "--n",
                &n.to_string(),
                "--format",
                "json",
            ]);
            assert_eq!(out.exit_code, 0);
            let v: serde_json::Value = serde_json::from_str(&out.stdout).expect("table json");
            let rows: Vec<Vec<LaurentPoly>> = serde_json::from_value(v["rows"].clone()).expect("rows of polynomials");
            for c in cells.iter().filter(|c| c.family == fam && c.n == n) {
                if rows[c.p as usize - 1][c.k as usize - 1] != c.value {
                    literal_bad.push(format!("{}({},{},{})", c.family, c.n, c.p, c.k));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    // the printed n=5 tables under swapped headings
    let swapped_bad = cells
        .iter()
        .filter(|c| c.n == 5)
        .filter(|c| {
            let other = if c.family == Family::First {
                Family::Second
            } else {
                Family::First
            };
            value(other, c.n, c.p, c.k) != c.value
        })
        .count();
    let pass = literal_bad.is_empty() && elapsed < Duration::from_secs(1) && cells.len() == 2 * (4 + 9 + 16 + 25);
    let detail = format!(
        "{} of {} printed cells differ: {}; n=5 tables match exactly with headings swapped ({} differ)",
        literal_bad.len(),
        cells.len(),
        literal_bad.join(" "),
        swapped_bad
    );
    (pass, detail)
}

fn method_agreement() -> (bool, String) {
    let start = Instant::now();
    let mut cases = 0;
    let mut failed = Vec::new();
    for fam in Family::ALL {
        let r = check_methods(fam, 12);
        cases += r.cases_total;
        failed.extend(r.failures.into_iter().map(|f| f.case));
    }
    let elapsed = start.elapsed();
    let pass = failed.is_empty() && elapsed < Duration::from_secs(60);
    (
        pass,
        format!(
            "{cases} (n,p,k) points, {} disagreements{}",
            failed.len(),
            first_of(&failed)
        ),
    )
}

fn symmetry_and_closed_forms() -> (bool, String) {
    let mut sym_cases = 0;
    let mut sym_failed = 0;
    let mut printed_total = 0;
    let mut printed_bad: Vec<String> = Vec::new();
    let mut derived_bad = 0;
    for fam in Family::ALL {
        let r = check_symmetry(fam, 12);
        sym_cases += r.cases_total;
        sym_failed += r.cases_failed();
        for n in 1..=12 {
            let rep = closed_form_check(fam, n);
            printed_total += rep
                .comparisons
                .iter()
                .filter(|c| c.origin == FormOrigin::Printed)
                .count();
            printed_bad.extend(rep.failures(FormOrigin::Printed).map(|c| c.form.to_string()));
            derived_bad += rep.failures(FormOrigin::Derived).count();
        }
    }
    let forms: BTreeSet<&str> = printed_bad.iter().map(String::as_str).collect();
    let pass = sym_failed == 0 && printed_bad.is_empty();
    let detail = format!(
        "symmetry {sym_failed}/{sym_cases} failed; printed closed forms {}/{printed_total} failed (forms {:?}); derived k=2 forms {derived_bad} failed",
        printed_bad.len(),
        forms
    );
    (pass, detail)
}

fn recurrences() -> (bool, String) {
    let mut cases = 0;
    let mut failed = 0;
    for fam in Family::ALL {
        let r = check_recurrence(fam, 12);
        cases += r.cases_total;
        failed += r.cases_failed();
    }
    (failed == 0, format!("{failed}/{cases} failed"))
}

fn generating_functions() -> (bool, String) {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut failed = 0;
    for fam in Family::ALL {
        for r in [joint_gf_sweep(fam, 6), single_gf_sweep(fam, 8)] {
            failed += r.cases_failed();
            parts.push(format!("{} {}/{}", r.suite, r.cases_failed(), r.cases_total));
        }
    }
    let elapsed = start.elapsed();
    (failed == 0 && elapsed < Duration::from_secs(120), parts.join(", "))
}

fn q_positivity() -> (bool, String) {
    let positive = |p: &LaurentPoly| p.is_polynomial() && p.has_nonnegative_coeffs();
    let mut bad = Vec::new();
    let grid = coefficient_grid(0, 12);
    for fam in Family::ALL {
        for &(n, p, k) in &grid {
            if !positive(&value(fam, n, p, k)) {
                bad.push(format!("{fam}({n},{p},{k})"));
            }
        }
    }
    let rs = r_vectors(4, 4);
    for r in &rs {
        let d = d_expand(r, DRoute::Iterated).expect("iterated route");
        if !d.is_q_positive() {
            bad.push(format!("d{r}"));
        }
        match c_scaled(r) {
            Ok(c) if c.expansion.is_q_positive() => {}
            _ => bad.push(format!("c{r}")),
        }
    }
    let detail = format!(
        "{} coefficients and {} r vectors, {} not q-positive{}",
        2 * grid.len(),
        rs.len(),
        bad.len(),
        first_of(&bad)
    );
    (bad.is_empty(), detail)
}

fn oracle_equivalence() -> (bool, String) {
    let rs = r_vectors(4, 4);
    let mut bad = Vec::new();
    for r in &rs {
        let reference = c_tilde(r, CTildeRoute::ViaD).expect("via_d");
        for route in [
            CTildeRoute::ViaDiff,
            CTildeRoute::NewtonOracle,
            CTildeRoute::TriangularOracle,
        ] {
            if c_tilde(r, route).ok().as_ref() != Some(&reference) {
                bad.push(format!("c_tilde {route} {r}"));
            }
        }
        if r.m() >= 2 && d_expand(r, DRoute::Iterated).ok() != d_expand(r, DRoute::Closed).ok() {
            bad.push(format!("d closed {r}"));
        }
    }
    (
        bad.is_empty(),
        format!("{} r vectors, {} disagreements{}", rs.len(), bad.len(), first_of(&bad)),
    )
}

fn bridge_to_first_family() -> (bool, String) {
    let bad: Vec<(u32, u32)> = (1..=5)
        .flat_map(|a| (1..=5).map(move |b| (a, b)))
        .filter(|&(a, b)| !check_bridge(a, b).holds())
        .collect();
    (bad.is_empty(), format!("25 pairs (r1,r2), {} fail", bad.len()))
}

fn q_one_consistency() -> (bool, String) {
    let mut bad = Vec::new();
    let grid = coefficient_grid(0, 12);
    for &(n, p, k) in &grid {
        if value(Family::First, n, p, k).eval_at_one() != value(Family::Second, n, p, k).eval_at_one() {
            bad.push(format!("({n},{p},{k})"));
        }
    }
    for n in 0..=20u32 {
        let mut ordinary = BigInt::from(1);
        for k in 0..=n {
            if q_binomial(n as i64, k as i64).eval_at_one() != ordinary {
                bad.push(format!("[{n} {k}]"));
            }
            ordinary = ordinary * (n - k) / (k + 1);
        }
    }
    (
        bad.is_empty(),
        format!(
            "{} family pairs and 231 binomials, {} mismatches{}",
            grid.len(),
            bad.len(),
            first_of(&bad)
        ),
    )
}

fn classical() -> (bool, String) {
    let r = classical_battery();
    (r.is_clean(), format!("{}/{} failed", r.cases_failed(), r.cases_total))
}

fn main() {
    let lines = [
        timed(1, table_reproduction),
        timed(2, method_agreement),
        timed(3, symmetry_and_closed_forms),
        timed(4, recurrences),
        timed(5, generating_functions),
        timed(6, q_positivity),
        timed(7, oracle_equivalence),
        timed(8, bridge_to_first_family),
        timed(9, q_one_consistency),
        timed(10, classical),
    ];
    for l in &lines {
        let verdict = if l.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2}: {verdict} ({:.2}s) {}",
            l.id,
            l.elapsed.as_secs_f64(),
            l.detail
        );
    }
    let failing: Vec<u32> = lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    if failing != KNOWN_FAILING {
        eprintln!("failing criteria {failing:?}, expected exactly {KNOWN_FAILING:?}");
        std::process::exit(1);
    }
    println!("failing criteria match the known set {KNOWN_FAILING:?}");
}
