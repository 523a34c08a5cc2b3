//! Symmetry, recurrences, closed forms, positivity and method agreement
//! over a small grid.

use qpositive::lassalle::{
    check_methods, check_positivity_and_integrality, check_recurrence, check_symmetry, closed_form_check, Family,
    FormOrigin,
};

fn main() {
    let n_max = 8;
    for family in Family::ALL {
        for r in [
            check_symmetry(family, n_max),
            check_recurrence(family, n_max),
            check_positivity_and_integrality(family, n_max),
            check_methods(family, n_max),
        ] {
            println!("{}: {} cases, {} failed", r.suite, r.cases_total, r.cases_failed());
        }
        let rep = closed_form_check(family, 6);
        for c in rep.comparisons.iter().filter(|c| c.p == 2 && c.form == "k=2") {
            let origin = if c.origin == FormOrigin::Printed {
                "printed"
            } else {
                "derived"
            };
            println!(
                "  {family}(6,2,2) {origin}: {} vs {} -> {}",
                c.computed, c.closed_form, c.equal
            );
        }
    }
}
