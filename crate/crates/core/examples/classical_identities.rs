//! q-Chu-Vandermonde, the Sears transformations and q-inversion, one case
//! each, then the whole battery.

use qpositive::qbasic::{check_classical_identity, classical_battery, classical_grid, ClassicalIdentity, PhiForm};

fn main() -> qpositive::Result<()> {
    let cases = [
        ClassicalIdentity::ChuVandermondeConv { n: 3, m: 2, k: 2 },
        ClassicalIdentity::ChuVandermondePhi {
            n: 4,
            p: 1,
            form: PhiForm::Argument,
        },
        ClassicalIdentity::ChuVandermondePhi {
            n: 3,
            p: 1,
            form: PhiForm::Unit,
        },
        ClassicalIdentity::QInversion { a: 2, n: 3 },
    ];
    let sears = classical_grid()
        .into_iter()
        .filter(|id| {
            matches!(
                id,
                ClassicalIdentity::SearsZ { n: 2, .. } | ClassicalIdentity::SearsQ { n: 2, .. }
            )
        })
        .step_by(400)
        .take(4);
    for id in cases.into_iter().chain(sears) {
        let r = check_classical_identity(id)?;
        println!(
            "{id}: {} ({} = {})",
            if r.equal { "ok" } else { "MISMATCH" },
            r.lhs,
            r.rhs
        );
    }
    let battery = classical_battery();
    println!(
        "battery: {} cases, {} failed",
        battery.cases_total,
        battery.cases_failed()
    );
    Ok(())
}
