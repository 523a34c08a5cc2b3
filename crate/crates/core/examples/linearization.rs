//! Expanding products of Gaussian binomials in the basis [x l]_q.

use qpositive::linearize::{c_scaled, c_tilde, check_bridge, d_expand, product_rule, CTildeRoute, DRoute, RVector};

fn main() -> qpositive::Result<()> {
    println!("[x 2][x 3]:\n{}\n", product_rule(2, 3));

    let r: RVector = "2,1,2".parse()?;
    let d = d_expand(&r, DRoute::Closed)?;
    println!("d_l{r}:\n{d}\n");
    println!("at x=4: {}", d.eval_at(4));

    for route in CTildeRoute::ALL {
        println!("c~{r} by {route}: support {:?}", c_tilde(&r, route)?.support());
    }
    let c = c_scaled(&r)?;
    println!("c_l{r} (double-sum reading {:?}):\n{}", c.q1_reading, c.expansion);

    let t = check_bridge(2, 3);
    println!("c_k(2,3) against the first family at n=5: holds {}", t.holds());
    Ok(())
}
