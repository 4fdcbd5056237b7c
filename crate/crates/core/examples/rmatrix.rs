//! Exact R-matrices in finite representations: the 9×9 fundamental one with
//! its block decomposition, spin representations of `gl(2)`, and the graded
//! Yang-Baxter equation.

use twistlab::representations::{
    r_matrix_exact, r_matrix_fundamental, rep_by_name, verify_graded_ybe, RBlocks,
};
use twistlab::scalars::rat;

fn main() -> twistlab::Result<()> {
    let rep = rep_by_name("fundamental")?;
    let (r, checks) = r_matrix_fundamental(&rep)?;
    println!("{r}");
    for c in checks.iter().chain(&verify_graded_ybe(&r, &rep.space)) {
        println!("{:<22} {}", c.name, c.status);
    }
    println!("Rbar =\n{}", RBlocks::extract(&r).rbar);

    let at = r.specialize(Some(&rat(1, 2)), Some(&rat(1, 3)));
    let ybe = &verify_graded_ybe(&at, &rep.space)[0];
    println!("at h = 1/2, g = 1/3: {} {}", ybe.name, ybe.status);

    for j in ["1/2", "1", "3/2"] {
        let spin = rep_by_name(&format!("spin:{j}"))?;
        let rs = r_matrix_exact(&spin)?;
        let checks = verify_graded_ybe(&rs, &spin.space);
        println!("spin {j}: dim {}, ybe {}", spin.dim(), checks[0].status);
    }
    Ok(())
}
