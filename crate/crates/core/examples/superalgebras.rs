//! Structure constants of `gl(2)` and `sl(1/2)`, the graded Jacobi audit,
//! and the 3-dimensional fundamental representation.

use twistlab::representations::derive_fundamental_rep;
use twistlab::superalgebra::{gl2, sl12, subalgebra_check, Gen};

fn main() -> twistlab::Result<()> {
    let sl = sl12();
    for (x, y) in [(Gen::Vp, Gen::Vbp), (Gen::Vbp, Gen::Vm), (Gen::Xp, Gen::Vm)] {
        let rhs: Vec<String> = sl
            .bracket(x, y)?
            .into_iter()
            .map(|(g, c)| format!("{c} {g}"))
            .collect();
        println!("[{x}, {y}] = {}", rhs.join(" + "));
    }

    for p in [gl2(), sl.clone()] {
        let v = p.validate();
        println!(
            "{}: {} triples, {} Jacobi failures, antisymmetric: {}",
            p.name(),
            v.triples_checked,
            v.jacobi_failures.len(),
            p.antisymmetry_holds()
        );
    }
    println!(
        "gl(2) is the even subalgebra: {}",
        subalgebra_check(&gl2(), &sl)
    );

    let rep = derive_fundamental_rep()?;
    println!("{}", rep.representation_check(&sl)?.status);
    for g in [Gen::Z, Gen::Xp, Gen::Vbp] {
        println!("{g} =\n{}", rep.get(g)?);
    }
    Ok(())
}
