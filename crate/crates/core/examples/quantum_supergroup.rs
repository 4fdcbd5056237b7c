//! `detT`, its straightening maps, the superdeterminant, `M⁻¹` and the Hopf
//! maps of the quantum supergroup.

use twistlab::frtkit::det::det_t_checks;
use twistlab::frtkit::hopf::{inverse_checks, sdet, sdet_checks};
use twistlab::frtkit::{derive_rmm_relations, Budget, Localization, RttSigns};
use twistlab::representations::{derive_fundamental_rep, r_matrix_exact};

fn main() -> twistlab::Result<()> {
    let r = r_matrix_exact(&derive_fundamental_rep()?)?;
    let rels = derive_rmm_relations(&r, RttSigns::Operator)?;
    let budget = Budget::default();

    for c in det_t_checks(&rels.rewrite_system(), budget) {
        println!(
            "{:<20} {:<5} {}",
            c.name,
            c.status,
            c.detail.unwrap_or_default()
        );
    }

    let loc = Localization::new(rels.rewrite_system())?;
    println!("detT = {}", loc.det);
    println!("detT^-1 x = phi(x) detT^-1 with {}", loc.phi);
    let mut ctx = loc.ctx(budget);
    println!("sdet M = {}", sdet(&mut ctx)?);

    let checks = sdet_checks(&loc, budget)
        .into_iter()
        .chain(inverse_checks(&loc, &rels, budget));
    for c in checks {
        println!("{:<24} {}", c.name, c.status);
    }

    let tiny = Budget {
        max_len: 3,
        max_steps: 10,
    };
    let c = &sdet_checks(&loc, tiny)[0];
    println!("with a tiny budget {} is {}", c.name, c.status);
    Ok(())
}
