//! The twist `F = exp((g/2h)σ⊗Z) exp(-½H⊗σ)` as a truncated series and its
//! 2-cocycle and counit conditions.

use twistlab::enveloping::Enveloping;
use twistlab::superalgebra::gl2;
use twistlab::twistkit::{
    build_sigma, build_twist, build_twist_variant, verify_cocycle, TwistVariant,
};

fn main() -> twistlab::Result<()> {
    println!("sigma to order 3: {}", build_sigma(3));

    let u = Enveloping::new(gl2());
    println!("F to order 1: {}", build_twist(&u, 1)?.f);
    let f2 = build_twist(&u, 2)?;
    println!("F to order 2 has {} terms", f2.f.len());

    let tw = build_twist(&u, 4)?;
    for c in verify_cocycle(&u, &tw) {
        println!(
            "{:<14} {:<5} residual={}",
            c.name, c.status, c.residual_terms
        );
    }

    let swapped = build_twist_variant(&u, 4, TwistVariant::Swapped)?;
    let cocycle = &verify_cocycle(&u, &swapped)[0];
    println!(
        "swapped factors: cocycle {} ({} residual terms)",
        cocycle.status, cocycle.residual_terms
    );
    Ok(())
}
