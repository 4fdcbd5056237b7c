//! Twisted coproduct and antipode of `U(gl(2))` and `U(sl(1/2))`, compared
//! with their closed forms.

use twistlab::enveloping::{Element, Enveloping};
use twistlab::superalgebra::{gl2, sl12, Gen};
use twistlab::twistkit::closed_forms::{match_gl2_closed_forms, match_odd_closed_forms};
use twistlab::twistkit::{build_twist, coassociativity_residual, TwistedHopf};

fn main() -> twistlab::Result<()> {
    let u = Enveloping::new(gl2());
    let hopf = TwistedHopf::new(&u, build_twist(&u, 2)?)?;
    println!("D(Xp) = {}", hopf.coproduct[&Gen::Xp]);
    println!("S(Xp) = {}", hopf.antipode[&Gen::Xp]);

    let hopf = TwistedHopf::new(&u, build_twist(&u, 5)?)?;
    for c in match_gl2_closed_forms(&hopf) {
        println!("{:<14} {}", c.name, c.status);
    }

    let s = Enveloping::new(sl12());
    let shopf = TwistedHopf::new(&s, build_twist(&s, 5)?)?;
    for c in match_odd_closed_forms(&shopf) {
        println!("{:<14} {}", c.name, c.status);
    }
    let (l, r) = shopf.antipode_axiom_residuals(&Element::gen(Gen::Vm, 5));
    println!(
        "antipode axiom on vm: {} + {} residual terms",
        l.len(),
        r.len()
    );

    let small = TwistedHopf::new(&s, build_twist(&s, 3)?)?;
    println!(
        "coassociativity of D(vbp): {} residual terms",
        coassociativity_residual(&small, Gen::Vbp).len()
    );
    Ok(())
}
