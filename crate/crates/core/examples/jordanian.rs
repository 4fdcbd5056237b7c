//! The nonlinear generators `A, H', X, Y` and their commutation relations and
//! Hopf maps.

use twistlab::enveloping::Enveloping;
use twistlab::superalgebra::gl2;
use twistlab::twistkit::jordanian::{jordanian_check, jordanian_generators};
use twistlab::twistkit::{build_twist, TwistedHopf};

fn main() -> twistlab::Result<()> {
    let u = Enveloping::new(gl2());
    let hopf = TwistedHopf::new(&u, build_twist(&u, 2)?)?;
    let j = jordanian_generators(&hopf);
    println!("X  = {}", j.x);
    println!("H' = {}", j.h);

    let hopf = TwistedHopf::new(&u, build_twist(&u, 5)?)?;
    for c in jordanian_check(&hopf) {
        println!("{:<16} {:<5} {}", c.name, c.status, c.anchor);
    }
    Ok(())
}
