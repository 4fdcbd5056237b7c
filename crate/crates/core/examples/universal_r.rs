//! The universal R-matrix two ways, its triangularity, the intertwining
//! property and the hexagon identities.

use twistlab::enveloping::Enveloping;
use twistlab::superalgebra::{sl12, Gen};
use twistlab::twistkit::{
    build_twist, build_universal_r, verify_hexagons, verify_r_properties, TwistedHopf,
};

fn main() -> twistlab::Result<()> {
    let u = Enveloping::new(sl12());
    let tw = build_twist(&u, 2)?;
    let (r, _) = build_universal_r(&u, &tw)?;
    println!("R to order 2: {}", r.r);

    let tw = build_twist(&u, 5)?;
    let (r, routes) = build_universal_r(&u, &tw)?;
    println!("{}: {}", routes.name, routes.status);
    let hopf = TwistedHopf::new(&u, tw)?;
    for c in verify_r_properties(&hopf, &r, &Gen::ALL, 4) {
        println!("{:<16} {}", c.name, c.status);
    }

    let hopf3 = TwistedHopf::new(&u, build_twist(&u, 3)?)?;
    let (r3, _) = build_universal_r(&u, &hopf3.twist)?;
    for c in verify_hexagons(&hopf3, &r3, 3) {
        println!("{:<16} {}", c.name, c.status);
    }
    Ok(())
}
