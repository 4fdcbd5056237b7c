//! Nonlinear generators `A, H', X, Y` of the twisted `gl(2)` and the
//! Jordanian relations and Hopf maps they satisfy.

use crate::enveloping::{Element, TensorElement};
use crate::report::Check;
use crate::scalars::{rat, PolyHG};
use crate::superalgebra::Gen;

use super::blocks::{cosh_hx, exp_hx, exp_sigma, sigma_over_2h, sinh_hx_over_h};
use super::TwistedHopf;

#[derive(Clone, Debug)]
pub struct JordanianGens {
    pub a: Element,
    pub h: Element,
    pub x: Element,
    pub y: Element,
}

/// `A = Z`, `H' = e^{-σ/2}H`, `X = σ/2h`,
/// `Y = e^{-σ/2}(X- + (h/2)H²) - (h/8)e^{σ/2}(e^{-σ}-1)`.
pub fn jordanian_generators(hopf: &TwistedHopf) -> JordanianGens {
    let u = hopf.alg;
    let n = hopf.order();
    let em = exp_sigma(&rat(-1, 2), n);
    let ep = exp_sigma(&rat(1, 2), n);
    let hh = Element::gen(Gen::H, n);
    let xm = Element::gen(Gen::Xm, n);
    let xp = Element::gen(Gen::Xp, n);
    let h = PolyHG::h();
    let inner = xm.add(&u.mul(&hh, &hh).scale_poly(&h).scale(&rat(1, 2)));
    // (h/8)(e^{-σ}-1) = -(h²/4) Xp
    let tail = u.mul(&ep, &xp).scale_poly(&(&h * &h)).scale(&rat(-1, 4));
    JordanianGens {
        a: Element::gen(Gen::Z, n),
        h: u.mul(&em, &hh),
        x: sigma_over_2h(n),
        y: u.mul(&em, &inner).sub(&tail),
    }
}

const REL: &str = "Jordanian commutation relations of A, H', X, Y";
const MAPS: &str = "Hopf maps of A, H', X, Y";

/// Commutation relations and Hopf maps of the nonlinear generators.
pub fn jordanian_check(hopf: &TwistedHopf) -> Vec<Check> {
    let u = hopf.alg;
    let n = hopf.order();
    let j = jordanian_generators(hopf);
    let sinh = sinh_hx_over_h(u, n);
    let cosh = cosh_hx(u, n);
    let ehx = exp_hx(u, 1, n);
    let emhx = exp_hx(u, -1, n);
    let g = PolyHG::g();
    let g2 = &g * &g;
    let one = Element::one(n);
    let t = TensorElement::pure2;

    let mut out = Vec::new();
    let rel = |name: &str, lhs: Element, rhs: Element| {
        Check::from_residual(name, REL, lhs.sub(&rhs).len())
    };
    out.push(rel("[X,Y]", u.commutator(&j.x, &j.y), j.h.clone()));
    out.push(rel(
        "[H',X]",
        u.commutator(&j.h, &j.x),
        sinh.scale(&rat(2, 1)),
    ));
    out.push(rel(
        "[H',Y]",
        u.commutator(&j.h, &j.y),
        u.mul(&j.y, &cosh).add(&u.mul(&cosh, &j.y)).neg(),
    ));
    let central = [&j.h, &j.x, &j.y]
        .iter()
        .map(|e| u.commutator(&j.a, e).len())
        .sum();
    out.push(Check::from_residual("[A,*]", REL, central));

    let cop = |name: &str, x: &Element, rhs: TensorElement| {
        Check::from_residual(name, MAPS, hopf.apply_coproduct(x).sub(&rhs).len())
    };
    out.push(cop("coproduct-A", &j.a, t(&j.a, &one).add(&t(&one, &j.a))));
    out.push(cop(
        "coproduct-H'",
        &j.h,
        t(&j.h, &ehx).add(&t(&emhx, &j.h)).sub(
            &t(&sinh, &u.mul(&j.a, &ehx))
                .scale_poly(&g)
                .scale(&rat(2, 1)),
        ),
    ));
    out.push(cop("coproduct-X", &j.x, t(&j.x, &one).add(&t(&one, &j.x))));
    let a2 = u.mul(&j.a, &j.a);
    out.push(cop(
        "coproduct-Y",
        &j.y,
        t(&j.y, &ehx)
            .add(&t(&emhx, &j.y))
            .sub(&t(&sinh, &u.mul(&a2, &ehx)).scale_poly(&g2))
            .add(&t(&j.h, &u.mul(&j.a, &ehx)).scale_poly(&g)),
    ));
    let counit = [&j.a, &j.h, &j.x, &j.y]
        .iter()
        .filter(|e| !hopf.counit(e).is_zero())
        .count();
    out.push(Check::from_residual("counit", MAPS, counit));

    let ant = |name: &str, x: &Element, rhs: Element| {
        Check::from_residual(name, MAPS, hopf.apply_antipode(x).sub(&rhs).len())
    };
    out.push(ant("antipode-A", &j.a, j.a.neg()));
    out.push(ant("antipode-X", &j.x, j.x.neg()));
    out.push(ant(
        "antipode-H'",
        &j.h,
        u.mul_all(&[&ehx, &j.h, &emhx])
            .neg()
            .sub(&u.mul(&sinh, &j.a).scale_poly(&g).scale(&rat(2, 1))),
    ));
    out.push(ant(
        "antipode-Y",
        &j.y,
        u.mul_all(&[&ehx, &j.y, &emhx])
            .neg()
            .add(&u.mul(&sinh, &a2).scale_poly(&g2))
            .add(&u.mul_all(&[&ehx, &j.h, &j.a, &emhx]).scale_poly(&g)),
    ));
    out
}
