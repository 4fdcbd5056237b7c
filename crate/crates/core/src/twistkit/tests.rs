use super::closed_forms::{match_gl2_closed_forms, match_odd_closed_forms};
use super::jordanian::jordanian_check;
use super::*;
use crate::superalgebra::{gl2, sl12};
use Gen::*;

fn t1(a: Gen, b: Gen) -> TensorElement {
    TensorElement::pure2(&Element::gen(a, 1), &Element::gen(b, 1))
}

fn assert_all_pass(cs: &[Check]) {
    for c in cs {
        assert!(
            c.passed(),
            "{} residual {} {:?}",
            c.name,
            c.residual_terms,
            c.detail
        );
    }
}

#[test]
fn twist_first_order() {
    let u = Enveloping::new(gl2());
    let tw = build_twist(&u, 1).unwrap();
    let expect = TensorElement::one(2, 1)
        .add(&t1(Xp, Z).scale_poly(&PolyHG::g()))
        .sub(&t1(H, Xp).scale_poly(&PolyHG::h()));
    assert_eq!(tw.f, expect);
    assert!(build_twist(&u, 0).is_err());
}

#[test]
fn twist_inverse() {
    let u = Enveloping::new(sl12());
    let tw = build_twist(&u, 4).unwrap();
    let (a, b) = tw.inverse_residuals(&u);
    assert!(a.is_zero() && b.is_zero());
}

#[test]
fn cocycle_holds_and_swapped_fails() {
    let u = Enveloping::new(gl2());
    let tw = build_twist(&u, 4).unwrap();
    assert_all_pass(&verify_cocycle(&u, &tw));
    let bad = build_twist_variant(&u, 4, TwistVariant::Swapped).unwrap();
    let cs = verify_cocycle(&u, &bad);
    assert!(!cs[0].passed());
}

#[test]
fn r_first_order_and_two_routes() {
    let u = Enveloping::new(gl2());
    let tw = build_twist(&u, 1).unwrap();
    let (r, check) = build_universal_r(&u, &tw).unwrap();
    assert!(check.passed());
    let expect = TensorElement::one(2, 1)
        .add(&t1(Z, Xp).scale_poly(&PolyHG::g()))
        .sub(&t1(Xp, H).scale_poly(&PolyHG::h()))
        .add(&t1(H, Xp).scale_poly(&PolyHG::h()))
        .sub(&t1(Xp, Z).scale_poly(&PolyHG::g()));
    assert_eq!(r.r, expect);
    let tw4 = build_twist(&u, 4).unwrap();
    assert!(build_universal_r(&u, &tw4).unwrap().1.passed());
}

#[test]
fn gl2_closed_forms_and_r() {
    let u = Enveloping::new(gl2());
    let tw = build_twist(&u, 5).unwrap();
    let hopf = TwistedHopf::new(&u, tw.clone()).unwrap();
    assert_all_pass(&match_gl2_closed_forms(&hopf));
    for g in [Z, H, Xp, Xm] {
        let (l, r) = hopf.antipode_axiom_residuals(&Element::gen(g, 5));
        assert!(l.is_zero() && r.is_zero(), "{g}");
    }
    let r = r_from_twist(&u, &tw);
    assert_all_pass(&verify_r_properties(&hopf, &r, &[Z, H, Xp, Xm], 5));
    let bad = r_closed_form(&u, 5, RVariant::DropZSigma).unwrap();
    let cs = verify_r_properties(&hopf, &bad, &[Xm], 5);
    assert!(cs.iter().any(|c| !c.passed()));
}

#[test]
fn hexagons_and_coassociativity() {
    let u = Enveloping::new(gl2());
    let tw = build_twist(&u, 3).unwrap();
    let hopf = TwistedHopf::new(&u, tw.clone()).unwrap();
    let r = r_from_twist(&u, &tw);
    assert_all_pass(&verify_hexagons(&hopf, &r, 3));
    for g in [H, Xm] {
        assert!(coassociativity_residual(&hopf, g).is_zero());
    }
}

#[test]
fn coproduct_is_multiplicative() {
    let u = Enveloping::new(gl2());
    let tw = build_twist(&u, 4).unwrap();
    let hopf = TwistedHopf::new(&u, tw).unwrap();
    // Δ respects [Xp, Xm] = H
    let lhs = u
        .tmul(&hopf.coproduct[&Xp], &hopf.coproduct[&Xm])
        .sub(&u.tmul(&hopf.coproduct[&Xm], &hopf.coproduct[&Xp]));
    assert_eq!(lhs, hopf.coproduct[&H]);
}

#[test]
fn sl12_odd_closed_forms() {
    let u = Enveloping::new(sl12());
    let tw = build_twist(&u, 4).unwrap();
    let hopf = TwistedHopf::new(&u, tw).unwrap();
    let cs = match_odd_closed_forms(&hopf);
    assert_all_pass(&cs);
    for g in Gen::ALL {
        let (l, r) = hopf.antipode_axiom_residuals(&Element::gen(g, 4));
        assert!(l.is_zero() && r.is_zero(), "{g}");
    }
}

#[test]
fn gl2_restriction_agrees() {
    let ug = Enveloping::new(gl2());
    let us = Enveloping::new(sl12());
    let hg = TwistedHopf::new(&ug, build_twist(&ug, 3).unwrap()).unwrap();
    let hs = TwistedHopf::new(&us, build_twist(&us, 3).unwrap()).unwrap();
    for g in [Z, H, Xp, Xm] {
        assert_eq!(hg.coproduct[&g], hs.coproduct[&g]);
        assert_eq!(hg.antipode[&g], hs.antipode[&g]);
    }
}

#[test]
fn jordanian_relations() {
    let u = Enveloping::new(gl2());
    let hopf = TwistedHopf::new(&u, build_twist(&u, 5).unwrap()).unwrap();
    let cs = jordanian_check(&hopf);
    assert_all_pass(&cs);
}
