use super::*;
use crate::superalgebra::{gl2, sl12};
use Gen::*;

fn e(g: Gen) -> Element {
    Element::gen(g, 6)
}

fn m(gs: &[(Gen, u8)]) -> Mono {
    let mut m = Mono::ONE;
    for (g, k) in gs {
        m.0[g.index()] = *k;
    }
    m
}

fn elt(terms: &[(Mono, i64)]) -> Element {
    let mut x = Element::zero(6);
    for (mm, c) in terms {
        x.add_term(*mm, &PolyHG::int(*c));
    }
    x
}

#[test]
fn xm_xp_reorders() {
    let u = Enveloping::new(gl2());
    let p = u.mul(&e(Xm), &e(Xp));
    assert_eq!(p, elt(&[(m(&[(Xp, 1), (Xm, 1)]), 1), (m(&[(H, 1)]), -1)]));
}

#[test]
fn odd_square_vanishes() {
    let u = Enveloping::new(sl12());
    assert!(u.mul(&e(Vp), &e(Vp)).is_zero());
    assert!(u.mul(&e(Vbm), &e(Vbm)).is_zero());
}

#[test]
fn vbp_vp_reorders_with_sign() {
    let u = Enveloping::new(sl12());
    let p = u.mul(&e(Vbp), &e(Vp));
    assert_eq!(p, elt(&[(m(&[(Vp, 1), (Vbp, 1)]), -1), (m(&[(Xp, 1)]), 1)]));
}

#[test]
fn tensor_koszul_signs() {
    let u = Enveloping::new(sl12());
    let one = Element::one(6);
    let a = TensorElement::pure2(&e(Vp), &one);
    let b = TensorElement::pure2(&one, &e(Vp));
    let vv = TensorElement::pure2(&e(Vp), &e(Vp));
    assert_eq!(u.tmul(&a, &b), vv);
    assert_eq!(u.tmul(&b, &a), vv.scale(&rat(-1, 1)));
    let x1 = TensorElement::pure2(&e(Xp), &one);
    let x2 = TensorElement::pure2(&one, &e(Xp));
    assert_eq!(u.tmul(&x1, &x2), TensorElement::pure2(&e(Xp), &e(Xp)));
}

#[test]
fn tensor_product_normalizes_slots() {
    // (H⊗Xp)(Xp⊗H) = (H·Xp) ⊗ (Xp·H), and Xp·H = H·Xp - 2Xp in PBW order
    let u = Enveloping::new(gl2());
    let p = u.tmul(
        &TensorElement::pure2(&e(H), &e(Xp)),
        &TensorElement::pure2(&e(Xp), &e(H)),
    );
    let left = elt(&[(m(&[(H, 1), (Xp, 1)]), 1)]);
    let right = elt(&[(m(&[(H, 1), (Xp, 1)]), 1), (m(&[(Xp, 1)]), -2)]);
    assert_eq!(p, TensorElement::pure2(&left, &right));
    assert!(u.tensor_mul(&p, &TensorElement::one(3, 6)).is_err());
}

#[test]
fn coproduct0_of_square() {
    let u = Enveloping::new(gl2());
    let x2 = u.mul(&e(Xp), &e(Xp));
    let d = u.coproduct0(&x2);
    let one = Element::one(6);
    let expect = TensorElement::pure2(&x2, &one)
        .add(&TensorElement::pure2(&e(Xp), &e(Xp)).scale(&rat(2, 1)))
        .add(&TensorElement::pure2(&one, &x2));
    assert_eq!(d, expect);
}

#[test]
fn antipode0_of_odd_pair() {
    let u = Enveloping::new(sl12());
    let vpvm = u.mul(&e(Vp), &e(Vm));
    // S0(vp vm) = -vm vp = vp vm since {vp, vm} = 0
    assert_eq!(u.antipode0(&vpvm), vpvm);
}

#[test]
fn counit0_of_mixed() {
    let u = Enveloping::new(gl2());
    let x = Element::one(6).add(&u.mul(&e(Xp), &e(H)).scale_poly(&PolyHG::h()));
    assert_eq!(u.counit0(&x), PolyHG::one());
}

#[test]
fn pbw_confluence_on_triples() {
    // x_k x_j x_i reduced as (x_k x_j) x_i and x_k (x_j x_i) agree
    let u = Enveloping::new(sl12());
    for a in Gen::ALL {
        for b in Gen::ALL {
            for c in Gen::ALL {
                let l = u.mul(&u.mul(&e(a), &e(b)), &e(c));
                let r = u.mul(&e(a), &u.mul(&e(b), &e(c)));
                assert_eq!(l, r, "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn antipode0_axiom_on_generators() {
    let u = Enveloping::new(sl12());
    for g in Gen::ALL {
        let d = u.coproduct0(&e(g));
        let mut acc = Element::zero(6);
        for (k, c) in d.terms() {
            let s = u.antipode0_mono(k[0]);
            acc = acc.add(&u.mul(&s, &Element::term(k[1], c.clone(), 6)));
        }
        assert!(acc.is_zero(), "{g}");
    }
}

#[test]
fn coproduct0_is_cocommutative() {
    let u = Enveloping::new(sl12());
    let x = u.mul_all(&[&e(H), &e(Vp), &e(Vbm)]);
    let d = u.coproduct0(&x);
    assert_eq!(d.flip(), d);
}

#[test]
fn tensor_exp_first_order() {
    let u = Enveloping::new(gl2());
    let one = Element::one(1);
    assert_eq!(
        u.tensor_exp(&TensorElement::zero(2, 1)).unwrap(),
        TensorElement::one(2, 1)
    );
    // -½ H ⊗ σ with σ = 2h Xp + O(h²)
    let sigma1 = Element::term(Mono::gen(Xp), PolyHG::h().scale(&rat(2, 1)), 1);
    let t = TensorElement::pure2(&Element::gen(H, 1), &sigma1).scale(&rat(-1, 2));
    let ex = u.tensor_exp(&t).unwrap();
    let expect = TensorElement::pure2(&one, &one).sub(
        &TensorElement::pure2(&Element::gen(H, 1), &Element::gen(Xp, 1)).scale_poly(&PolyHG::h()),
    );
    assert_eq!(ex, expect);
    let bad = TensorElement::pure2(&Element::gen(H, 1), &one);
    assert!(u.tensor_exp(&bad).is_err());
}
