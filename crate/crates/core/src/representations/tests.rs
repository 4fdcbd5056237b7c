use super::*;
use crate::enveloping::Enveloping;
use crate::superalgebra::gl2;
use crate::twistkit::{build_sigma, build_twist, exp_sigma, r_from_twist};

fn fundamental() -> Rep {
    derive_fundamental_rep().unwrap()
}

#[test]
fn fundamental_matrices() {
    let rep = fundamental();
    let d = |v: [i64; 3]| Matrix::diag(&v.map(|x| rat(x, 1)));
    assert_eq!(rep.mats[&Gen::Z], d([2, 1, 1]));
    assert_eq!(rep.mats[&Gen::H], d([0, 1, -1]));
    assert_eq!(rep.mats[&Gen::Vp], Matrix::unit(3, 0, 2));
    assert_eq!(rep.mats[&Gen::Vbm], Matrix::unit(3, 2, 0));
    assert!(rep.representation_check(&sl12()).unwrap().passed());
    let vp = rep.get(Gen::Vp).unwrap();
    assert!(vp.mul(vp).is_zero());
    let (h, xp) = (rep.get(Gen::H).unwrap(), rep.get(Gen::Xp).unwrap());
    assert_eq!(h.commutator(xp), xp.scale(&rat(2, 1)));
}

#[test]
fn candidates_are_reported() {
    let cands = derive_fundamental_candidates();
    assert!(cands.iter().any(|c| c.residual == 0));
}

#[test]
fn spin_reps() {
    for tj in 1..=4 {
        let j = rat(tj, 2);
        let rep = spin_rep_gl2(&j, &rat(3, 1)).unwrap();
        assert!(rep.representation_check(&gl2()).unwrap().passed(), "j={j}");
        let xp = rep.get(Gen::Xp).unwrap();
        assert!(xp.pow(tj as u32 + 1).is_zero());
    }
    let half = spin_rep_gl2(&rat(1, 2), &rat(1, 1)).unwrap();
    assert_eq!(half.mats[&Gen::H], Matrix::diag(&[rat(1, 1), rat(-1, 1)]));
    assert!(spin_rep_gl2(&rat(5, 2), &rat(1, 1)).is_err());
    assert!(spin_rep_gl2(&rat(1, 3), &rat(1, 1)).is_err());
}

#[test]
fn exact_sigma_images() {
    let rep = fundamental();
    let xp = rep.get(Gen::Xp).unwrap().clone();
    let two_h = PolyHG::h().scale(&rat(2, 1));
    let e = rep
        .sigma()
        .unwrap()
        .scale(&rat(-1, 1))
        .exp_nilpotent()
        .unwrap();
    assert_eq!(e, Matrix::identity(3).sub(&xp.scale_poly(&two_h)));
    let half = spin_rep_gl2(&rat(1, 2), &rat(1, 1)).unwrap();
    let s = half.evaluate(&build_sigma(6)).unwrap();
    assert_eq!(s, half.mats[&Gen::Xp].scale_poly(&two_h));
    assert_eq!(rep.evaluate(&exp_sigma(&rat(-1, 1), 4)).unwrap(), e);
    assert!(Matrix::identity(2).exp_nilpotent().is_err());
}

#[test]
fn twist_image_is_invertible() {
    let rep = fundamental();
    let u = Enveloping::new(sl12());
    let tw = build_twist(&u, 4).unwrap();
    let p = rep.evaluate_tensor(&u.tmul(&tw.f, &tw.f_inv)).unwrap();
    assert_eq!(p, Matrix::identity(9));
}

#[test]
fn fundamental_r_blocks() {
    let rep = fundamental();
    let (r, checks) = r_matrix_fundamental(&rep).unwrap();
    for c in &checks {
        assert!(c.passed(), "{} {:?}", c.name, c.detail);
    }
    let b = RBlocks::extract(&r);
    assert_eq!(b.eo, rcheck_block());
    assert_eq!(b.rbar, rbar_block());
}

#[test]
fn ybe_and_mutation() {
    let rep = fundamental();
    let r = r_matrix_exact(&rep).unwrap();
    let v = GradedSpace::fundamental();
    assert!(verify_graded_ybe(&r, &v).iter().all(Check::passed));
    let bad = mutate_rbar_entry(&r);
    assert!(!verify_graded_ybe(&bad, &v)[0].passed());
    // R̄ alone on the gl(2) fundamental space
    let rbar = rbar_block();
    assert!(verify_graded_ybe(&rbar, &GradedSpace::even(2))
        .iter()
        .all(Check::passed));
}

#[test]
fn series_agrees_with_exact() {
    let rep = fundamental();
    let exact = r_matrix_exact(&rep).unwrap();
    let u = Enveloping::new(sl12());
    for n in 1..=4 {
        let tw = build_twist(&u, n).unwrap();
        let r = rep.evaluate_tensor(&r_from_twist(&u, &tw).r).unwrap();
        assert_eq!(r.truncate(n), exact.truncate(n), "order {n}");
    }
}

#[test]
fn spin_r_matrix_ybe() {
    for tj in 1..=3 {
        let rep = spin_rep_gl2(&rat(tj, 2), &rat(1, 1)).unwrap();
        let r = r_matrix_exact(&rep).unwrap();
        assert!(
            verify_graded_ybe(&r, &rep.space).iter().all(Check::passed),
            "2j={tj}"
        );
    }
}

#[test]
fn evaluation_is_multiplicative() {
    let rep = fundamental();
    let u = Enveloping::new(sl12());
    let x = Element::gen(Gen::Vbp, 6).add(&Element::gen(Gen::H, 6).scale_poly(&PolyHG::g()));
    let y = u.mul(&Element::gen(Gen::Xm, 6), &Element::gen(Gen::Vp, 6));
    let lhs = rep.evaluate(&u.mul(&x, &y)).unwrap();
    let rhs = rep.evaluate(&x).unwrap().mul(&rep.evaluate(&y).unwrap());
    assert_eq!(lhs, rhs);
}
