use std::sync::OnceLock;

use super::hopf::{self, CoproductSigns};
use super::*;
use crate::representations::{derive_fundamental_rep, r_matrix_exact, Matrix};
use crate::scalars::{rat, PolyHG};

use FrtGen::*;

fn r_matrix() -> &'static Matrix {
    static R: OnceLock<Matrix> = OnceLock::new();
    R.get_or_init(|| r_matrix_exact(&derive_fundamental_rep().unwrap()).unwrap())
}

fn relations() -> &'static RelationSet {
    static RS: OnceLock<RelationSet> = OnceLock::new();
    RS.get_or_init(|| derive_rmm_relations(r_matrix(), RttSigns::Operator).unwrap())
}

fn localization() -> &'static Localization {
    static L: OnceLock<Localization> = OnceLock::new();
    L.get_or_init(|| Localization::new(relations().rewrite_system()).unwrap())
}

fn g(n: i64) -> PolyHG {
    PolyHG::g().scale(&rat(n, 1))
}

fn all_pass(checks: &[crate::report::Check]) {
    for c in checks {
        assert!(c.passed(), "{c:?}");
    }
}

#[test]
fn relation_set_shape() {
    let rs = relations();
    assert_eq!(rs.len(), 40);
    let sys = rs.rewrite_system();
    assert_eq!(sys.normal_words(2).len(), 41);
    // PBW count: five even letters with repetition, odd letters at most once
    assert_eq!(sys.normal_words(3).len(), 129);
    assert_eq!(sys.overlap_count(), 120);
    assert!(sys.confluence_failures().is_empty());
    for r in &rs.relations {
        assert!(r.rhs.is_homogeneous(r.lhs.parity()));
    }
}

#[test]
fn sample_relations() {
    let sys = relations().rewrite_system();
    let nf = |a: FrtGen, b: FrtGen| sys.nf(&NcPoly::gens(&[a, b]));
    assert!(nf(Xi, Xi).is_zero());
    assert!(nf(Delta, Delta).is_zero());
    // e eta = eta e + 2g xi e
    let lhs = nf(E, Eta);
    let rhs = nf(Eta, E).add(&nf(Xi, E).scale_poly(&g(2)));
    assert_eq!(lhs, rhs);
    assert_eq!(nf(Xi, E), NcPoly::gens(&[E, Xi]));
    let rs = relations();
    assert_eq!(rs.classical_limit_residual(), 0);
}

#[test]
fn sign_conventions_agree() {
    let plain = derive_rmm_relations(r_matrix(), RttSigns::Plain).unwrap();
    assert_eq!(plain.relations, relations().relations);
}

#[test]
fn json_export() {
    let v = serde_json::to_value(relations().to_json()).unwrap();
    let first = &v[0];
    assert!(first["lhs"].is_array());
    assert!(first["rhs"][0]["word"].is_array());
    let c: PolyHG = serde_json::from_value(first["rhs"][0]["coeff"].clone()).unwrap();
    assert!(!c.is_zero());
}

#[test]
fn printed_blocks_are_equivalent() {
    all_pass(&cross_check_block_relations(
        relations(),
        BlockMutation::None,
    ));
    let mutated = cross_check_block_relations(relations(), BlockMutation::DropThetaSign);
    let bad: Vec<_> = mutated
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(bad, ["block-theta-theta", "blocks-imply-derived"]);
}

#[test]
fn det_commutators() {
    let sys = relations().rewrite_system();
    all_pass(&det::det_t_checks(&sys, Budget::default()));
    let det = det::det_t();
    assert!(det::commutator(&sys, Budget::default(), &det, C)
        .unwrap()
        .is_zero());
    let eta = det::commutator(&sys, Budget::default(), &det, Eta).unwrap();
    let want = sys.nf(&NcPoly::gen(Xi).concat(&det).scale_poly(&g(-2)));
    assert_eq!(eta, want);
}

#[test]
fn straightening_rules() {
    let loc = localization();
    assert_eq!(*loc.phi.image(C), NcPoly::gen(C));
    assert_eq!(*loc.phi.image(E), NcPoly::gen(E));
    // detT^-1 eta = (eta - 2g xi) detT^-1
    let want = NcPoly::gen(Eta).sub(&NcPoly::gen(Xi).scale_poly(&g(2)));
    assert_eq!(*loc.phi.image(Eta), want);
    let mut ctx = loc.ctx(Budget::default());
    let one = ctx
        .mul(&Loc::poly(loc.det.clone()), &Loc::det_inv())
        .unwrap();
    assert_eq!(ctx.residual(&one, &Loc::one()).unwrap(), 0);
    all_pass(&hopf::straightening_checks(
        loc,
        relations(),
        Budget::default(),
    ));
}

#[test]
fn t_inverse_classical_limit() {
    let loc = localization();
    let z = rat(0, 1);
    let q0: Vec<NcPoly> = loc
        .q
        .iter()
        .flatten()
        .map(|p| p.specialize(Some(&z), Some(&z)))
        .collect();
    assert_eq!(
        q0,
        [
            NcPoly::gen(D),
            NcPoly::gen(B).neg(),
            NcPoly::gen(C).neg(),
            NcPoly::gen(A)
        ]
    );
}

#[test]
fn sdet_is_central() {
    all_pass(&hopf::sdet_checks(localization(), Budget::default()));
}

#[test]
fn tiny_budget_is_inconclusive() {
    let tiny = Budget {
        max_len: 3,
        max_steps: 10,
    };
    let checks = hopf::sdet_checks(localization(), tiny);
    assert!(checks
        .iter()
        .filter(|c| c.name.starts_with("sdet-commutes"))
        .all(|c| c.status == crate::report::Status::Inconclusive));
    assert_eq!(
        checks
            .iter()
            .filter(|c| c.name.starts_with("sdet-commutes"))
            .count(),
        9
    );
}

#[test]
fn inverse_and_hopf_maps() {
    all_pass(&hopf::inverse_checks(
        localization(),
        relations(),
        Budget::default(),
    ));
}

#[test]
fn coproduct_detects_broken_relation() {
    let rs = relations();
    let sys = rs.rewrite_system();
    let mut broken = rs.clone();
    let r = broken
        .relations
        .iter_mut()
        .find(|r| r.lhs == Word(vec![Eta, E]))
        .unwrap();
    r.rhs = NcPoly::gens(&[E, Eta]);
    for signs in CoproductSigns::ALL {
        assert_eq!(hopf::coproduct_residual(&sys, rs, signs), 0);
        assert!(hopf::coproduct_residual(&sys, &broken, signs) > 0);
    }
}
