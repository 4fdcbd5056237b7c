use std::sync::OnceLock;

use proptest::prelude::*;

use twistlab::enveloping::{Element, Enveloping, Mono};
use twistlab::frtkit::{derive_rmm_relations, FrtGen, NcPoly, RewriteSystem, RttSigns, Word};
use twistlab::report::{Check, Report, Status};
use twistlab::representations::{derive_fundamental_rep, r_matrix_exact, Rep};
use twistlab::scalars::{rat, PolyHG, Rational};
use twistlab::superalgebra::{sl12, Gen, NUM_GENS};
use twistlab::twistkit::{build_twist, TwistedHopf};

const ORDER: u32 = 3;

fn sl12_env() -> &'static Enveloping {
    static U: OnceLock<Enveloping> = OnceLock::new();
    U.get_or_init(|| Enveloping::new(sl12()))
}

fn fundamental() -> &'static Rep {
    static R: OnceLock<Rep> = OnceLock::new();
    R.get_or_init(|| derive_fundamental_rep().unwrap())
}

fn frt_system() -> &'static RewriteSystem {
    static S: OnceLock<RewriteSystem> = OnceLock::new();
    S.get_or_init(|| {
        let r = r_matrix_exact(fundamental()).unwrap();
        derive_rmm_relations(&r, RttSigns::Operator)
            .unwrap()
            .rewrite_system()
    })
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = PolyHG> {
    prop::collection::vec((small_rat(), 0u32..3, 0u32..3), 0..4).prop_map(|ts| {
        let mut p = PolyHG::zero();
        for (c, i, j) in ts {
            p = &p + &PolyHG::monomial(c, i, j);
        }
        p
    })
}

fn mono() -> impl Strategy<Value = Mono> {
    prop::array::uniform8(0u8..3).prop_map(|mut e| {
        for (i, x) in e.iter_mut().enumerate() {
            if Gen::from_index(i).is_odd() {
                *x %= 2;
            }
        }
        // keep the PBW degree small so products stay cheap
        let mut budget = 3u8;
        for x in e.iter_mut() {
            *x = (*x).min(budget);
            budget -= *x;
        }
        Mono(e)
    })
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((mono(), poly()), 1..4).prop_map(|ts| {
        let mut x = Element::zero(ORDER);
        for (m, c) in ts {
            x.add_term(m, &c.truncate(ORDER));
        }
        x
    })
}

fn gl2_element() -> impl Strategy<Value = Element> {
    element().prop_map(|x| {
        let mut y = Element::zero(ORDER);
        for (m, c) in x.terms() {
            if m.supported_on(&[Gen::Z, Gen::H, Gen::Xp, Gen::Xm]) {
                y.add_term(*m, c);
            }
        }
        y
    })
}

fn frt_gen() -> impl Strategy<Value = FrtGen> {
    (0usize..9).prop_map(FrtGen::from_index)
}

fn nc_poly() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((prop::collection::vec(frt_gen(), 0..4), -3i64..=3), 1..4).prop_map(
        |ts| {
            let mut p = NcPoly::zero();
            for (w, c) in ts {
                p.add_term(Word::from_gens(&w), &PolyHG::int(c));
            }
            p
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn specialization_is_a_ring_map(a in poly(), b in poly(), h in small_rat(), g in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&h, &g), a.eval(&h, &g) * b.eval(&h, &g));
        prop_assert_eq!((&a + &b).eval(&h, &g), a.eval(&h, &g) + b.eval(&h, &g));
        let partial = a.specialize(Some(&h), None);
        prop_assert_eq!(partial.eval(&rat(0, 1), &g), a.eval(&h, &g));
    }

    #[test]
    fn truncation_is_compatible_with_products(a in poly(), b in poly()) {
        prop_assert_eq!(a.mul_trunc(&b, 2), (&a * &b).truncate(2));
    }

    #[test]
    fn enveloping_product_is_associative(x in element(), y in element(), z in element()) {
        let u = sl12_env();
        prop_assert_eq!(u.mul(&u.mul(&x, &y), &z), u.mul(&x, &u.mul(&y, &z)));
    }

    #[test]
    fn coproduct0_is_multiplicative(x in element(), y in element()) {
        let u = sl12_env();
        let lhs = u.coproduct0(&u.mul(&x, &y));
        let rhs = u.tmul(&u.coproduct0(&x), &u.coproduct0(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn representation_is_multiplicative(x in element(), y in element()) {
        let u = sl12_env();
        let rep = fundamental();
        let lhs = rep.evaluate(&u.mul(&x, &y)).unwrap();
        let rhs = rep.evaluate(&x).unwrap().mul(&rep.evaluate(&y).unwrap()).truncate(ORDER);
        prop_assert_eq!(lhs.truncate(ORDER), rhs);
    }

    #[test]
    fn normal_form_is_idempotent_and_normal(p in nc_poly()) {
        let sys = frt_system();
        let n = sys.nf(&p);
        prop_assert_eq!(sys.nf(&n), n.clone());
        for (w, _) in n.terms() {
            prop_assert!(sys.is_normal(w));
        }
    }

    #[test]
    fn normal_form_respects_products(p in nc_poly(), q in nc_poly()) {
        let sys = frt_system();
        let direct = sys.nf(&p.concat(&q));
        prop_assert_eq!(sys.nf(&sys.nf(&p).concat(&sys.nf(&q))), direct.clone());
        prop_assert_eq!(sys.mul(&sys.nf(&p), &q), direct);
    }

    #[test]
    fn report_status_is_dominated_by_fail(statuses in prop::collection::vec(0u8..3, 0..8)) {
        let mut r = Report::new("p", serde_json::json!({}));
        for (i, s) in statuses.iter().enumerate() {
            r.push(match s {
                0 => Check::from_residual(format!("c{i}"), "", 0),
                1 => Check::from_residual(format!("c{i}"), "", 1),
                _ => Check::inconclusive(format!("c{i}"), "", "budget"),
            });
        }
        let want = if statuses.contains(&1) {
            Status::Fail
        } else if statuses.contains(&2) {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        prop_assert_eq!(r.status(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn twisted_coproduct_is_multiplicative(x in gl2_element(), y in gl2_element()) {
        static U: OnceLock<Enveloping> = OnceLock::new();
        let u = U.get_or_init(|| Enveloping::new(twistlab::superalgebra::gl2()));
        let hopf = TwistedHopf::new(u, build_twist(u, ORDER).unwrap()).unwrap();
        let lhs = hopf.apply_coproduct(&u.mul(&x, &y));
        let rhs = u.tmul(&hopf.apply_coproduct(&x), &hopf.apply_coproduct(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn twisted_counit_and_antipode_axioms(x in gl2_element()) {
        static U: OnceLock<Enveloping> = OnceLock::new();
        let u = U.get_or_init(|| Enveloping::new(twistlab::superalgebra::gl2()));
        let hopf = TwistedHopf::new(u, build_twist(u, ORDER).unwrap()).unwrap();
        let (l, r) = hopf.antipode_axiom_residuals(&x);
        prop_assert!(l.is_zero());
        prop_assert!(r.is_zero());
    }
}

#[test]
fn generator_count() {
    assert_eq!(NUM_GENS, 8);
}
