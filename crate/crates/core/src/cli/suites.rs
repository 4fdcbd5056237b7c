use std::thread;
use std::time::Instant;

use super::{Mutation, Suite, SuiteConfig};
use crate::enveloping::{Element, Enveloping, TensorElement};
use crate::frtkit::det::det_t_checks;
use crate::frtkit::{
    cross_check_block_relations, derive_rmm_relations, hopf, BlockMutation, Localization,
    RelationSet, RttSigns,
};
use crate::report::{Check, Report};
use crate::representations::{
    derive_fundamental_rep, fundamental_block_checks_at, mutate_rbar_entry, r_matrix_exact,
    rep_by_name, verify_graded_ybe, GradedSpace, Matrix, RBlocks, Rep,
};
use crate::scalars::rat;
use crate::superalgebra::{gl2, sl12, subalgebra_check, Gen, Presentation};
use crate::twistkit::closed_forms::{match_gl2_closed_forms, match_odd_closed_forms};
use crate::twistkit::jordanian::jordanian_check;
use crate::twistkit::{
    build_twist, build_twist_variant, coassociativity_residual, r_closed_form, r_from_twist,
    verify_cocycle, verify_hexagons, verify_r_properties, RVariant, TwistVariant, TwistedHopf,
};
use crate::Error;

const TWO_ROUTES: &str = "R = F21 F^-1 equals the four-exponential closed form";
const ANTIPODE: &str = "m(S x id)D(x) = m(id x S)D(x) = e(x)1";
const COASSOC: &str = "(D x id)D(x) = (id x D)D(x)";
const HOMOMORPHISM: &str = "twisted coproduct preserves the defining brackets";

/// Run one suite, or every suite for [`Suite::All`]. Configuration errors
/// are returned; failures inside the algebra become failing checks.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report, Error> {
    cfg.validate()?;
    if cfg.is_specialized() && !suite.accepts_specialization() {
        return Err(Error::Usage(format!(
            "--set applies only to the exact matrix suites (rmatrix-fundamental, ybe), not {suite}"
        )));
    }
    if let Some(m) = cfg.mutation {
        if !suite.mutations().contains(&m) {
            return Err(Error::Usage(format!(
                "mutation {m} does not apply to {suite}"
            )));
        }
        if m == Mutation::FlipRbar && cfg.rep != "fundamental" && !suite.is_frt() {
            return Err(Error::Usage(
                "flip-rbar needs the fundamental representation".into(),
            ));
        }
    }
    if suite.is_frt() && cfg.rep != "fundamental" {
        return Err(Error::Usage(format!(
            "{suite} is built on the fundamental R-matrix"
        )));
    }
    rep_by_name(&cfg.rep)?;
    let start = Instant::now();
    let mut report = Report::new(suite.name(), cfg.echo());
    if suite == Suite::All {
        report.extend(run_all(cfg));
    } else {
        report.extend(guarded(suite, cfg));
    }
    report.elapsed = Some(start.elapsed());
    Ok(report)
}

fn run_all(cfg: &SuiteConfig) -> Vec<Check> {
    let results: Vec<Vec<Check>> = thread::scope(|s| {
        let handles: Vec<_> = Suite::EACH
            .iter()
            .map(|&suite| {
                let mut sub = cfg.clone();
                if sub
                    .mutation
                    .is_some_and(|m| !suite.mutations().contains(&m))
                {
                    sub.mutation = None;
                }
                if suite.is_frt() {
                    sub.rep = "fundamental".into();
                }
                s.spawn(move || guarded(suite, &sub))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    Suite::EACH
        .iter()
        .zip(results)
        .flat_map(|(suite, checks)| {
            checks.into_iter().map(move |mut c| {
                c.name = format!("{suite}/{}", c.name);
                c
            })
        })
        .collect()
}

fn guarded(suite: Suite, cfg: &SuiteConfig) -> Vec<Check> {
    let r = match suite {
        Suite::ValidateAlgebras => validate_algebras(cfg),
        Suite::Cocycle => cocycle(cfg),
        Suite::HopfGl2 => hopf_gl2(cfg),
        Suite::HopfSl12 => hopf_sl12(cfg),
        Suite::RmatrixUniversal => rmatrix_universal(cfg),
        Suite::RmatrixFundamental => rmatrix_fundamental(cfg),
        Suite::Ybe => ybe(cfg),
        Suite::Jordanian => jordanian(cfg),
        Suite::FrtRelations => frt_relations(cfg),
        Suite::FrtDet => frt_det(cfg),
        Suite::FrtSdet => frt_sdet(cfg),
        Suite::FrtInverse => frt_inverse(cfg),
        Suite::All => unreachable!("expanded by run_all"),
    };
    r.unwrap_or_else(|e| {
        let name = format!("{suite}-aborted");
        let anchor = "suite ran to completion";
        vec![match e {
            Error::BudgetExhausted => Check::inconclusive(name, anchor, e.to_string()),
            _ => Check::from_residual(name, anchor, 1).with_detail(e.to_string()),
        }]
    })
}

fn twist_variant(cfg: &SuiteConfig) -> TwistVariant {
    match cfg.mutation {
        Some(Mutation::SwapTwist) => TwistVariant::Swapped,
        _ => TwistVariant::Standard,
    }
}

fn hopf_at<'a>(u: &'a Enveloping, n: u32, cfg: &SuiteConfig) -> Result<TwistedHopf<'a>, Error> {
    TwistedHopf::new(u, build_twist_variant(u, n, twist_variant(cfg))?)
}

fn sl12_for(cfg: &SuiteConfig) -> Presentation {
    let mut p = sl12();
    if cfg.mutation == Some(Mutation::FlipBracket) {
        p.set_bracket(
            Gen::Vbp,
            Gen::Vm,
            &[(Gen::Z, rat(1, 2)), (Gen::H, rat(-1, 2))],
        );
    }
    p
}

fn is_superalgebra_rep(rep: &Rep) -> bool {
    rep.get(Gen::Vp).is_ok()
}

fn validate_algebras(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let gl = gl2();
    let sl = sl12_for(cfg);
    let mut out = Vec::new();
    for p in [&gl, &sl] {
        let v = p.validate();
        let name = p.name();
        out.push(
            Check::from_residual(
                format!("jacobi-{name}"),
                "graded Jacobi identity on every generator triple",
                v.jacobi_failures.len(),
            )
            .with_detail(format!("{} triples", v.triples_checked)),
        );
        out.push(Check::from_residual(
            format!("grading-{name}"),
            "brackets respect parity and close on the generators",
            v.parity_failures.len() + v.closure_failures.len(),
        ));
        out.push(Check::from_bool(
            format!("antisymmetry-{name}"),
            "[x,y] = -(-1)^{|x||y|}[y,x]",
            p.antisymmetry_holds(),
        ));
    }
    out.push(Check::from_bool(
        "gl2-subalgebra",
        "even part of sl(1/2) is gl(2)",
        subalgebra_check(&gl, &sl),
    ));
    let rep = rep_by_name(&cfg.rep)?;
    let pres = if is_superalgebra_rep(&rep) { &sl } else { &gl };
    out.push(rep.representation_check(pres)?);
    Ok(out)
}

fn cocycle(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let u = Enveloping::new(gl2());
    let tw = build_twist_variant(&u, cfg.rank3_order(), twist_variant(cfg))?;
    Ok(verify_cocycle(&u, &tw))
}

fn antipode_axioms(hopf: &TwistedHopf, gens: &[Gen]) -> Vec<Check> {
    gens.iter()
        .map(|&g| {
            let (l, r) = hopf.antipode_axiom_residuals(&Element::gen(g, hopf.order()));
            Check::from_residual(format!("antipode-axiom-{g}"), ANTIPODE, l.len() + r.len())
        })
        .collect()
}

fn coassociativity(hopf: &TwistedHopf, gens: &[Gen]) -> Vec<Check> {
    gens.iter()
        .map(|&g| {
            Check::from_residual(
                format!("coassociativity-{g}"),
                COASSOC,
                coassociativity_residual(hopf, g).len(),
            )
        })
        .collect()
}

/// `Δ(x)Δ(y) - s·Δ(y)Δ(x) - Σ c_k Δ(z_k)` for the bracket `[x, y]`.
fn bracket_residual(hopf: &TwistedHopf, x: Gen, y: Gen) -> Result<TensorElement, Error> {
    let u = hopf.alg;
    let d = &hopf.coproduct;
    let sign = if x.is_odd() && y.is_odd() {
        rat(1, 1)
    } else {
        rat(-1, 1)
    };
    let mut res = u
        .tmul(&d[&x], &d[&y])
        .add(&u.tmul(&d[&y], &d[&x]).scale(&sign));
    for (z, c) in u.presentation().bracket(x, y)? {
        res = res.sub(&d[&z].scale(&c));
    }
    Ok(res)
}

fn bracket_check(hopf: &TwistedHopf, x: Gen, y: Gen) -> Result<Check, Error> {
    Ok(Check::from_residual(
        format!("coproduct-bracket-{x}-{y}"),
        HOMOMORPHISM,
        bracket_residual(hopf, x, y)?.len(),
    ))
}

fn hopf_gl2(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let u = Enveloping::new(gl2());
    let gens = u.presentation().generators().to_vec();
    let hopf = hopf_at(&u, cfg.rank2_order(), cfg)?;
    let mut out = match_gl2_closed_forms(&hopf);
    out.extend(antipode_axioms(&hopf, &gens));
    out.push(bracket_check(&hopf, Gen::Xp, Gen::Xm)?);
    out.push(bracket_check(&hopf, Gen::H, Gen::Xm)?);
    let hopf3 = hopf_at(&u, cfg.rank3_order(), cfg)?;
    out.extend(coassociativity(&hopf3, &gens));
    Ok(out)
}

fn hopf_sl12(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let u = Enveloping::new(sl12());
    let n = cfg.rank2_order();
    let hopf = hopf_at(&u, n, cfg)?;
    let mut out = match_odd_closed_forms(&hopf);
    out.extend(antipode_axioms(&hopf, &Gen::ALL));
    out.push(bracket_check(&hopf, Gen::Vbp, Gen::Vm)?);
    out.push(bracket_check(&hopf, Gen::Xp, Gen::Vm)?);
    let ug = Enveloping::new(gl2());
    let hg = hopf_at(&ug, n, cfg)?;
    let mut diff = 0;
    for g in ug.presentation().generators() {
        diff += hopf.coproduct[g].sub(&hg.coproduct[g]).len();
        diff += hopf.antipode[g].sub(&hg.antipode[g]).len();
    }
    out.push(Check::from_residual(
        "gl2-restriction",
        "on gl(2) the sl(1/2) Hopf maps reduce to the gl(2) ones",
        diff,
    ));
    let hopf3 = hopf_at(&u, cfg.rank3_order(), cfg)?;
    out.extend(coassociativity(&hopf3, &[Gen::Vbp, Gen::Vm]));
    Ok(out)
}

fn rmatrix_universal(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let u = Enveloping::new(sl12());
    let n = cfg.rank2_order();
    let rv = match cfg.mutation {
        Some(Mutation::DropZSigma) => RVariant::DropZSigma,
        _ => RVariant::Standard,
    };
    let tw = build_twist_variant(&u, n, twist_variant(cfg))?;
    let a = r_from_twist(&u, &tw);
    let b = r_closed_form(&u, n, rv)?;
    let mut out = vec![Check::from_residual(
        "r-two-routes",
        TWO_ROUTES,
        a.r.sub(&b.r).len(),
    )];
    let hopf = TwistedHopf::new(&u, tw)?;
    out.extend(verify_r_properties(&hopf, &a, &Gen::ALL, n));
    let n3 = cfg.rank3_order();
    let hopf3 = hopf_at(&u, n3, cfg)?;
    let r3 = r_from_twist(&u, &hopf3.twist);
    out.extend(verify_hexagons(&hopf3, &r3, n3));
    Ok(out)
}

/// Exact `R` on the selected representation, mutated if asked.
fn exact_r(cfg: &SuiteConfig, rep: &Rep) -> Result<Matrix, Error> {
    let r = r_matrix_exact(rep)?;
    Ok(match cfg.mutation {
        Some(Mutation::FlipRbar) => mutate_rbar_entry(&r),
        _ => r,
    })
}

fn rmatrix_fundamental(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let rep = rep_by_name(&cfg.rep)?;
    let r = exact_r(cfg, &rep)?;
    let (h, g) = (cfg.h.as_ref(), cfg.g.as_ref());
    let super_rep = is_superalgebra_rep(&rep);
    let mut out = Vec::new();
    if super_rep {
        out.extend(fundamental_block_checks_at(&r.specialize(h, g), h, g)?);
    }
    let pres = if super_rep { sl12() } else { gl2() };
    out.push(rep.representation_check(&pres)?);
    let u = Enveloping::new(pres);
    let n = cfg.rank2_order();
    let series = rep.evaluate_tensor(&r_from_twist(&u, &build_twist(&u, n)?).r)?;
    out.push(
        Check::from_residual(
            "r-series-matches-exact",
            "universal R evaluated in the representation",
            series.truncate(n).sub(&r.truncate(n)).nonzero_count(),
        )
        .with_detail(format!("{} up to total degree {n}", rep.name)),
    );
    Ok(out)
}

fn ybe(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let rep = rep_by_name(&cfg.rep)?;
    let r = exact_r(cfg, &rep)?.specialize(cfg.h.as_ref(), cfg.g.as_ref());
    let mut out = verify_graded_ybe(&r, &rep.space);
    if is_superalgebra_rep(&rep) {
        let rbar = RBlocks::extract(&r).rbar;
        out.extend(
            verify_graded_ybe(&rbar, &GradedSpace::even(2))
                .into_iter()
                .map(|mut c| {
                    c.name = format!("rbar-{}", c.name);
                    c
                }),
        );
    }
    Ok(out)
}

fn jordanian(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let u = Enveloping::new(gl2());
    let hopf = hopf_at(&u, cfg.rank2_order(), cfg)?;
    Ok(jordanian_check(&hopf))
}

fn frt_relations_for(cfg: &SuiteConfig) -> Result<RelationSet, Error> {
    let rep = derive_fundamental_rep()?;
    derive_rmm_relations(&exact_r(cfg, &rep)?, RttSigns::Operator)
}

/// Number of ordered words of length `n` in `even` commuting and `odd`
/// anticommuting letters.
fn pbw_dimension(even: usize, odd: usize, n: usize) -> usize {
    let multichoose = |k: usize, m: usize| -> usize {
        // C(k + m - 1, m)
        (0..m).fold(1, |acc, i| acc * (k + i) / (i + 1))
    };
    let choose = |k: usize, m: usize| -> usize {
        if m > k {
            0
        } else {
            (0..m).fold(1, |acc, i| acc * (k - i) / (i + 1))
        }
    };
    (0..=n.min(odd))
        .map(|j| multichoose(even, n - j) * choose(odd, j))
        .sum()
}

fn frt_relations(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let rels = frt_relations_for(cfg)?;
    let rep = derive_fundamental_rep()?;
    let plain = derive_rmm_relations(&exact_r(cfg, &rep)?, RttSigns::Plain)?;
    let sys = rels.rewrite_system();
    let mut out = vec![Check::from_bool(
        "rtt-conventions-agree",
        "R M1 M2 = M2 M1 R with graded tensor embeddings",
        plain.relations == rels.relations,
    )
    .with_detail(format!("{} relations", rels.len()))];
    for n in [2, 3] {
        let got = sys.normal_words(n).len();
        let want = pbw_dimension(5, 4, n);
        out.push(
            Check::from_residual(
                format!("pbw-dimension-{n}"),
                "ordered monomials span with odd letters at most once",
                got.abs_diff(want),
            )
            .with_detail(format!("{got} normal words, PBW count {want}")),
        );
    }
    out.push(
        Check::from_residual(
            "confluence",
            "every overlap of the quadratic rewriting system resolves",
            sys.confluence_failures().len(),
        )
        .with_detail(format!("{} overlaps", sys.overlap_count())),
    );
    let mutation = match cfg.mutation {
        Some(Mutation::DropThetaSign) => BlockMutation::DropThetaSign,
        _ => BlockMutation::None,
    };
    out.extend(cross_check_block_relations(&rels, mutation));
    out.push(rels.classical_limit_check());
    Ok(out)
}

fn frt_det(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let rels = frt_relations_for(cfg)?;
    Ok(det_t_checks(&rels.rewrite_system(), cfg.budget))
}

fn frt_sdet(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let rels = frt_relations_for(cfg)?;
    let loc = Localization::new(rels.rewrite_system())?;
    let mut out = hopf::straightening_checks(&loc, &rels, cfg.budget);
    out.extend(hopf::sdet_checks(&loc, cfg.budget));
    Ok(out)
}

fn frt_inverse(cfg: &SuiteConfig) -> Result<Vec<Check>, Error> {
    let rels = frt_relations_for(cfg)?;
    let loc = Localization::new(rels.rewrite_system())?;
    Ok(hopf::inverse_checks(&loc, &rels, cfg.budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pbw_counts() {
        assert_eq!(pbw_dimension(5, 4, 1), 9);
        assert_eq!(pbw_dimension(5, 4, 2), 41);
        assert_eq!(pbw_dimension(5, 4, 3), 129);
    }
}
