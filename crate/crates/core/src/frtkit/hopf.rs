//! Superdeterminant, `M⁻¹`, and the Hopf maps `Δ(M) = M⊗M`, `ε(M) = I₃`,
//! `S(M) = M⁻¹` on the localized algebra.

use std::collections::BTreeMap;

use serde::Serialize;

use super::localize::{GenMap, Loc, LocCtx, Localization, PSI, THETA};
use super::poly::{FrtGen, NcPoly, Word};
use super::relations::RelationSet;
use super::rewrite::{Budget, RewriteSystem};
use crate::report::Check;
use crate::scalars::{rat, PolyHG};
use crate::Error;

use FrtGen::*;

type LMat = Vec<Vec<Loc>>;

const SDET: &str = "sdetM = detT^-1 (e - Psi T^-1 Theta) commutes with all elements";
const BEREZIN: &str = "sdetM has the same form as the undeformed Berezinian";
const INVERSE: &str = "inverse matrix of M as a three-factor product";
const COPRODUCT: &str = "Delta(M) = M (x) M, eps(M) = I3";
const ANTIPODE: &str = "S(M) = M^-1 with sdetM = 1";

fn inconclusive_or(name: &str, anchor: &str, r: Result<usize, Error>) -> Check {
    match r {
        Ok(n) => Check::from_residual(name, anchor, n),
        Err(e @ Error::BudgetExhausted) => Check::inconclusive(name, anchor, e.to_string()),
        Err(e) => Check::from_residual(name, anchor, 1).with_detail(e.to_string()),
    }
}

pub fn m_matrix() -> LMat {
    (0..3)
        .map(|i| (0..3).map(|j| Localization::m_entry(i, j)).collect())
        .collect()
}

/// `T⁻¹Θ` (column) and `ΨT⁻¹` (row).
fn t_inv_theta_psi(ctx: &mut LocCtx<'_>) -> Result<([Loc; 2], [Loc; 2]), Error> {
    let ti = ctx.loc.t_inverse();
    let mut col = [Loc::zero(), Loc::zero()];
    let mut row = [Loc::zero(), Loc::zero()];
    for k in 0..2 {
        for l in 0..2 {
            col[k] = col[k].add(&ctx.mul(&ti[k][l], &Loc::gen(THETA[l]))?);
            row[l] = row[l].add(&ctx.mul(&Loc::gen(PSI[k]), &ti[k][l])?);
        }
    }
    Ok((col, row))
}

/// `e - ΨT⁻¹Θ`.
pub fn schur_complement(ctx: &mut LocCtx<'_>) -> Result<Loc, Error> {
    let (col, _) = t_inv_theta_psi(ctx)?;
    let mut s = Loc::gen(E);
    for (k, &p) in PSI.iter().enumerate() {
        s = s.sub(&ctx.mul(&Loc::gen(p), &col[k])?);
    }
    Ok(s)
}

pub fn sdet(ctx: &mut LocCtx<'_>) -> Result<Loc, Error> {
    let s = schur_complement(ctx)?;
    ctx.mul(&Loc::det_inv(), &s)
}

/// `(e - ΨT⁻¹Θ)⁻¹ = detT·ω⁻¹`.
pub fn schur_inverse(loc: &Localization) -> Loc {
    Loc::term(loc.det.clone(), 0, 1)
}

/// `[[1,0],[-T⁻¹Θ,I]]·diag(s, T⁻¹)·[[1,-ΨT⁻¹],[0,I]]` with `s` in the corner.
pub fn m_inverse_with(ctx: &mut LocCtx<'_>, s: &Loc) -> Result<LMat, Error> {
    let (col, row) = t_inv_theta_psi(ctx)?;
    let ti = ctx.loc.t_inverse();
    let z = Loc::zero;
    let o = Loc::one;
    let lower = vec![
        vec![o(), z(), z()],
        vec![col[0].neg(), o(), z()],
        vec![col[1].neg(), z(), o()],
    ];
    let middle = vec![
        vec![s.clone(), z(), z()],
        vec![z(), ti[0][0].clone(), ti[0][1].clone()],
        vec![z(), ti[1][0].clone(), ti[1][1].clone()],
    ];
    let upper = vec![
        vec![o(), row[0].neg(), row[1].neg()],
        vec![z(), o(), z()],
        vec![z(), z(), o()],
    ];
    let lm = ctx.mat_mul(&lower, &middle)?;
    ctx.mat_mul(&lm, &upper)
}

pub fn m_inverse(ctx: &mut LocCtx<'_>) -> Result<LMat, Error> {
    let s = schur_inverse(ctx.loc);
    m_inverse_with(ctx, &s)
}

pub fn sdet_checks(loc: &Localization, budget: Budget) -> Vec<Check> {
    let mut out = Vec::new();
    let mut ctx = loc.ctx(budget);
    let sd = sdet(&mut ctx);
    for x in FrtGen::ALL {
        let name = format!("sdet-commutes-{x}");
        let r = match &sd {
            Ok(sd) => (|| {
                let l = ctx.mul(&Loc::gen(x), sd)?;
                let r = ctx.mul(sd, &Loc::gen(x))?;
                ctx.residual(&l, &r)
            })(),
            Err(Error::BudgetExhausted) => Err(Error::BudgetExhausted),
            Err(e) => Err(Error::NoSolution(e.to_string())),
        };
        out.push(inconclusive_or(&name, SDET, r));
    }
    out.push(berezinian_check(loc, budget));
    out
}

fn specialize_loc(
    loc: &Localization,
    h: &crate::scalars::Rational,
    g: &crate::scalars::Rational,
) -> Localization {
    let s = |p: &NcPoly| p.specialize(Some(h), Some(g));
    Localization {
        sys: loc.sys.specialize(Some(h), Some(g)),
        det: s(&loc.det),
        phi: loc.phi.specialize(Some(h), Some(g)),
        q: [
            [s(&loc.q[0][0]), s(&loc.q[0][1])],
            [s(&loc.q[1][0]), s(&loc.q[1][1])],
        ],
        omega: s(&loc.omega),
        psi: loc.psi.as_ref().map(|p| p.specialize(Some(h), Some(g))),
    }
}

/// At `h = g = 0`: `sdetM = (e - Ψ adj(T) Θ / detT) / detT` with the
/// classical adjugate and determinant.
pub fn berezinian_check(loc: &Localization, budget: Budget) -> Check {
    let zero = rat(0, 1);
    let loc0 = specialize_loc(loc, &zero, &zero);
    let mut ctx = loc0.ctx(budget);
    let r = (|| {
        let sd = sdet(&mut ctx)?;
        let adj = [
            [NcPoly::gen(D), NcPoly::gen(B).neg()],
            [NcPoly::gen(C).neg(), NcPoly::gen(A)],
        ];
        let classical_det = NcPoly::gens(&[A, D]).sub(&NcPoly::gens(&[B, C]));
        let mut inner = NcPoly::zero();
        for (k, &p) in PSI.iter().enumerate() {
            for (l, &th) in THETA.iter().enumerate() {
                inner = inner.add(&NcPoly::gen(p).concat(&adj[k][l]).concat(&NcPoly::gen(th)));
            }
        }
        let inner = ctx.nf(&inner)?;
        let expect = Loc::term(NcPoly::gen(E), 1, 0).sub(&Loc::term(inner, 2, 0));
        let mut n = ctx.residual(&sd, &expect)?;
        n += ctx.nf(&loc0.det)?.sub(&classical_det).len();
        Ok(n)
    })();
    inconclusive_or("berezinian-limit", BEREZIN, r)
}

/// Element of `A ⊗ A` on normal words.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Tensor2 {
    terms: BTreeMap<(Word, Word), PolyHG>,
}

impl Tensor2 {
    fn add_term(&mut self, k: (Word, Word), c: &PolyHG) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(PolyHG::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd`.
    pub fn mul(&self, o: &Tensor2, sys: &RewriteSystem) -> Tensor2 {
        let mut out = Tensor2::default();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &o.terms {
                let s = if b.parity() * c.parity() == 1 { -1 } else { 1 };
                let left = sys.nf(&NcPoly::word(a.concat(c)));
                let right = sys.nf(&NcPoly::word(b.concat(d)));
                let coef = (x * y).scale(&rat(s, 1));
                for (u, p) in left.terms() {
                    for (v, q) in right.terms() {
                        out.add_term((u.clone(), v.clone()), &(&(p * q) * &coef));
                    }
                }
            }
        }
        out
    }
}

/// Sign in `Δ(t_il) = Σ_j ± t_ij ⊗ t_jl`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoproductSigns {
    /// No signs: matrix multiplication.
    Plain,
    /// `-1` when both `t_ij` and `t_jl` are odd.
    OddOdd,
}

impl CoproductSigns {
    pub const ALL: [CoproductSigns; 2] = [CoproductSigns::Plain, CoproductSigns::OddOdd];

    fn sign(self, a: FrtGen, b: FrtGen) -> i64 {
        match self {
            CoproductSigns::Plain => 1,
            CoproductSigns::OddOdd => {
                if a.is_odd() && b.is_odd() {
                    -1
                } else {
                    1
                }
            }
        }
    }
}

pub fn coproduct_gen(x: FrtGen, signs: CoproductSigns) -> Tensor2 {
    let (i, l) = x.position();
    let mut out = Tensor2::default();
    for j in 0..3 {
        let (a, b) = (FrtGen::at(i, j), FrtGen::at(j, l));
        out.add_term(
            (Word(vec![a]), Word(vec![b])),
            &PolyHG::int(signs.sign(a, b)),
        );
    }
    out
}

/// Residual terms of `Δ(r)` summed over the relations.
pub fn coproduct_residual(sys: &RewriteSystem, rels: &RelationSet, signs: CoproductSigns) -> usize {
    let mut total = 0;
    for p in rels.polys() {
        let mut acc = Tensor2::default();
        for (w, c) in p.terms() {
            let mut t = Tensor2::default();
            t.add_term((Word::empty(), Word::empty()), &PolyHG::one());
            for &x in &w.0 {
                t = t.mul(&coproduct_gen(x, signs), sys);
            }
            for (k, v) in t.terms {
                acc.add_term(k, &(&v * c));
            }
        }
        total += acc.len();
    }
    total
}

/// Relations not sent to zero by `ε(t_ij) = δ_ij`.
pub fn counit_residual(rels: &RelationSet) -> usize {
    rels.polys()
        .iter()
        .filter(|p| {
            let mut s = PolyHG::zero();
            for (w, c) in p.terms() {
                if w.0.iter().all(|x| x.position().0 == x.position().1) {
                    s += c;
                }
            }
            !s.is_zero()
        })
        .count()
}

/// Replace `e` by `detT + ΨQφ(Θ)·detT⁻¹`, which is `e` modulo `sdetM - 1`.
fn impose_unit_sdet(ctx: &mut LocCtx<'_>, x: &Loc) -> Result<Loc, Error> {
    let loc = ctx.loc;
    let e_sub = Loc::poly(loc.det.clone()).add(&Loc::term(
        ctx.nf(&NcPoly::gen(E).concat(&loc.det))?.sub(&loc.omega),
        1,
        0,
    ));
    let mut out = Loc::zero();
    for (&(k, m), p) in x.parts() {
        if m > 0 {
            return Err(Error::Inconsistent(
                "w^-1 left after setting sdetM = 1".into(),
            ));
        }
        for (w, c) in p.terms() {
            let mut acc = Loc::one();
            for &g in &w.0 {
                let img = if g == E { e_sub.clone() } else { Loc::gen(g) };
                acc = ctx.mul(&acc, &img)?;
            }
            let acc = ctx.mul(&acc, &Loc::term(NcPoly::one(), k, 0))?;
            out = out.add(&acc.scale_poly(c));
        }
    }
    Ok(out)
}

pub fn inverse_checks(loc: &Localization, rels: &RelationSet, budget: Budget) -> Vec<Check> {
    let mut out = Vec::new();
    let mut ctx = loc.ctx(budget);
    let m = m_matrix();

    // T T⁻¹ = T⁻¹ T = I
    let r = (|| {
        let t: LMat = (1..3)
            .map(|i| (1..3).map(|j| Localization::m_entry(i, j)).collect())
            .collect();
        let ti: LMat = loc.t_inverse().iter().map(|r| r.to_vec()).collect();
        let a = ctx.mat_mul(&t, &ti)?;
        let b = ctx.mat_mul(&ti, &t)?;
        Ok(ctx.identity_residual(&a)? + ctx.identity_residual(&b)?)
    })();
    out.push(
        inconclusive_or(
            "t-inverse",
            "inverse of T exists when detT is invertible",
            r,
        )
        .with_detail(format!(
            "T^-1 = [[{}, {}], [{}, {}]] detT^-1; detT^-1 x = phi(x) detT^-1 with {}",
            loc.q[0][0], loc.q[0][1], loc.q[1][0], loc.q[1][1], loc.phi
        )),
    );

    let minv = m_inverse(&mut ctx);
    for (name, left) in [("m-times-m-inverse", true), ("m-inverse-times-m", false)] {
        let r = match &minv {
            Ok(mi) => (|| {
                let p = if left {
                    ctx.mat_mul(&m, mi)?
                } else {
                    ctx.mat_mul(mi, &m)?
                };
                ctx.identity_residual(&p)
            })(),
            Err(Error::BudgetExhausted) => Err(Error::BudgetExhausted),
            Err(e) => Err(Error::NoSolution(e.to_string())),
        };
        out.push(inconclusive_or(name, INVERSE, r));
    }

    let sys = &loc.sys;
    let mut chosen = None;
    let mut detail = Vec::new();
    for signs in CoproductSigns::ALL {
        let res = coproduct_residual(sys, rels, signs);
        detail.push(format!("{signs:?}: {res}"));
        if res == 0 && chosen.is_none() {
            chosen = Some(signs);
        }
    }
    out.push(
        Check::from_bool("coproduct-homomorphism", COPRODUCT, chosen.is_some())
            .with_detail(detail.join(", ")),
    );
    out.push(Check::from_residual(
        "counit-homomorphism",
        COPRODUCT,
        counit_residual(rels),
    ));

    let r = (|| {
        let s_unit = m_inverse_with(&mut ctx, &Loc::det_inv())?;
        let sd = sdet(&mut ctx)?;
        let unit = impose_unit_sdet(&mut ctx, &sd)?;
        let mut n = ctx.residual(&unit, &Loc::one())?;
        for prod in [ctx.mat_mul(&s_unit, &m)?, ctx.mat_mul(&m, &s_unit)?] {
            for (i, row) in prod.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    let id = if i == j { Loc::one() } else { Loc::zero() };
                    let reduced = impose_unit_sdet(&mut ctx, x)?;
                    n += ctx.residual(&reduced, &id)?;
                }
            }
        }
        Ok(n)
    })();
    out.push(inconclusive_or("antipode-axiom", ANTIPODE, r));
    out
}

fn with_map(c: Check, map: &GenMap) -> Check {
    if c.detail.is_some() {
        c
    } else {
        c.with_detail(map.to_string())
    }
}

/// Residual terms of `φ(r)` and `ψ(r)` over the relations, and of the
/// fixed points `φ(detT) = detT`, `ψ(detT) = detT`, `ψ = φ²`.
pub fn straightening_checks(loc: &Localization, rels: &RelationSet, budget: Budget) -> Vec<Check> {
    const ANCHOR: &str = "the combination e - Psi T^-1 Theta has an inverse";
    let mut out = Vec::new();
    let mut r = loc.sys.reducer(budget);
    let mut auto = |map: &GenMap| -> Result<usize, Error> {
        let mut n = 0;
        for p in rels.polys() {
            n += map.apply(&mut r, &p)?.len();
        }
        n += map.apply(&mut r, &loc.det)?.sub(&loc.det).len();
        Ok(n)
    };
    out.push(with_map(
        inconclusive_or(
            "det-inverse-straightening",
            "detT is invertible",
            auto(&loc.phi),
        ),
        &loc.phi,
    ));
    match &loc.psi {
        Some(psi) => {
            out.push(with_map(
                inconclusive_or("schur-inverse-straightening", ANCHOR, auto(psi)),
                psi,
            ));
            let mut r = loc.sys.reducer(budget);
            let sq = loc.phi.compose(&mut r, &loc.phi);
            out.push(Check::from_bool(
                "schur-straightening-is-phi-squared",
                ANCHOR,
                sq.map(|s| &s == psi).unwrap_or(false),
            ));
        }
        None => out.push(
            Check::from_bool("schur-inverse-straightening", ANCHOR, false)
                .with_detail("no linear straightening rule for omega"),
        ),
    }
    out
}
