//! `detT = ad - bc - (h+g)ac` and its commutators with the entries of `M`.

use super::localize::{solve_conjugation, GenMap};
use super::poly::{FrtGen, NcPoly};
use super::rewrite::{Budget, RewriteSystem};
use crate::report::Check;
use crate::scalars::{rat, PolyHG};
use crate::Error;

use FrtGen::*;

const TABLE: &str = "commutators of the generators with detT";
const H_FREE: &str = "noncommutativity with detT is independent of h";

pub fn det_t() -> NcPoly {
    let (h, g) = (PolyHG::h(), PolyHG::g());
    NcPoly::gens(&[A, D])
        .sub(&NcPoly::gens(&[B, C]))
        .sub(&NcPoly::gens(&[A, C]).scale_poly(&(&h + &g)))
}

fn two_g() -> PolyHG {
    PolyHG::g().scale(&rat(2, 1))
}

/// `[x, detT]` as printed, with products left unreduced.
pub fn printed_commutator(x: FrtGen) -> NcPoly {
    let det = det_t();
    let times = |l: FrtGen| NcPoly::gen(l).concat(&det).scale_poly(&two_g());
    match x {
        E | Xi | Delta | C => NcPoly::zero(),
        Eta => times(Xi).neg(),
        Gamma => times(Delta),
        A => times(C),
        // [detT, d] = 2g c detT
        D => times(C).neg(),
        B => det
            .concat(&NcPoly::gen(D))
            .sub(&NcPoly::gen(A).concat(&det))
            .scale_poly(&two_g()),
    }
}

/// `x·u - u·x` in normal form.
pub fn commutator(
    sys: &RewriteSystem,
    budget: Budget,
    u: &NcPoly,
    x: FrtGen,
) -> Result<NcPoly, Error> {
    let mut r = sys.reducer(budget);
    let l = r.mul(&NcPoly::gen(x), u)?;
    let rr = r.mul(u, &NcPoly::gen(x))?;
    Ok(l.sub(&rr))
}

/// Generators whose commutator `[x, detT] = detT·(φ(x) - x)` has a
/// coefficient that depends on `h` or lacks a factor `g`.
pub fn h_dependent_commutators(phi: &GenMap) -> Vec<FrtGen> {
    FrtGen::ALL
        .iter()
        .copied()
        .filter(|&x| {
            !phi.image(x)
                .sub(&NcPoly::gen(x))
                .coefficients()
                .all(|c| c.is_h_free() && c.is_divisible_by_g())
        })
        .collect()
}

pub fn det_t_checks(sys: &RewriteSystem, budget: Budget) -> Vec<Check> {
    let mut out = Vec::new();
    let det = det_t();
    for x in FrtGen::ALL {
        let name = format!("commutator-{x}");
        let got = commutator(sys, budget, &det, x).and_then(|c| {
            let want = sys.reducer(budget).normal_form(&printed_commutator(x))?;
            Ok((c, want))
        });
        match got {
            Ok((c, want)) => {
                out.push(
                    Check::from_residual(name, TABLE, c.sub(&want).len())
                        .with_detail(format!("[{x}, detT] = {c}")),
                );
            }
            Err(e) => out.push(Check::inconclusive(name, TABLE, e.to_string())),
        }
    }
    out.push(match solve_conjugation(sys, &sys.nf(&det)) {
        Ok(phi) => {
            let bad = h_dependent_commutators(&phi);
            Check::from_residual("commutators-h-free", H_FREE, bad.len())
                .with_detail(format!("x detT = detT phi(x) with {phi}"))
        }
        Err(e) => Check::from_residual("commutators-h-free", H_FREE, 1).with_detail(e.to_string()),
    });
    let zero = rat(0, 1);
    let sys0 = sys.specialize(None, Some(&zero));
    let det0 = det.specialize(None, Some(&zero));
    let central = FrtGen::ALL
        .iter()
        .map(|&x| commutator(&sys0, budget, &det0, x).map(|c| c.len()))
        .collect::<Result<Vec<_>, _>>();
    out.push(match central {
        Ok(res) => Check::from_residual(
            "central-at-g0",
            "detT is central in the one-parameter case",
            res.iter().sum(),
        ),
        Err(e) => Check::inconclusive(
            "central-at-g0",
            "detT is central in the one-parameter case",
            e.to_string(),
        ),
    });
    out
}
