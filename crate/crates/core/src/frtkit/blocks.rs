//! The nine printed block relations of `M`, expanded into entry relations,
//! and the two-way comparison with a derived relation set.

use super::linalg::Rref;
use super::poly::{FrtGen, NcPoly};
use super::relations::{quadratic_rref, quadratic_words_desc, RelationSet};
use crate::report::Check;
use crate::representations::{rbar_block, rcheck_block, Matrix};
use crate::scalars::RatFun;

use FrtGen::*;

/// Matrix with noncommutative entries.
type PMat = Vec<Vec<NcPoly>>;

fn w(x: FrtGen, y: FrtGen) -> NcPoly {
    NcPoly::gens(&[x, y])
}

fn lmul(s: &Matrix, m: &PMat) -> PMat {
    (0..s.rows())
        .map(|i| {
            (0..m[0].len())
                .map(|j| {
                    let mut acc = NcPoly::zero();
                    for (k, row) in m.iter().enumerate() {
                        acc = acc.add(&row[j].scale_poly(s.get(i, k)));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn rmul(m: &PMat, s: &Matrix) -> PMat {
    m.iter()
        .map(|row| {
            (0..s.cols())
                .map(|j| {
                    let mut acc = NcPoly::zero();
                    for (k, x) in row.iter().enumerate() {
                        acc = acc.add(&x.scale_poly(s.get(k, j)));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn neg(m: &PMat) -> PMat {
    m.iter()
        .map(|r| r.iter().map(NcPoly::neg).collect())
        .collect()
}

fn equate(l: &PMat, r: &PMat) -> Vec<NcPoly> {
    l.iter()
        .flatten()
        .zip(r.iter().flatten())
        .map(|(a, b)| a.sub(b))
        .filter(|p| !p.is_zero())
        .collect()
}

fn transpose(m: &PMat) -> PMat {
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Reorder a 4-index `(11, 12, 21, 22)` as `(11, 21, 12, 22)`.
const SWAP4: [usize; 4] = [0, 2, 1, 3];

fn permute_rows(m: &PMat, p: &[usize]) -> PMat {
    p.iter().map(|&i| m[i].clone()).collect()
}

fn permute_cols(m: &PMat, p: &[usize]) -> PMat {
    m.iter()
        .map(|r| p.iter().map(|&j| r[j].clone()).collect())
        .collect()
}

fn t_entry(i: usize, j: usize) -> FrtGen {
    FrtGen::at(i + 1, j + 1)
}

/// One reading of a printed block.
#[derive(Clone, Debug)]
pub struct BlockVariant {
    pub label: &'static str,
    pub relations: Vec<NcPoly>,
}

#[derive(Clone, Debug)]
pub struct Block {
    pub name: &'static str,
    pub printed: &'static str,
    pub variants: Vec<BlockVariant>,
}

fn v(label: &'static str, relations: Vec<NcPoly>) -> BlockVariant {
    BlockVariant { label, relations }
}

/// Mutations applied to the printed blocks to show the cross-check can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BlockMutation {
    #[default]
    None,
    /// `R̄(γΘ; δΘ) = +(Θγ; Θδ)`.
    DropThetaSign,
}

/// The nine block equations with every arrangement considered.
pub fn printed_blocks(mutation: BlockMutation) -> Vec<Block> {
    let rc = rcheck_block();
    let rb = rbar_block();
    let psi = [Xi, Eta];
    let theta = [Gamma, Delta];
    let mut out = Vec::new();

    // eΨ = ΨeŘ
    let l = vec![vec![w(E, Xi), w(E, Eta)]];
    let r = rmul(&vec![vec![w(Xi, E), w(Eta, E)]], &rc);
    out.push(Block {
        name: "e-psi",
        printed: "e Psi = Psi e Rcheck",
        variants: vec![v("row", equate(&l, &r))],
    });

    // ŘeΘ = Θe
    let l = lmul(&rc, &vec![vec![w(E, Gamma)], vec![w(E, Delta)]]);
    let r = vec![vec![w(Gamma, E)], vec![w(Delta, E)]];
    out.push(Block {
        name: "e-theta",
        printed: "Rcheck e Theta = Theta e",
        variants: vec![v("column", equate(&l, &r))],
    });

    // ŘeT = TeŘ
    let et: PMat = (0..2)
        .map(|i| (0..2).map(|j| w(E, t_entry(i, j))).collect())
        .collect();
    let te: PMat = (0..2)
        .map(|i| (0..2).map(|j| w(t_entry(i, j), E)).collect())
        .collect();
    out.push(Block {
        name: "e-t",
        printed: "Rcheck e T = T e Rcheck",
        variants: vec![v("matrix", equate(&lmul(&rc, &et), &rmul(&te, &rc)))],
    });

    // (ξΨ ηΨ) = -(Ψξ Ψη)R̄
    let l: PMat = vec![psi
        .iter()
        .flat_map(|&x| psi.iter().map(move |&y| w(x, y)))
        .collect()];
    let r: PMat = vec![psi
        .iter()
        .flat_map(|&x| psi.iter().map(move |&y| w(y, x)))
        .collect()];
    out.push(Block {
        name: "psi-psi",
        printed: "(xi Psi  eta Psi) = -(Psi xi  Psi eta) Rbar",
        variants: vec![
            v("as printed", equate(&l, &neg(&rmul(&r, &rb)))),
            v(
                "swapped tensor order",
                equate(
                    &permute_cols(&l, &SWAP4),
                    &neg(&rmul(&permute_cols(&r, &SWAP4), &rb)),
                ),
            ),
        ],
    });

    // R̄(γΘ; δΘ) = -(Θγ; Θδ)
    let l: PMat = theta
        .iter()
        .flat_map(|&x| theta.iter().map(move |&y| vec![w(x, y)]))
        .collect();
    let r: PMat = theta
        .iter()
        .flat_map(|&x| theta.iter().map(move |&y| vec![w(y, x)]))
        .collect();
    let sgn = |m: PMat| match mutation {
        BlockMutation::DropThetaSign => m,
        BlockMutation::None => neg(&m),
    };
    out.push(Block {
        name: "theta-theta",
        printed: "Rbar (gamma Theta; delta Theta) = -(Theta gamma; Theta delta)",
        variants: vec![
            v("as printed", equate(&lmul(&rb, &l), &sgn(r.clone()))),
            v(
                "swapped tensor order",
                equate(
                    &lmul(&rb, &permute_rows(&l, &SWAP4)),
                    &sgn(permute_rows(&r, &SWAP4)),
                ),
            ),
        ],
    });

    // Ř(ξΘ ηΘ)Ř = -(γΨ; δΨ)
    let xt: PMat = theta
        .iter()
        .map(|&th| psi.iter().map(|&p| w(p, th)).collect())
        .collect();
    let tp: PMat = theta
        .iter()
        .map(|&th| psi.iter().map(|&p| w(th, p)).collect())
        .collect();
    let lhs = |m: &PMat| lmul(&rc, &rmul(m, &rc));
    out.push(Block {
        name: "psi-theta",
        printed: "Rcheck (xi Theta  eta Theta) Rcheck = -(gamma Psi; delta Psi)",
        variants: vec![
            v("columns Theta, rows Psi", equate(&lhs(&xt), &neg(&tp))),
            v(
                "transposed left side",
                equate(&lhs(&transpose(&xt)), &neg(&tp)),
            ),
            v(
                "transposed right side",
                equate(&lhs(&xt), &neg(&transpose(&tp))),
            ),
            v(
                "both transposed",
                equate(&lhs(&transpose(&xt)), &neg(&transpose(&tp))),
            ),
        ],
    });

    // R̄(γT; δT) = (Tγ; Tδ)Ř
    let th_t: PMat = theta
        .iter()
        .flat_map(|&th| (0..2).map(move |i| (0..2).map(|j| w(th, t_entry(i, j))).collect()))
        .collect();
    let t_th: PMat = theta
        .iter()
        .flat_map(|&th| (0..2).map(move |i| (0..2).map(|j| w(t_entry(i, j), th)).collect()))
        .collect();
    out.push(Block {
        name: "theta-t",
        printed: "Rbar (gamma T; delta T) = (T gamma; T delta) Rcheck",
        variants: vec![
            v("as printed", equate(&lmul(&rb, &th_t), &rmul(&t_th, &rc))),
            v(
                "swapped tensor order",
                equate(
                    &lmul(&rb, &permute_rows(&th_t, &SWAP4)),
                    &rmul(&permute_rows(&t_th, &SWAP4), &rc),
                ),
            ),
        ],
    });

    // Ř(ξT ηT) = (Tξ Tη)R̄
    let p_t: PMat = (0..2)
        .map(|i| {
            psi.iter()
                .flat_map(|&p| (0..2).map(move |j| w(p, t_entry(i, j))))
                .collect()
        })
        .collect();
    let t_p: PMat = (0..2)
        .map(|i| {
            psi.iter()
                .flat_map(|&p| (0..2).map(move |j| w(t_entry(i, j), p)))
                .collect()
        })
        .collect();
    out.push(Block {
        name: "psi-t",
        printed: "Rcheck (xi T  eta T) = (T xi  T eta) Rbar",
        variants: vec![
            v("as printed", equate(&lmul(&rc, &p_t), &rmul(&t_p, &rb))),
            v(
                "swapped tensor order",
                equate(
                    &lmul(&rc, &permute_cols(&p_t, &SWAP4)),
                    &rmul(&permute_cols(&t_p, &SWAP4), &rb),
                ),
            ),
        ],
    });

    // R̄T₁T₂ = T₂T₁R̄
    let idx = [(0, 0), (0, 1), (1, 0), (1, 1)];
    let t1t2: PMat = idx
        .iter()
        .map(|&(i, k)| {
            idx.iter()
                .map(|&(j, l)| w(t_entry(i, j), t_entry(k, l)))
                .collect()
        })
        .collect();
    let t2t1: PMat = idx
        .iter()
        .map(|&(i, k)| {
            idx.iter()
                .map(|&(j, l)| w(t_entry(k, l), t_entry(i, j)))
                .collect()
        })
        .collect();
    out.push(Block {
        name: "t-t",
        printed: "Rbar T1 T2 = T2 T1 Rbar",
        variants: vec![v(
            "as printed",
            equate(&lmul(&rb, &t1t2), &rmul(&t2t1, &rb)),
        )],
    });
    out
}

fn rows_of(polys: &[NcPoly]) -> Vec<Vec<RatFun>> {
    let cols = quadratic_words_desc();
    polys
        .iter()
        .map(|p| cols.iter().map(|w| RatFun::from_poly(p.coeff(w))).collect())
        .collect()
}

const ANCHOR: &str = "printed block relations of M are equivalent to the derived RMM relations";

/// For every block, the first reading whose relations lie in the derived
/// span; then whether the chosen readings together span the derived set.
pub fn cross_check_block_relations(derived: &RelationSet, mutation: BlockMutation) -> Vec<Check> {
    let span = quadratic_rref(&derived.polys());
    let mut chosen: Vec<NcPoly> = Vec::new();
    let mut checks = Vec::new();
    for block in printed_blocks(mutation) {
        let hit = block
            .variants
            .iter()
            .find(|var| rows_of(&var.relations).iter().all(|r| span.contains(r)));
        let name = format!("block-{}", block.name);
        match hit {
            Some(var) => {
                chosen.extend(var.relations.iter().cloned());
                checks.push(
                    Check::from_residual(name, ANCHOR, 0)
                        .with_detail(format!("{}: reading '{}'", block.printed, var.label)),
                );
            }
            None => {
                let best = block
                    .variants
                    .iter()
                    .map(|var| {
                        rows_of(&var.relations)
                            .iter()
                            .filter(|r| !span.contains(r))
                            .count()
                    })
                    .min()
                    .unwrap_or(0);
                checks.push(
                    Check::from_residual(name, ANCHOR, best.max(1)).with_detail(format!(
                        "{}: no reading follows from the derived set",
                        block.printed
                    )),
                );
            }
        }
    }
    let printed_span = Rref::new(rows_of(&chosen), quadratic_words_desc().len());
    let missing = rows_of(&derived.polys())
        .iter()
        .filter(|r| !printed_span.contains(r))
        .count();
    checks.push(
        Check::from_residual("blocks-imply-derived", ANCHOR, missing).with_detail(format!(
            "printed rank {} / derived rank {}",
            printed_span.rank(),
            span.rank()
        )),
    );
    checks
}
