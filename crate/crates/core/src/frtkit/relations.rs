//! Entry relations of `M` from the graded RTT equation `R M₁M₂ = M₂M₁ R`.

use serde::Serialize;

use super::linalg::Rref;
use super::poly::{FrtGen, NcPoly, TermJson, Word};
use super::rewrite::RewriteSystem;
use crate::report::Check;
use crate::representations::Matrix;
use crate::scalars::{rat, PolyHG, RatFun};
use crate::Error;

/// Sign convention for `M₁ = M⊗1`, `M₂ = 1⊗M` as operators on `V⊗V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RttSigns {
    /// `M = Σ E_ij ⊗ t_ij` in `End(V) ⊗ A` with every Koszul sign of the
    /// graded tensor product and of `E_kl` acting past `e_j`.
    #[default]
    Operator,
    /// Only the sign of two odd entries in `M₁M₂`.
    Plain,
}

fn parity_of(i: usize) -> u8 {
    u8::from(i > 0)
}

fn t(i: usize, j: usize) -> FrtGen {
    FrtGen::at(i, j)
}

fn sign(e: u8) -> PolyHG {
    if e.is_multiple_of(2) {
        PolyHG::one()
    } else {
        PolyHG::int(-1)
    }
}

/// `(R M₁M₂ - M₂M₁ R)_{(ik),(jl)}` for all 81 index quadruples.
pub fn rtt_equations(r: &Matrix, conv: RttSigns) -> Vec<NcPoly> {
    let mut out = Vec::new();
    let p = |a: usize, b: usize| t(a, b).parity();
    for i in 0..3 {
        for k in 0..3 {
            for j in 0..3 {
                for l in 0..3 {
                    let mut eq = NcPoly::zero();
                    for m in 0..3 {
                        for q in 0..3 {
                            let c = r.get(3 * i + k, 3 * m + q);
                            if c.is_zero() {
                                continue;
                            }
                            let s = match conv {
                                RttSigns::Operator => p(m, j) * p(q, l) + p(q, l) * parity_of(j),
                                RttSigns::Plain => p(m, j) * p(q, l),
                            };
                            eq.add_term(Word(vec![t(m, j), t(q, l)]), &(c * &sign(s)));
                        }
                    }
                    for n in 0..3 {
                        for q in 0..3 {
                            let c = r.get(3 * n + q, 3 * j + l);
                            if c.is_zero() {
                                continue;
                            }
                            let s = match conv {
                                RttSigns::Operator => p(k, q) * parity_of(n),
                                RttSigns::Plain => 0,
                            };
                            eq.add_term(Word(vec![t(k, q), t(i, n)]), &(-(c * &sign(s))));
                        }
                    }
                    if !eq.is_zero() {
                        out.push(eq);
                    }
                }
            }
        }
    }
    out
}

/// All words of length 2, largest first.
pub fn quadratic_words_desc() -> Vec<Word> {
    let mut ws: Vec<Word> = FrtGen::ALL
        .iter()
        .flat_map(|&a| FrtGen::ALL.iter().map(move |&b| Word(vec![a, b])))
        .collect();
    ws.sort();
    ws.reverse();
    ws
}

/// Row-reduce homogeneous quadratic relations with the largest word as pivot.
pub fn quadratic_rref(rels: &[NcPoly]) -> Rref {
    let cols = quadratic_words_desc();
    let m = rels
        .iter()
        .map(|p| cols.iter().map(|w| RatFun::from_poly(p.coeff(w))).collect())
        .collect();
    Rref::new(m, cols.len())
}

/// One oriented relation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: NcPoly,
}

impl Relation {
    /// `lhs - rhs`.
    pub fn as_poly(&self) -> NcPoly {
        NcPoly::word(self.lhs.clone()).sub(&self.rhs)
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationJson {
    pub lhs: Vec<String>,
    pub rhs: Vec<TermJson>,
}

/// Independent generating set of the quadratic relations.
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
    /// Nonzero entry equations before elimination.
    pub equations: usize,
    pub convention: RttSigns,
}

impl RelationSet {
    /// Orient an arbitrary set of quadratic relations by elimination.
    pub fn from_polys(polys: &[NcPoly], convention: RttSigns) -> Result<Self, Error> {
        let cols = quadratic_words_desc();
        let rref = quadratic_rref(polys);
        let mut relations = Vec::new();
        for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
            let lhs = cols[p].clone();
            let mut rhs = NcPoly::zero();
            for (c, w) in row.iter().zip(&cols) {
                if *w == lhs || c.is_zero() {
                    continue;
                }
                let c = c.as_poly().ok_or_else(|| {
                    Error::Inconsistent(format!("relation for {lhs} has coefficient {c}"))
                })?;
                if w.parity() != lhs.parity() {
                    return Err(Error::Inconsistent(format!(
                        "relation for {lhs} mixes parities"
                    )));
                }
                rhs.add_term(w.clone(), &-c.clone());
            }
            relations.push(Relation { lhs, rhs });
        }
        Ok(Self {
            relations,
            equations: polys.len(),
            convention,
        })
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn polys(&self) -> Vec<NcPoly> {
        self.relations.iter().map(Relation::as_poly).collect()
    }

    pub fn rewrite_system(&self) -> RewriteSystem {
        RewriteSystem::from_rules(
            self.relations
                .iter()
                .map(|r| ((r.lhs.0[0], r.lhs.0[1]), r.rhs.clone())),
        )
    }

    /// Relations whose `h = g = 0` limit is not `y x = ±x y` (or `x x = 0`).
    pub fn classical_limit_residual(&self) -> usize {
        let zero = rat(0, 1);
        self.relations
            .iter()
            .filter(|r| {
                let (y, x) = (r.lhs.0[0], r.lhs.0[1]);
                let expect = if y == x {
                    NcPoly::zero()
                } else {
                    let s = if y.is_odd() && x.is_odd() { -1 } else { 1 };
                    NcPoly::word(Word(vec![x, y])).scale(&rat(s, 1))
                };
                r.rhs.specialize(Some(&zero), Some(&zero)) != expect
            })
            .count()
    }

    pub fn classical_limit_check(&self) -> Check {
        Check::from_residual(
            "classical-limit",
            "the undeformed algebra is supercommutative",
            self.classical_limit_residual(),
        )
    }

    pub fn to_json(&self) -> Vec<RelationJson> {
        self.relations
            .iter()
            .map(|r| RelationJson {
                lhs: r.lhs.0.iter().map(|g| g.name().to_string()).collect(),
                rhs: r.rhs.to_json(),
            })
            .collect()
    }
}

/// Expand `R M₁M₂ = M₂M₁ R` and eliminate to an independent oriented set.
pub fn derive_rmm_relations(r: &Matrix, conv: RttSigns) -> Result<RelationSet, Error> {
    let eqs = rtt_equations(r, conv);
    RelationSet::from_polys(&eqs, conv)
}
