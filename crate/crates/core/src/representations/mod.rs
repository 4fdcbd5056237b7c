//! Exact finite-dimensional representations: the fundamental representation
//! of `sl(1/2)`, spin-`j` representations of `gl(2)`, the fundamental 9×9
//! R-matrix and the graded Yang–Baxter equation.

mod matrix;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::enveloping::{Element, Mono, TensorElement};
use crate::report::Check;
use crate::scalars::{rat, PolyHG, Rational};
use crate::superalgebra::{sl12, Gen, Presentation};
use crate::Error;

pub use matrix::{GradedSpace, Matrix};

/// Generator matrices on a graded space.
#[derive(Clone, Debug)]
pub struct Rep {
    pub name: String,
    pub space: GradedSpace,
    pub mats: BTreeMap<Gen, Matrix>,
}

impl Serialize for Rep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct RepJson<'a> {
            name: &'a str,
            parity: &'a [u8],
            matrices: BTreeMap<&'static str, &'a Matrix>,
        }
        RepJson {
            name: &self.name,
            parity: &self.space.parity,
            matrices: self.mats.iter().map(|(g, m)| (g.name(), m)).collect(),
        }
        .serialize(s)
    }
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn get(&self, g: Gen) -> Result<&Matrix, Error> {
        self.mats
            .get(&g)
            .ok_or_else(|| Error::UnknownGenerator(format!("{g} in {}", self.name)))
    }

    /// `ρ([x,y]) - (ρxρy - (-1)^{|x||y|}ρyρx)` for every pair of generators
    /// of `pres`; returns the number of nonzero residual entries per pair.
    pub fn representation_residuals(
        &self,
        pres: &Presentation,
    ) -> Result<Vec<(Gen, Gen, usize)>, Error> {
        let gens = pres.generators();
        let mut out = Vec::new();
        for (i, &x) in gens.iter().enumerate() {
            for &y in &gens[i..] {
                let lhs = self
                    .get(x)?
                    .supercommutator(self.get(y)?, x.parity(), y.parity());
                let mut rhs = Matrix::zero(self.dim(), self.dim());
                for (z, c) in pres.bracket(x, y)? {
                    rhs = rhs.add(&self.get(z)?.scale(&c));
                }
                out.push((x, y, lhs.sub(&rhs).nonzero_count()));
            }
        }
        Ok(out)
    }

    pub fn representation_check(&self, pres: &Presentation) -> Result<Check, Error> {
        let res = self.representation_residuals(pres)?;
        let bad: Vec<String> = res
            .iter()
            .filter(|r| r.2 > 0)
            .map(|(x, y, _)| format!("[{x},{y}]"))
            .collect();
        let total = res.iter().map(|r| r.2).sum();
        let c = Check::from_residual(
            format!("representation-{}", self.name),
            "rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x)",
            total,
        );
        Ok(if bad.is_empty() {
            c.with_detail(format!("{} generator pairs", res.len()))
        } else {
            c.with_detail(format!("failing pairs: {}", bad.join(" ")))
        })
    }

    pub fn mono(&self, m: &Mono) -> Result<Matrix, Error> {
        let mut acc = Matrix::identity(self.dim());
        for g in m.word() {
            acc = acc.mul(self.get(g)?);
        }
        Ok(acc)
    }

    /// Image of an `Element`; coefficients are carried over verbatim.
    pub fn evaluate(&self, x: &Element) -> Result<Matrix, Error> {
        let mut acc = Matrix::zero(self.dim(), self.dim());
        for (m, c) in x.terms() {
            acc = acc.add(&self.mono(m)?.scale_poly(c));
        }
        Ok(acc)
    }

    /// Image of a rank-2 or rank-3 tensor on the ordered tensor basis, with
    /// the Koszul sign of each slot crossing the earlier basis vectors.
    pub fn evaluate_tensor(&self, t: &TensorElement) -> Result<Matrix, Error> {
        let n = self.dim().pow(t.rank() as u32);
        let mut acc = Matrix::zero(n, n);
        for (slots, c) in t.terms() {
            let mut m = self.mono(&slots[0])?;
            let mut space = self.space.clone();
            for s in &slots[1..] {
                m = Matrix::graded_kron(&m, &self.mono(s)?, s.parity(), &space);
                space = space.tensor(&self.space);
            }
            acc = acc.add(&m.scale_poly(c));
        }
        Ok(acc)
    }

    /// Exact image of `σ = -ln(1 - 2hXp)`.
    pub fn sigma(&self) -> Result<Matrix, Error> {
        self.get(Gen::Xp)?
            .scale_poly(&PolyHG::h().scale(&rat(2, 1)))
            .neg_log_one_minus()
    }

    /// Exact image of `σ/2h = Σ (2h)^{k-1} Xp^k / k`.
    pub fn sigma_over_2h(&self) -> Result<Matrix, Error> {
        let xp = self.get(Gen::Xp)?;
        if !xp.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let two_h = PolyHG::h().scale(&rat(2, 1));
        let mut acc = Matrix::zero(self.dim(), self.dim());
        let mut power = Matrix::identity(self.dim());
        for k in 1..=self.dim() as u32 {
            power = power.mul(xp);
            acc = acc.add(&power.scale_poly(&two_h.pow(k - 1)).scale(&rat(1, k as i64)));
        }
        Ok(acc)
    }
}

/// One candidate for the fundamental representation found by the ansatz
/// search, with the support choice that produced it.
#[derive(Clone, Debug)]
pub struct FundamentalCandidate {
    pub rep: Rep,
    pub ansatz: String,
    pub residual: usize,
}

fn odd_units() -> [(usize, usize); 4] {
    [(0, 1), (0, 2), (1, 0), (2, 0)]
}

/// `c` with `c·m = target`, if one exists.
fn solve_multiple(m: &Matrix, target: &Matrix) -> Option<Rational> {
    if m.is_zero() {
        return None;
    }
    let (i, j) = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m.get(i, j).is_zero())?;
    let a = m.get(i, j);
    let b = target.get(i, j);
    if !a.is_h_free() || a.total_degree() != Some(0) || b.total_degree().unwrap_or(0) != 0 {
        return None;
    }
    let c = b.constant_term() / a.constant_term();
    (m.scale(&c) == *target && !c.is_zero()).then_some(c)
}

/// First odd unit `E` and scalar `c` with `op(E)·c = target`.
fn search_unit(
    op: impl Fn(&Matrix) -> Matrix,
    target: &Matrix,
) -> Option<((usize, usize), Rational)> {
    odd_units().into_iter().find_map(|(i, j)| {
        let e = Matrix::unit(3, i, j);
        solve_multiple(&op(&e), target).map(|c| ((i, j), c))
    })
}

/// Solve the `sl(1/2)` relations over 3×3 graded matrices: the even
/// generators act on the odd pair as the defining `gl(2)` matrices, the odd
/// generators are single off-diagonal units. `v+` is fixed (basis
/// normalization) to each odd unit in turn; every other odd generator is
/// the unique unit and scalar forced by one relation, and `Z`, `H` are read
/// off from the two mixed anticommutators. Each candidate is then re-checked
/// against the full relation table.
pub fn derive_fundamental_candidates() -> Vec<FundamentalCandidate> {
    let pres = sl12();
    let xp = Matrix::unit(3, 1, 2);
    let xm = Matrix::unit(3, 2, 1);
    let mut out = Vec::new();
    for (a, b) in odd_units() {
        let vp = Matrix::unit(3, a, b);
        let anti = |x: &Matrix, y: &Matrix| x.supercommutator(y, 1, 1);
        // {v+, vb+} = X+
        let Some(((i, j), c)) = search_unit(|e| anti(&vp, e), &xp) else {
            continue;
        };
        let vbp = Matrix::unit(3, i, j).scale(&c);
        // [X+, v-] = -v+
        let Some(((i, j), c)) = search_unit(|e| xp.commutator(e), &vp.scale(&rat(-1, 1))) else {
            continue;
        };
        let vm = Matrix::unit(3, i, j).scale(&c);
        // {v-, vb-} = X-
        let Some(((i, j), c)) = search_unit(|e| anti(&vm, e), &xm) else {
            continue;
        };
        let vbm = Matrix::unit(3, i, j).scale(&c);
        // {vb+, v-} = (Z+H)/2, {vb-, v+} = (Z-H)/2
        let zp = anti(&vbp, &vm);
        let zm = anti(&vbm, &vp);
        let z = zp.add(&zm);
        let h = zp.sub(&zm);
        let mats: BTreeMap<Gen, Matrix> = [
            (Gen::Z, z),
            (Gen::H, h),
            (Gen::Xp, xp.clone()),
            (Gen::Xm, xm.clone()),
            (Gen::Vp, vp),
            (Gen::Vm, vm),
            (Gen::Vbp, vbp),
            (Gen::Vbm, vbm),
        ]
        .into_iter()
        .collect();
        let rep = Rep {
            name: "fundamental".into(),
            space: GradedSpace::fundamental(),
            mats,
        };
        let residual = rep
            .representation_residuals(&pres)
            .map(|r| r.iter().map(|x| x.2).sum())
            .unwrap_or(usize::MAX);
        out.push(FundamentalCandidate {
            rep,
            ansatz: format!("v+ = E{a}{b}"),
            residual,
        });
    }
    out
}

/// The fundamental representation: the derived candidate that satisfies
/// every relation and whose R-matrix reproduces the printed `R̄` block.
pub fn derive_fundamental_rep() -> Result<Rep, Error> {
    let cands = derive_fundamental_candidates();
    let mut tried = Vec::new();
    for c in cands {
        if c.residual != 0 {
            tried.push(format!("{}: relation residual {}", c.ansatz, c.residual));
            continue;
        }
        let r = r_matrix_exact(&c.rep)?;
        let blocks = RBlocks::extract(&r);
        if blocks.off_block == 0 && blocks.rbar == rbar_block() {
            return Ok(c.rep);
        }
        tried.push(format!("{}: R-matrix blocks differ", c.ansatz));
    }
    Err(Error::NoSolution(format!(
        "no fundamental representation reproduces the printed R-matrix ({})",
        tried.join("; ")
    )))
}

/// Highest-weight spin-`j` representation of `gl(2)` with `Z ↦ z·1`:
/// `H v_k = (2j-2k) v_k`, `X- v_k = v_{k+1}`, `X+ v_k = k(2j-k+1) v_{k-1}`.
pub fn spin_rep_gl2(j: &Rational, z: &Rational) -> Result<Rep, Error> {
    let two_j = j * rat(2, 1);
    let allowed = (1..=4).any(|k| two_j == rat(k, 1));
    if !allowed {
        return Err(Error::UnsupportedSpin(j.to_string()));
    }
    let tj = two_j
        .to_integer()
        .to_string()
        .parse::<i64>()
        .expect("small");
    let n = (tj + 1) as usize;
    let mut h = Matrix::zero(n, n);
    let mut xp = Matrix::zero(n, n);
    let mut xm = Matrix::zero(n, n);
    for k in 0..n {
        let ki = k as i64;
        h.set(k, k, PolyHG::int(tj - 2 * ki));
        if k + 1 < n {
            xm.set(k + 1, k, PolyHG::one());
        }
        if k > 0 {
            xp.set(k - 1, k, PolyHG::int(ki * (tj - ki + 1)));
        }
    }
    let zm = Matrix::identity(n).scale(z);
    Ok(Rep {
        name: format!("spin-{j}"),
        space: GradedSpace::even(n),
        mats: [(Gen::Z, zm), (Gen::H, h), (Gen::Xp, xp), (Gen::Xm, xm)]
            .into_iter()
            .collect(),
    })
}

/// Parse `fundamental` or `spin:j`.
pub fn rep_by_name(name: &str) -> Result<Rep, Error> {
    if name == "fundamental" {
        return derive_fundamental_rep();
    }
    if let Some(j) = name.strip_prefix("spin:") {
        let j = crate::scalars::parse_rational(j)?;
        return spin_rep_gl2(&j, &Rational::one());
    }
    Err(Error::Usage(format!("unknown representation {name}")))
}

/// Exact image of `R = exp((g/2h)Z⊗σ) exp(-½σ⊗H) exp(½H⊗σ) exp(-(g/2h)σ⊗Z)`;
/// every exponent is nilpotent so no truncation is involved.
pub fn r_matrix_exact(rep: &Rep) -> Result<Matrix, Error> {
    let z = rep.get(Gen::Z)?;
    let h = rep.get(Gen::H)?;
    let s = rep.sigma()?;
    let x = rep.sigma_over_2h()?;
    let g = PolyHG::g();
    let half = rat(1, 2);
    let f1 = Matrix::kron(z, &x).scale_poly(&g).exp_nilpotent()?;
    let f2 = Matrix::kron(&s, h).scale(&-&half).exp_nilpotent()?;
    let f3 = Matrix::kron(h, &s).scale(&half).exp_nilpotent()?;
    let f4 = Matrix::kron(&x, z)
        .scale_poly(&g)
        .scale(&rat(-1, 1))
        .exp_nilpotent()?;
    Ok(Matrix::mul_all(&[&f1, &f2, &f3, &f4]))
}

/// `Ř`.
pub fn rcheck_block() -> Matrix {
    Matrix::from_rows(vec![
        vec![PolyHG::one(), PolyHG::g().scale(&rat(2, 1))],
        vec![PolyHG::zero(), PolyHG::one()],
    ])
}

/// `R̄` on the odd⊗odd sector `(11, 12, 21, 22)`.
pub fn rbar_block() -> Matrix {
    let (h, g) = (PolyHG::h(), PolyHG::g());
    let o = PolyHG::one;
    let z = PolyHG::zero;
    Matrix::from_rows(vec![
        vec![o(), &h + &g, -(&h + &g), &(&h * &h) - &(&g * &g)],
        vec![z(), o(), z(), &h - &g],
        vec![z(), z(), o(), &g - &h],
        vec![z(), z(), z(), o()],
    ])
}

/// Parity sectors of the ordered basis `e_i⊗e_j` (index `3i+j`).
pub const SECTORS: [(&str, &[usize]); 4] = [
    ("even-even", &[0]),
    ("even-odd", &[1, 2]),
    ("odd-even", &[3, 6]),
    ("odd-odd", &[4, 5, 7, 8]),
];

/// Sector blocks of a 9×9 matrix.
#[derive(Clone, Debug, Serialize)]
pub struct RBlocks {
    pub ee: Matrix,
    pub eo: Matrix,
    pub oe: Matrix,
    pub rbar: Matrix,
    /// Nonzero entries outside the four diagonal blocks.
    pub off_block: usize,
}

impl RBlocks {
    pub fn extract(r: &Matrix) -> Self {
        let mut off = 0;
        for (a, (_, ra)) in SECTORS.iter().enumerate() {
            for (b, (_, rb)) in SECTORS.iter().enumerate() {
                if a != b {
                    off += r.select(ra, rb).nonzero_count();
                }
            }
        }
        Self {
            ee: r.select(SECTORS[0].1, SECTORS[0].1),
            eo: r.select(SECTORS[1].1, SECTORS[1].1),
            oe: r.select(SECTORS[2].1, SECTORS[2].1),
            rbar: r.select(SECTORS[3].1, SECTORS[3].1),
            off_block: off,
        }
    }
}

const BLOCKS: &str = "fundamental R-matrix is (1) + Rcheck + Rcheck^-1 + Rbar";

fn matrix_check(name: &str, anchor: &str, a: &Matrix, b: &Matrix) -> Check {
    Check::from_residual(name, anchor, a.sub(b).nonzero_count())
}

/// Block audit of the exact fundamental R-matrix.
pub fn r_matrix_fundamental(rep: &Rep) -> Result<(Matrix, Vec<Check>), Error> {
    let r = r_matrix_exact(rep)?;
    let checks = fundamental_block_checks(&r)?;
    Ok((r, checks))
}

/// Sector blocks of a 9×9 matrix against `(1) ⊕ Ř ⊕ Ř⁻¹ ⊕ R̄`.
pub fn fundamental_block_checks(r: &Matrix) -> Result<Vec<Check>, Error> {
    fundamental_block_checks_at(r, None, None)
}

/// Same audit for an `R` already specialized at the given values; the
/// printed blocks are specialized alongside.
pub fn fundamental_block_checks_at(
    r: &Matrix,
    h: Option<&Rational>,
    g: Option<&Rational>,
) -> Result<Vec<Check>, Error> {
    let b = RBlocks::extract(r);
    let rc = rcheck_block().specialize(h, g);
    let rc_inv = rc.inverse_unipotent()?;
    let mut checks = vec![
        Check::from_residual("block-structure", BLOCKS, b.off_block),
        matrix_check("block-even-even", BLOCKS, &b.ee, &Matrix::identity(1)),
    ];
    // the sector order inside the printed direct sum is not fixed by the
    // text, so the Ř / Ř⁻¹ assignment is read off the extraction
    let direct = b.eo == rc && b.oe == rc_inv;
    let swapped = b.eo == rc_inv && b.oe == rc;
    let detail = if direct {
        "even-odd carries Rcheck, odd-even carries Rcheck^-1"
    } else if swapped {
        "even-odd carries Rcheck^-1, odd-even carries Rcheck"
    } else {
        "neither sector assignment matches"
    };
    checks.push(Check::from_bool("block-rcheck", BLOCKS, direct || swapped).with_detail(detail));
    checks.push(matrix_check(
        "block-rcheck-inverse",
        "odd-even block is the inverse of the even-odd block",
        &b.oe.mul(&b.eo),
        &Matrix::identity(2),
    ));
    checks.push(matrix_check(
        "block-rbar",
        BLOCKS,
        &b.rbar,
        &rbar_block().specialize(h, g),
    ));
    checks.push(matrix_check(
        "classical-limit",
        "R at h = g = 0 is the identity",
        &r.specialize(Some(&Rational::zero()), Some(&Rational::zero())),
        &Matrix::identity(9),
    ));
    Ok(checks)
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` on `V⊗V⊗V` and `(P R)² = 1` with the graded flip.
/// `R` must preserve parity; `R₁₃ = P₂₃R₁₂P₂₃`.
pub fn verify_graded_ybe(r: &Matrix, v: &GradedSpace) -> Vec<Check> {
    let n = v.dim();
    let id = Matrix::identity(n);
    let p = Matrix::graded_flip(v);
    let r12 = Matrix::kron(r, &id);
    let r23 = Matrix::kron(&id, r);
    let p23 = Matrix::kron(&id, &p);
    let r13 = Matrix::mul_all(&[&p23, &r12, &p23]);
    let lhs = Matrix::mul_all(&[&r12, &r13, &r23]);
    let rhs = Matrix::mul_all(&[&r23, &r13, &r12]);
    let pr = p.mul(r);
    vec![
        matrix_check(
            "ybe",
            "graded Yang-Baxter equation R12 R13 R23 = R23 R13 R12",
            &lhs,
            &rhs,
        ),
        matrix_check(
            "triangularity-matrix",
            "(P R)^2 = 1 with the graded flip",
            &pr.mul(&pr),
            &Matrix::identity(n * n),
        ),
    ]
}

/// Flip the sign of the `h² - g²` entry of `R̄`.
pub fn mutate_rbar_entry(r: &Matrix) -> Matrix {
    let mut m = r.clone();
    let v = -m.get(4, 8).clone();
    m.set(4, 8, v);
    m
}

#[cfg(test)]
mod tests;
