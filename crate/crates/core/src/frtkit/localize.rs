//! Adjoining `detT⁻¹` and `(e - ΨT⁻¹Θ)⁻¹` with straightening rules.
//!
//! With `D = detT⁻¹` and `V = ω⁻¹`, `ω = e·detT - ΨQφ(Θ)`, every element is
//! a sum of `P·D^k·V^m` with `P` a normal form, using `D x = φ(x) D`,
//! `V x = ψ(x) V` and `DV = VD`. Then `T⁻¹ = Q·D` and
//! `e - ΨT⁻¹Θ = ω·D`.

use std::collections::BTreeMap;
use std::fmt;

use super::det::det_t;
use super::linalg::{solve_nc, NcEquation};
use super::poly::{FrtGen, NcPoly, TermJson};
use super::rewrite::{Budget, Reducer, RewriteSystem};
use crate::scalars::{PolyHG, Rational};
use crate::Error;

use FrtGen::*;

/// Algebra endomorphism fixed by the images of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct GenMap {
    images: Vec<NcPoly>,
}

impl GenMap {
    pub fn identity() -> Self {
        Self {
            images: FrtGen::ALL.iter().map(|&x| NcPoly::gen(x)).collect(),
        }
    }

    pub fn from_images(images: Vec<NcPoly>) -> Self {
        assert_eq!(images.len(), FrtGen::ALL.len());
        Self { images }
    }

    pub fn image(&self, x: FrtGen) -> &NcPoly {
        &self.images[x.index()]
    }

    pub fn apply(&self, r: &mut Reducer<'_>, p: &NcPoly) -> Result<NcPoly, Error> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NcPoly::one();
            for &x in &w.0 {
                acc = r.mul(&acc, self.image(x))?;
            }
            out = out.add(&acc.scale_poly(c));
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, r: &mut Reducer<'_>, other: &GenMap) -> Result<GenMap, Error> {
        let images = other
            .images
            .iter()
            .map(|p| self.apply(r, p))
            .collect::<Result<_, _>>()?;
        Ok(Self { images })
    }

    pub fn specialize(&self, h: Option<&Rational>, g: Option<&Rational>) -> Self {
        Self {
            images: self.images.iter().map(|p| p.specialize(h, g)).collect(),
        }
    }
}

impl fmt::Display for GenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = FrtGen::ALL
            .iter()
            .filter(|&&x| *self.image(x) != NcPoly::gen(x))
            .map(|&x| format!("{x} -> {}", self.image(x)))
            .collect();
        if parts.is_empty() {
            f.write_str("identity")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Linear `φ` with `x·u = u·φ(x)` for every generator `x`.
pub fn solve_conjugation(sys: &RewriteSystem, u: &NcPoly) -> Result<GenMap, Error> {
    let mut images = Vec::new();
    for x in FrtGen::ALL {
        let eq = NcEquation {
            terms: FrtGen::ALL
                .iter()
                .map(|&y| (y.index(), sys.mul(u, &NcPoly::gen(y))))
                .collect(),
            target: sys.mul(&NcPoly::gen(x), u),
        };
        let sol = solve_nc(FrtGen::ALL.len(), &[eq])
            .map_err(|e| Error::NoSolution(format!("straightening {x} past {u}: {e}")))?;
        let mut img = NcPoly::zero();
        for (y, c) in FrtGen::ALL.iter().zip(sol) {
            img.add_term(super::poly::Word(vec![*y]), &c);
        }
        images.push(img);
    }
    Ok(GenMap { images })
}

pub type Mat2 = [[NcPoly; 2]; 2];

pub const T: [[FrtGen; 2]; 2] = [[A, B], [C, D]];
pub const PSI: [FrtGen; 2] = [Xi, Eta];
pub const THETA: [FrtGen; 2] = [Gamma, Delta];

/// `Q` linear in `a, b, c, d` with `T Q = detT·I` and `Q φ(T) = detT·I`.
pub fn solve_t_adjugate(sys: &RewriteSystem, det: &NcPoly, phi: &GenMap) -> Result<Mat2, Error> {
    let tg = [A, B, C, D];
    let var = |k: usize, l: usize, t: usize| (2 * k + l) * 4 + t;
    let mut eqs = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let target = if i == j { det.clone() } else { NcPoly::zero() };
            let mut right = NcEquation {
                terms: Vec::new(),
                target: target.clone(),
            };
            let mut left = NcEquation {
                terms: Vec::new(),
                target,
            };
            for k in 0..2 {
                for (t, &tgen) in tg.iter().enumerate() {
                    right.terms.push((
                        var(k, j, t),
                        sys.mul(&NcPoly::gen(T[i][k]), &NcPoly::gen(tgen)),
                    ));
                    left.terms.push((
                        var(i, k, t),
                        sys.mul(&NcPoly::gen(tgen), phi.image(T[k][j])),
                    ));
                }
            }
            eqs.push(right);
            eqs.push(left);
        }
    }
    let sol = solve_nc(16, &eqs).map_err(|e| Error::NoSolution(format!("T inverse: {e}")))?;
    let entry = |k: usize, l: usize| {
        let mut p = NcPoly::zero();
        for (t, &tgen) in tg.iter().enumerate() {
            p.add_term(super::poly::Word(vec![tgen]), &sol[var(k, l, t)]);
        }
        p
    };
    Ok([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
}

/// `ω = e·detT - Σ ψ_k Q_kl φ(θ_l)`, so that `e - ΨT⁻¹Θ = ω·detT⁻¹`.
pub fn omega(sys: &RewriteSystem, det: &NcPoly, q: &Mat2, phi: &GenMap) -> NcPoly {
    let mut w = sys.mul(&NcPoly::gen(E), det);
    for (k, &p) in PSI.iter().enumerate() {
        for (l, &th) in THETA.iter().enumerate() {
            let term = sys.mul_all(&[&NcPoly::gen(p), &q[k][l], phi.image(th)]);
            w = w.sub(&term);
        }
    }
    w
}

/// Element `Σ P·D^k·V^m`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Loc {
    terms: BTreeMap<(u32, u32), NcPoly>,
}

impl Loc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::poly(NcPoly::one())
    }

    pub fn poly(p: NcPoly) -> Self {
        Self::term(p, 0, 0)
    }

    pub fn gen(x: FrtGen) -> Self {
        Self::poly(NcPoly::gen(x))
    }

    /// `p·D^k·V^m`.
    pub fn term(p: NcPoly, k: u32, m: u32) -> Self {
        let mut out = Self::zero();
        out.add_part(k, m, &p);
        out
    }

    pub fn det_inv() -> Self {
        Self::term(NcPoly::one(), 1, 0)
    }

    pub fn omega_inv() -> Self {
        Self::term(NcPoly::one(), 0, 1)
    }

    fn add_part(&mut self, k: u32, m: u32, p: &NcPoly) {
        if p.is_zero() {
            return;
        }
        let e = self.terms.entry((k, m)).or_default();
        *e = e.add(p);
        if e.is_zero() {
            self.terms.remove(&(k, m));
        }
    }

    pub fn parts(&self) -> impl Iterator<Item = (&(u32, u32), &NcPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Loc) -> Loc {
        let mut out = self.clone();
        for (&(k, m), p) in &o.terms {
            out.add_part(k, m, p);
        }
        out
    }

    pub fn neg(&self) -> Loc {
        Loc {
            terms: self.terms.iter().map(|(k, p)| (*k, p.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Loc) -> Loc {
        self.add(&o.neg())
    }

    pub fn scale_poly(&self, c: &PolyHG) -> Loc {
        let mut out = Loc::zero();
        for (&(k, m), p) in &self.terms {
            out.add_part(k, m, &p.scale_poly(c));
        }
        out
    }

    pub fn is_syntactically_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn uses_omega_inv(&self) -> bool {
        self.terms.keys().any(|&(_, m)| m > 0)
    }
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(k, m), p)| {
                let mut s = format!("({p})");
                if k > 0 {
                    s.push_str(&format!(" detT^-{k}"));
                }
                if m > 0 {
                    s.push_str(&format!(" w^-{m}"));
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// JSON part `{"det_inv_power": k, "omega_inv_power": m, "numerator": [...]}`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct LocPartJson {
    pub det_inv_power: u32,
    pub omega_inv_power: u32,
    pub numerator: Vec<TermJson>,
}

impl Loc {
    pub fn to_json(&self) -> Vec<LocPartJson> {
        self.terms
            .iter()
            .map(|(&(k, m), p)| LocPartJson {
                det_inv_power: k,
                omega_inv_power: m,
                numerator: p.to_json(),
            })
            .collect()
    }
}

/// The algebra with `detT` and `ω` inverted.
#[derive(Clone, Debug)]
pub struct Localization {
    pub sys: RewriteSystem,
    pub det: NcPoly,
    pub phi: GenMap,
    pub q: Mat2,
    pub omega: NcPoly,
    /// Present once `ω` admits linear straightening.
    pub psi: Option<GenMap>,
}

impl Localization {
    pub fn new(sys: RewriteSystem) -> Result<Self, Error> {
        let det = sys.nf(&det_t());
        let phi = solve_conjugation(&sys, &det)?;
        let q = solve_t_adjugate(&sys, &det, &phi)?;
        let omega = omega(&sys, &det, &q, &phi);
        let psi = solve_conjugation(&sys, &omega).ok();
        Ok(Self {
            sys,
            det,
            phi,
            q,
            omega,
            psi,
        })
    }

    pub fn ctx(&self, budget: Budget) -> LocCtx<'_> {
        LocCtx {
            loc: self,
            r: self.sys.reducer(budget),
        }
    }

    pub fn m_entry(i: usize, j: usize) -> Loc {
        Loc::gen(FrtGen::at(i, j))
    }

    /// `T⁻¹ = Q·detT⁻¹`.
    pub fn t_inverse(&self) -> [[Loc; 2]; 2] {
        let e = |k: usize, l: usize| Loc::term(self.q[k][l].clone(), 1, 0);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }
}

/// A [`Localization`] with a budgeted reduction session.
pub struct LocCtx<'a> {
    pub loc: &'a Localization,
    r: Reducer<'a>,
}

impl LocCtx<'_> {
    pub fn steps(&self) -> usize {
        self.r.steps()
    }

    fn psi(&self) -> Result<&GenMap, Error> {
        self.loc.psi.as_ref().ok_or_else(|| {
            Error::NoSolution("no straightening rule for (e - Psi T^-1 Theta)^-1".into())
        })
    }

    pub fn nf(&mut self, p: &NcPoly) -> Result<NcPoly, Error> {
        self.r.normal_form(p)
    }

    pub fn mul_poly(&mut self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly, Error> {
        self.r.mul(a, b)
    }

    /// `φ^k ψ^m (p)`.
    fn straighten(&mut self, k: u32, m: u32, p: &NcPoly) -> Result<NcPoly, Error> {
        let mut out = p.clone();
        if m > 0 {
            let psi = self.psi()?.clone();
            for _ in 0..m {
                out = psi.apply(&mut self.r, &out)?;
            }
        }
        for _ in 0..k {
            out = self.loc.phi.apply(&mut self.r, &out)?;
        }
        Ok(out)
    }

    pub fn mul(&mut self, a: &Loc, b: &Loc) -> Result<Loc, Error> {
        let mut out = Loc::zero();
        for (&(k1, m1), p1) in &a.terms {
            for (&(k2, m2), p2) in &b.terms {
                let moved = self.straighten(k1, m1, p2)?;
                let prod = self.r.mul(p1, &moved)?;
                out.add_part(k1 + k2, m1 + m2, &prod);
            }
        }
        Ok(out)
    }

    pub fn mul_all(&mut self, fs: &[&Loc]) -> Result<Loc, Error> {
        let mut acc = Loc::one();
        for f in fs {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `N` with `x = N·D^K·V^M`; `x = 0` iff `N = 0`.
    pub fn numerator(&mut self, x: &Loc) -> Result<NcPoly, Error> {
        let kmax = x.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let mmax = x.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let det = self.loc.det.clone();
        let mut out = NcPoly::zero();
        for (&(k, m), p) in &x.terms {
            let mut acc = p.clone();
            if m < mmax {
                let w = self.straighten(k, 0, &self.loc.omega.clone())?;
                for _ in m..mmax {
                    acc = self.r.mul(&acc, &w)?;
                }
            }
            for _ in k..kmax {
                acc = self.r.mul(&acc, &det)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Terms left in the numerator of `a - b`.
    pub fn residual(&mut self, a: &Loc, b: &Loc) -> Result<usize, Error> {
        Ok(self.numerator(&a.sub(b))?.len())
    }

    pub fn mat_mul(&mut self, a: &[Vec<Loc>], b: &[Vec<Loc>]) -> Result<Vec<Vec<Loc>>, Error> {
        let mut out = Vec::new();
        for row in a {
            let mut r = Vec::new();
            for j in 0..b[0].len() {
                let mut acc = Loc::zero();
                for (k, x) in row.iter().enumerate() {
                    if x.is_syntactically_zero() || b[k][j].is_syntactically_zero() {
                        continue;
                    }
                    acc = acc.add(&self.mul(x, &b[k][j])?);
                }
                r.push(acc);
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Total residual terms of `m - I`.
    pub fn identity_residual(&mut self, m: &[Vec<Loc>]) -> Result<usize, Error> {
        let mut total = 0;
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let id = if i == j { Loc::one() } else { Loc::zero() };
                total += self.residual(x, &id)?;
            }
        }
        Ok(total)
    }
}
