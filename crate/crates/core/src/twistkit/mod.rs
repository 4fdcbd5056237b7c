//! The two-parameter Jordanian twist: construction of `F`, the cocycle and
//! counit audits, the twisted coproduct and antipode, and the universal
//! R-matrix built two independent ways.

pub mod blocks;
pub mod closed_forms;
pub mod jordanian;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::enveloping::{Element, Enveloping, Mono, TensorElement};
use crate::report::Check;
use crate::scalars::{rat, PolyHG};
use crate::superalgebra::Gen;
use crate::Error;

pub use blocks::{build_sigma, exp_sigma, sigma_over_2h};

/// Twist element and its inverse at a fixed truncation order.
#[derive(Clone, Debug)]
pub struct TwistElement {
    pub f: TensorElement,
    pub f_inv: TensorElement,
    pub order: u32,
}

/// Which twist to build; the mutations exist to demonstrate that the audits
/// can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TwistVariant {
    #[default]
    Standard,
    /// Exponential factors in the opposite order.
    Swapped,
}

fn g_sigma_z(order: u32) -> TensorElement {
    // (g/2h) σ ⊗ Z
    TensorElement::pure2(
        &sigma_over_2h(order).scale_poly(&PolyHG::g()),
        &Element::gen(Gen::Z, order),
    )
}

fn z_g_sigma(order: u32) -> TensorElement {
    TensorElement::pure2(
        &Element::gen(Gen::Z, order),
        &sigma_over_2h(order).scale_poly(&PolyHG::g()),
    )
}

fn h_sigma(order: u32) -> TensorElement {
    TensorElement::pure2(&Element::gen(Gen::H, order), &build_sigma(order))
}

fn sigma_h(order: u32) -> TensorElement {
    TensorElement::pure2(&build_sigma(order), &Element::gen(Gen::H, order))
}

/// `F = exp((g/2h) σ⊗Z) · exp(-½ H⊗σ)`.
pub fn build_twist(u: &Enveloping, order: u32) -> Result<TwistElement, Error> {
    build_twist_variant(u, order, TwistVariant::Standard)
}

pub fn build_twist_variant(
    u: &Enveloping,
    order: u32,
    variant: TwistVariant,
) -> Result<TwistElement, Error> {
    if order < 1 {
        return Err(Error::BadOrder);
    }
    let half = rat(1, 2);
    let a = u.tensor_exp(&g_sigma_z(order))?;
    let b = u.tensor_exp(&h_sigma(order).scale(&-&half))?;
    let a_inv = u.tensor_exp(&g_sigma_z(order).scale(&rat(-1, 1)))?;
    let b_inv = u.tensor_exp(&h_sigma(order).scale(&half))?;
    let (f, f_inv) = match variant {
        TwistVariant::Standard => (u.tmul(&a, &b), u.tmul(&b_inv, &a_inv)),
        TwistVariant::Swapped => (u.tmul(&b, &a), u.tmul(&a_inv, &b_inv)),
    };
    Ok(TwistElement { f, f_inv, order })
}

impl TwistElement {
    pub fn trivial(order: u32) -> Self {
        Self {
            f: TensorElement::one(2, order),
            f_inv: TensorElement::one(2, order),
            order,
        }
    }

    /// `F·F⁻¹ - 1⊗1` and `F⁻¹·F - 1⊗1`.
    pub fn inverse_residuals(&self, u: &Enveloping) -> (TensorElement, TensorElement) {
        let one = TensorElement::one(2, self.order);
        (
            u.tmul(&self.f, &self.f_inv).sub(&one),
            u.tmul(&self.f_inv, &self.f).sub(&one),
        )
    }
}

/// Cocycle `F₁₂(Δ₀⊗id)(F) = F₂₃(id⊗Δ₀)(F)` and both counit conditions.
pub fn verify_cocycle(u: &Enveloping, tw: &TwistElement) -> Vec<Check> {
    let f12 = tw.f.embed((0, 1));
    let f23 = tw.f.embed((1, 2));
    let lhs = u.tmul(&f12, &u.coproduct0_left(&tw.f));
    let rhs = u.tmul(&f23, &u.coproduct0_right(&tw.f));
    let residual = lhs.sub(&rhs);
    let (left, right) = u.counit0_slots(&tw.f);
    let one = Element::one(tw.order);
    vec![
        Check::from_residual(
            "cocycle",
            "twist 2-cocycle F12 (D0 x id)F = F23 (id x D0)F",
            residual.len(),
        ),
        Check::from_residual(
            "counit-left",
            "twist counit condition (e0 x id)F = 1",
            left.sub(&one).len(),
        ),
        Check::from_residual(
            "counit-right",
            "twist counit condition (id x e0)F = 1",
            right.sub(&one).len(),
        ),
    ]
}

/// Twisted Hopf structure `Δ = F Δ₀ F⁻¹`, `S = u S₀ u⁻¹`, `ε = ε₀`.
pub struct TwistedHopf<'a> {
    pub alg: &'a Enveloping,
    pub twist: TwistElement,
    pub coproduct: BTreeMap<Gen, TensorElement>,
    pub antipode: BTreeMap<Gen, Element>,
    pub u: Element,
    pub u_inv: Element,
    mono_coproduct: Mutex<HashMap<Mono, TensorElement>>,
    mono_antipode: Mutex<HashMap<Mono, Element>>,
}

impl<'a> TwistedHopf<'a> {
    pub fn new(alg: &'a Enveloping, twist: TwistElement) -> Result<Self, Error> {
        let order = twist.order;
        let mut coproduct = BTreeMap::new();
        for &g in alg.presentation().generators() {
            let d0 = alg.coproduct0(&Element::gen(g, order));
            coproduct.insert(g, alg.tmul_all(&[&twist.f, &d0, &twist.f_inv]));
        }
        let u = alg.multiply_antipode0_right(&twist.f);
        let u_inv = alg.inverse_unipotent(&u)?;
        let mut antipode = BTreeMap::new();
        for &g in alg.presentation().generators() {
            let s0 = alg.antipode0(&Element::gen(g, order));
            antipode.insert(g, alg.mul_all(&[&u, &s0, &u_inv]));
        }
        Ok(Self {
            alg,
            twist,
            coproduct,
            antipode,
            u,
            u_inv,
            mono_coproduct: Mutex::new(HashMap::new()),
            mono_antipode: Mutex::new(HashMap::new()),
        })
    }

    pub fn order(&self) -> u32 {
        self.twist.order
    }

    pub fn counit(&self, x: &Element) -> PolyHG {
        x.counit_part()
    }

    fn coproduct_mono(&self, m: Mono) -> TensorElement {
        if let Some(t) = self.mono_coproduct.lock().unwrap().get(&m) {
            return t.clone();
        }
        let mut acc = TensorElement::one(2, self.order());
        for g in m.word() {
            acc = self.alg.tmul(&acc, &self.coproduct[&g]);
        }
        self.mono_coproduct.lock().unwrap().insert(m, acc.clone());
        acc
    }

    /// `Δ` extended multiplicatively.
    pub fn apply_coproduct(&self, x: &Element) -> TensorElement {
        let mut out = TensorElement::zero(2, x.order().min(self.order()));
        for (m, c) in x.terms() {
            out = out.add(&self.coproduct_mono(*m).scale_poly(c));
        }
        out
    }

    fn antipode_mono(&self, m: Mono) -> Element {
        if let Some(t) = self.mono_antipode.lock().unwrap().get(&m) {
            return t.clone();
        }
        let odd = m.odd_count() as i64;
        let sign = if (odd * (odd - 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        };
        let mut acc = Element::one(self.order());
        for g in m.word().into_iter().rev() {
            acc = self.alg.mul(&acc, &self.antipode[&g]);
        }
        let acc = acc.scale(&rat(sign, 1));
        self.mono_antipode.lock().unwrap().insert(m, acc.clone());
        acc
    }

    /// `S` extended as a graded anti-homomorphism.
    pub fn apply_antipode(&self, x: &Element) -> Element {
        let mut out = Element::zero(x.order().min(self.order()));
        for (m, c) in x.terms() {
            out = out.add(&self.antipode_mono(*m).scale_poly(c));
        }
        out
    }

    /// `(Δ ⊗ id)` on a rank-2 tensor.
    pub fn coproduct_left(&self, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(3, t.order());
        for (k, c) in t.terms() {
            let d = self.coproduct_mono(k[0]);
            for (dk, dc) in d.terms() {
                out.add_term([dk[0], dk[1], k[1]], &dc.mul_trunc(c, out.order()));
            }
        }
        out
    }

    /// `(id ⊗ Δ)` on a rank-2 tensor.
    pub fn coproduct_right(&self, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(3, t.order());
        for (k, c) in t.terms() {
            let d = self.coproduct_mono(k[1]);
            for (dk, dc) in d.terms() {
                out.add_term([k[0], dk[0], dk[1]], &dc.mul_trunc(c, out.order()));
            }
        }
        out
    }

    /// `m(S⊗id)Δ(x) - ε(x)` and `m(id⊗S)Δ(x) - ε(x)`.
    pub fn antipode_axiom_residuals(&self, x: &Element) -> (Element, Element) {
        let d = self.apply_coproduct(x);
        let order = d.order();
        let mut left = Element::zero(order);
        let mut right = Element::zero(order);
        for (k, c) in d.terms() {
            let a = Element::term(k[0], PolyHG::one(), order);
            let b = Element::term(k[1], PolyHG::one(), order);
            left = left.add(&self.alg.mul(&self.apply_antipode(&a), &b).scale_poly(c));
            right = right.add(&self.alg.mul(&a, &self.apply_antipode(&b)).scale_poly(c));
        }
        let eps = Element::scalar(self.counit(x), order);
        (left.sub(&eps), right.sub(&eps))
    }
}

/// Universal R-matrix at a truncation order.
#[derive(Clone, Debug)]
pub struct UniversalR {
    pub r: TensorElement,
    pub order: u32,
}

/// `R = F₂₁ F⁻¹` (route a).
pub fn r_from_twist(u: &Enveloping, tw: &TwistElement) -> UniversalR {
    UniversalR {
        r: u.tmul(&tw.f.flip(), &tw.f_inv),
        order: tw.order,
    }
}

/// Which closed-form product of exponentials to expand (route b). The
/// mutation drops the leading `Z⊗σ` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RVariant {
    #[default]
    Standard,
    DropZSigma,
}

/// `exp((g/2h)Z⊗σ) exp(-½σ⊗H) exp(½H⊗σ) exp(-(g/2h)σ⊗Z)` (route b).
pub fn r_closed_form(u: &Enveloping, order: u32, variant: RVariant) -> Result<UniversalR, Error> {
    let half = rat(1, 2);
    let e1 = u.tensor_exp(&z_g_sigma(order))?;
    let e2 = u.tensor_exp(&sigma_h(order).scale(&-&half))?;
    let e3 = u.tensor_exp(&h_sigma(order).scale(&half))?;
    let e4 = u.tensor_exp(&g_sigma_z(order).scale(&rat(-1, 1)))?;
    let r = match variant {
        RVariant::Standard => u.tmul_all(&[&e1, &e2, &e3, &e4]),
        RVariant::DropZSigma => u.tmul_all(&[&e2, &e3, &e4]),
    };
    Ok(UniversalR { r, order })
}

/// Route (a) against route (b).
pub fn build_universal_r(u: &Enveloping, tw: &TwistElement) -> Result<(UniversalR, Check), Error> {
    let a = r_from_twist(u, tw);
    let b = r_closed_form(u, tw.order, RVariant::Standard)?;
    let check = Check::from_residual(
        "r-two-routes",
        "R = F21 F^-1 equals the four-exponential closed form",
        a.r.sub(&b.r).len(),
    );
    Ok((a, check))
}

/// Triangularity and intertwiner checks for the listed generators.
pub fn verify_r_properties(
    hopf: &TwistedHopf,
    r: &UniversalR,
    gens: &[Gen],
    order: u32,
) -> Vec<Check> {
    let u = hopf.alg;
    let rr = r.r.truncate(order);
    let one = TensorElement::one(2, order);
    let mut out = vec![Check::from_residual(
        "triangularity",
        "triangular structure R21 R = 1",
        u.tmul(&rr.flip(), &rr).sub(&one).len(),
    )];
    for &g in gens {
        let d = hopf.coproduct[&g].truncate(order);
        let res = u.tmul(&rr, &d).sub(&u.tmul(&d.flip(), &rr));
        out.push(Check::from_residual(
            format!("intertwiner-{}", g),
            "R D(x) = D^op(x) R",
            res.len(),
        ));
    }
    out
}

/// `(Δ⊗id)R = R₁₃R₂₃` and `(id⊗Δ)R = R₁₃R₁₂`.
pub fn verify_hexagons(hopf: &TwistedHopf, r: &UniversalR, order: u32) -> Vec<Check> {
    let u = hopf.alg;
    let rr = r.r.truncate(order);
    let r12 = rr.embed((0, 1));
    let r13 = rr.embed((0, 2));
    let r23 = rr.embed((1, 2));
    let left = hopf.coproduct_left(&rr).sub(&u.tmul(&r13, &r23));
    let right = hopf.coproduct_right(&rr).sub(&u.tmul(&r13, &r12));
    vec![
        Check::from_residual("hexagon-left", "(D x id)R = R13 R23", left.len()),
        Check::from_residual("hexagon-right", "(id x D)R = R13 R12", right.len()),
    ]
}

/// Coassociativity `(Δ⊗id)Δ(x) = (id⊗Δ)Δ(x)`.
pub fn coassociativity_residual(hopf: &TwistedHopf, g: Gen) -> TensorElement {
    let d = &hopf.coproduct[&g];
    hopf.coproduct_left(d).sub(&hopf.coproduct_right(d))
}

#[cfg(test)]
mod tests;
