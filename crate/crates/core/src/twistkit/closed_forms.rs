//! Printed closed forms of the twisted coproducts and antipodes, expanded as
//! truncated series and diffed against the computed `FΔ₀F⁻¹` and `uS₀u⁻¹`.
//!
//! Every `(g/h)`- or `(g²/2h)`-prefactor is cancelled against the factor
//! `2h Xp` that `e^{±σ} - 1` always carries:
//! `e^σ - 1 = 2h Xp e^σ` and `e^{-σ} - 1 = -2h Xp`.

use crate::enveloping::{Element, Enveloping, TensorElement};
use crate::report::Check;
use crate::scalars::{rat, PolyHG, Rational};
use crate::superalgebra::Gen;

use super::blocks::{exp_g_sigma, exp_sigma};
use super::TwistedHopf;

/// Expression builder at a fixed order.
pub struct Cf<'a> {
    pub u: &'a Enveloping,
    pub n: u32,
}

impl<'a> Cf<'a> {
    pub fn new(u: &'a Enveloping, n: u32) -> Self {
        Self { u, n }
    }

    pub fn one(&self) -> Element {
        Element::one(self.n)
    }

    pub fn x(&self, g: Gen) -> Element {
        Element::gen(g, self.n)
    }

    /// `e^{(p/q)σ}`.
    pub fn es(&self, p: i64, q: i64) -> Element {
        exp_sigma(&rat(p, q), self.n)
    }

    /// `exp(c·(g/2h)σ)`.
    pub fn eg(&self, c: Rational) -> Element {
        exp_g_sigma(self.u, &c, self.n)
    }

    pub fn c(&self, p: PolyHG) -> Element {
        Element::scalar(p, self.n)
    }

    pub fn p(&self, fs: &[&Element]) -> Element {
        self.u.mul_all(fs)
    }

    pub fn t(&self, a: &Element, b: &Element) -> TensorElement {
        TensorElement::pure2(a, b)
    }

    fn h(&self) -> PolyHG {
        PolyHG::h()
    }

    fn g(&self) -> PolyHG {
        PolyHG::g()
    }
}

/// `Δ(Z) = Z⊗1 + 1⊗Z`.
pub fn coproduct_z(cf: &Cf) -> TensorElement {
    let z = cf.x(Gen::Z);
    cf.t(&z, &cf.one()).add(&cf.t(&cf.one(), &z))
}

/// `Δ(H) = H⊗e^σ + 1⊗H + (g/h)(1-e^σ)⊗Ze^σ`.
pub fn coproduct_h(cf: &Cf) -> TensorElement {
    let (h_, z, xp) = (cf.x(Gen::H), cf.x(Gen::Z), cf.x(Gen::Xp));
    let es = cf.es(1, 1);
    // (g/h)(1-e^σ) = -2g Xp e^σ
    let pref = cf.p(&[&xp, &es]).scale_poly(&cf.g()).scale(&rat(-2, 1));
    cf.t(&h_, &es)
        .add(&cf.t(&cf.one(), &h_))
        .add(&cf.t(&pref, &cf.p(&[&z, &es])))
}

/// `Δ(X+) = X+⊗1 + e^{-σ}⊗X+`.
pub fn coproduct_xp(cf: &Cf) -> TensorElement {
    let xp = cf.x(Gen::Xp);
    cf.t(&xp, &cf.one()).add(&cf.t(&cf.es(-1, 1), &xp))
}

/// The nine-term `Δ(X-)`.
pub fn coproduct_xm(cf: &Cf) -> TensorElement {
    let (h_, z, xp, xm) = (cf.x(Gen::H), cf.x(Gen::Z), cf.x(Gen::Xp), cf.x(Gen::Xm));
    let one = cf.one();
    let es = cf.es(1, 1);
    let e2s = cf.es(2, 1);
    let es_m1 = es.sub(&one);
    let h = cf.h();
    let g = cf.g();
    let z2 = cf.p(&[&z, &z]);
    let mut t = cf.t(&xm, &es);
    t = t.add(&cf.t(&one, &xm));
    // - hH ⊗ e^σ H
    t = t.sub(&cf.t(&h_.scale_poly(&h), &cf.p(&[&es, &h_])));
    // - (h/2) H(H+2) ⊗ e^σ(e^σ-1)
    let hh2 = cf.p(&[&h_, &h_.add(&one.scale(&rat(2, 1)))]);
    t = t.sub(&cf.t(&hh2.scale_poly(&h).scale(&rat(1, 2)), &cf.p(&[&es, &es_m1])));
    // + g(e^σ-1) ⊗ Z e^σ H
    t = t.add(&cf.t(&es_m1.scale_poly(&g), &cf.p(&[&z, &es, &h_])));
    // + g(H - e^σ + 1) ⊗ Z e^σ
    t = t.add(&cf.t(&h_.sub(&es).add(&one).scale_poly(&g), &cf.p(&[&z, &es])));
    // + g(e^σ-1)(H + e^σ + 1) ⊗ Z e^{2σ}
    t = t.add(&cf.t(
        &cf.p(&[&es_m1, &h_.add(&es).add(&one)]).scale_poly(&g),
        &cf.p(&[&z, &e2s]),
    ));
    // - (g²/2h)(e^σ-1) ⊗ Z² e^σ  with (e^σ-1)/2h = Xp e^σ
    let g2 = &g * &g;
    let xp_es = cf.p(&[&xp, &es]);
    t = t.sub(&cf.t(&xp_es.scale_poly(&g2), &cf.p(&[&z2, &es])));
    // - (g²/2h)(e^σ-1)² ⊗ Z² e^{2σ}
    t = t.sub(&cf.t(
        &cf.p(&[&xp_es, &es_m1]).scale_poly(&g2),
        &cf.p(&[&z2, &e2s]),
    ));
    t
}

pub fn antipode_z(cf: &Cf) -> Element {
    cf.x(Gen::Z).neg()
}

/// `S(H) = -He^{-σ} + (g/h)Z(e^{-σ}-1)`.
pub fn antipode_h(cf: &Cf) -> Element {
    let (h_, z, xp) = (cf.x(Gen::H), cf.x(Gen::Z), cf.x(Gen::Xp));
    cf.p(&[&h_, &cf.es(-1, 1)])
        .neg()
        .sub(&cf.p(&[&z, &xp]).scale_poly(&cf.g()).scale(&rat(2, 1)))
}

/// Readings of the printed `S(X+) = -X e^σ`.
pub fn antipode_xp_readings(cf: &Cf) -> Vec<(&'static str, Element)> {
    let es = cf.es(1, 1);
    vec![
        ("-Xp e^sigma", cf.p(&[&cf.x(Gen::Xp), &es]).neg()),
        (
            "-(sigma/2h) e^sigma",
            cf.p(&[&super::sigma_over_2h(cf.n), &es]).neg(),
        ),
    ]
}

/// `S(X-) = -{X- + (h/2)H²(e^{-σ}+1) - hH(e^{-σ}-1) - gHZe^{-σ}
///            + gZ(e^{-σ}-1) + (g²/2h)(e^{-σ}-1)Z²} e^{-σ}`.
pub fn antipode_xm(cf: &Cf) -> Element {
    let (h_, z, xp, xm) = (cf.x(Gen::H), cf.x(Gen::Z), cf.x(Gen::Xp), cf.x(Gen::Xm));
    let one = cf.one();
    let ems = cf.es(-1, 1);
    let ems_m1 = ems.sub(&one);
    let h = cf.h();
    let g = cf.g();
    let mut brace = xm.clone();
    brace = brace.add(
        &cf.p(&[&h_, &h_, &ems.add(&one)])
            .scale_poly(&h)
            .scale(&rat(1, 2)),
    );
    brace = brace.sub(&cf.p(&[&h_, &ems_m1]).scale_poly(&h));
    brace = brace.sub(&cf.p(&[&h_, &z, &ems]).scale_poly(&g));
    brace = brace.add(&cf.p(&[&z, &ems_m1]).scale_poly(&g));
    // (g²/2h)(e^{-σ}-1) = -g² Xp
    brace = brace.sub(&cf.p(&[&xp, &z, &z]).scale_poly(&(&g * &g)));
    cf.p(&[&brace, &ems]).neg()
}

/// `Δ(vb+) = vb+⊗e^{-σ/2} + exp(-(g/2h)σ)⊗vb+`.
pub fn coproduct_vbp(cf: &Cf) -> TensorElement {
    let v = cf.x(Gen::Vbp);
    cf.t(&v, &cf.es(-1, 2)).add(&cf.t(&cf.eg(rat(-1, 1)), &v))
}

/// `Δ(v-)` with its five terms.
pub fn coproduct_vm(cf: &Cf) -> TensorElement {
    let (h_, z, vp, vm) = (cf.x(Gen::H), cf.x(Gen::Z), cf.x(Gen::Vp), cf.x(Gen::Vm));
    let one = cf.one();
    let es = cf.es(1, 1);
    let eg = cf.eg(rat(1, 1));
    let h = cf.h();
    let g = cf.g();
    let mut t = cf.t(&vm, &cf.es(1, 2));
    t = t.add(&cf.t(&eg, &vm));
    t = t.add(&cf.t(&cf.p(&[&h_, &eg]).scale_poly(&h), &cf.p(&[&vp, &es])));
    t = t.sub(&cf.t(
        &cf.p(&[&vp, &es]).scale_poly(&g),
        &cf.p(&[&z, &cf.es(1, 2)]),
    ));
    t = t.sub(&cf.t(
        &cf.p(&[&es.sub(&one), &eg]).scale_poly(&g),
        &cf.p(&[&z, &vp, &es]),
    ));
    t
}

/// `exp((h+g)σ/2h) = e^{σ/2} exp((g/2h)σ)`.
fn e_hg(cf: &Cf, sign: i64) -> Element {
    cf.p(&[&cf.es(sign, 2), &cf.eg(rat(sign, 1))])
}

/// Readings of the printed `S(vb+) = -vb_ + exp((h+g)σ/2h)` (the subscript
/// and the `+` straddle a line break).
pub fn antipode_vbp_readings(cf: &Cf) -> Vec<(&'static str, Element)> {
    let e = e_hg(cf, 1);
    vec![
        (
            "-vbp exp((h+g)sigma/2h)",
            cf.p(&[&cf.x(Gen::Vbp), &e]).neg(),
        ),
        (
            "-exp((h+g)sigma/2h) vbp",
            cf.p(&[&e, &cf.x(Gen::Vbp)]).neg(),
        ),
        ("-vbp + exp((h+g)sigma/2h)", cf.x(Gen::Vbp).neg().add(&e)),
        ("-vbm + exp((h+g)sigma/2h)", cf.x(Gen::Vbm).neg().add(&e)),
    ]
}

/// `S(v-) = -(v- - hHv+ + gv+(1+Z)) exp(-(h+g)σ/2h)`.
pub fn antipode_vm(cf: &Cf) -> Element {
    let (h_, z, vp, vm) = (cf.x(Gen::H), cf.x(Gen::Z), cf.x(Gen::Vp), cf.x(Gen::Vm));
    let inner = vm
        .sub(&cf.p(&[&h_, &vp]).scale_poly(&PolyHG::h()))
        .add(&cf.p(&[&vp, &cf.one().add(&z)]).scale_poly(&PolyHG::g()));
    cf.p(&[&inner, &e_hg(cf, -1)]).neg()
}

fn check_tensor(
    name: &str,
    anchor: &str,
    computed: &TensorElement,
    printed: &TensorElement,
) -> Check {
    Check::from_residual(name, anchor, computed.sub(printed).len())
}

fn check_element(name: &str, anchor: &str, computed: &Element, printed: &Element) -> Check {
    Check::from_residual(name, anchor, computed.sub(printed).len())
}

fn check_readings(
    name: &str,
    anchor: &str,
    computed: &Element,
    readings: &[(&'static str, Element)],
) -> Check {
    let matched: Vec<&str> = readings
        .iter()
        .filter(|(_, r)| computed.sub(r).is_zero())
        .map(|(l, _)| *l)
        .collect();
    let best = readings
        .iter()
        .map(|(_, r)| computed.sub(r).len())
        .min()
        .unwrap_or(usize::MAX);
    let detail = if matched.is_empty() {
        "no reading matches".to_string()
    } else {
        format!("matching reading: {}", matched.join("; "))
    };
    Check::from_residual(
        name,
        anchor,
        if matched.is_empty() { best.max(1) } else { 0 },
    )
    .with_detail(detail)
}

/// Diff every printed even-generator closed form against the engine tables.
pub fn match_gl2_closed_forms(hopf: &TwistedHopf) -> Vec<Check> {
    let cf = Cf::new(hopf.alg, hopf.order());
    let d = &hopf.coproduct;
    let s = &hopf.antipode;
    let a = "twisted gl(2) coproduct/antipode closed forms";
    vec![
        check_tensor("coproduct-Z", a, &d[&Gen::Z], &coproduct_z(&cf)),
        check_tensor("coproduct-H", a, &d[&Gen::H], &coproduct_h(&cf)),
        check_tensor("coproduct-Xp", a, &d[&Gen::Xp], &coproduct_xp(&cf)),
        check_tensor("coproduct-Xm", a, &d[&Gen::Xm], &coproduct_xm(&cf)),
        check_element("antipode-Z", a, &s[&Gen::Z], &antipode_z(&cf)),
        check_element("antipode-H", a, &s[&Gen::H], &antipode_h(&cf)),
        check_readings("antipode-Xp", a, &s[&Gen::Xp], &antipode_xp_readings(&cf)),
        check_element("antipode-Xm", a, &s[&Gen::Xm], &antipode_xm(&cf)),
    ]
}

/// Odd-generator closed forms for `vb+` and `v-`.
pub fn match_odd_closed_forms(hopf: &TwistedHopf) -> Vec<Check> {
    let cf = Cf::new(hopf.alg, hopf.order());
    let d = &hopf.coproduct;
    let s = &hopf.antipode;
    let a = "twisted sl(1/2) odd coproduct/antipode closed forms";
    vec![
        check_tensor("coproduct-vbp", a, &d[&Gen::Vbp], &coproduct_vbp(&cf)),
        check_tensor("coproduct-vm", a, &d[&Gen::Vm], &coproduct_vm(&cf)),
        check_readings(
            "antipode-vbp",
            a,
            &s[&Gen::Vbp],
            &antipode_vbp_readings(&cf),
        ),
        check_element("antipode-vm", a, &s[&Gen::Vm], &antipode_vm(&cf)),
    ]
}
