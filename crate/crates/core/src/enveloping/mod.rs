//! Universal enveloping algebra engine: PBW normal forms, graded tensor
//! products of rank 2 and 3, and the undeformed Hopf structure.
//!
//! Products of PBW monomials are straightened by the rule
//! `y·x = (-1)^{|x||y|} x·y + [y, x]` for `x < y`, together with
//! `x·x = ½[x, x]` for odd `x`. Monomial products carry rational
//! coefficients only and are memoized per algebra.

mod element;
mod mono;

pub use element::{Element, ElementJson, TensorElement, TensorJson};
pub use mono::Mono;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::scalars::{rat, PolyHG, Rational};
use crate::superalgebra::{koszul, Gen, LinComb, Presentation, NUM_GENS};
use crate::Error;

type MonoComb = Arc<Vec<(Mono, Rational)>>;

/// The enveloping algebra of a presentation, with memoized monomial products.
pub struct Enveloping {
    pres: Presentation,
    table: Vec<Vec<Vec<(Gen, Rational)>>>,
    gen_cache: RwLock<HashMap<(Mono, Gen), MonoComb>>,
    mono_cache: RwLock<HashMap<(Mono, Mono), MonoComb>>,
}

fn add_comb(acc: &mut HashMap<Mono, Rational>, m: Mono, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(m).or_insert_with(Rational::zero);
    *e += c;
}

fn finish_comb(acc: HashMap<Mono, Rational>) -> MonoComb {
    let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by_key(|a| a.0);
    Arc::new(v)
}

/// Koszul sign exponent for multiplying slot tuples `a` and `b`: each slot of
/// `a` after position `i` crosses slot `i` of `b`.
fn crossing_parity(a: &[Mono], b: &[Mono]) -> u8 {
    let mut s = 0u8;
    for i in 0..b.len() {
        let pb = b[i].parity();
        if pb == 0 {
            continue;
        }
        for ak in &a[i + 1..] {
            s ^= ak.parity() & pb;
        }
    }
    s
}

impl Enveloping {
    pub fn new(pres: Presentation) -> Self {
        let mut table = vec![vec![Vec::new(); NUM_GENS]; NUM_GENS];
        for &x in pres.generators() {
            for &y in pres.generators() {
                let lc: LinComb = pres.bracket_unchecked(x, y);
                table[x.index()][y.index()] = lc.into_iter().collect();
            }
        }
        Self {
            pres,
            table,
            gen_cache: RwLock::new(HashMap::new()),
            mono_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    fn bracket(&self, x: Gen, y: Gen) -> &[(Gen, Rational)] {
        &self.table[x.index()][y.index()]
    }

    /// `m · x` in PBW normal form.
    fn mono_times_gen(&self, m: Mono, x: Gen) -> MonoComb {
        if let Some(v) = self.gen_cache.read().unwrap().get(&(m, x)) {
            return v.clone();
        }
        let result = self.mono_times_gen_uncached(m, x);
        self.gen_cache
            .write()
            .unwrap()
            .insert((m, x), result.clone());
        result
    }

    fn mono_times_gen_uncached(&self, m: Mono, x: Gen) -> MonoComb {
        let last = match m.last() {
            Some(y) if y >= x => y,
            _ => return Arc::new(vec![(m.times(x), Rational::one())]),
        };
        let mut acc = HashMap::new();
        let rest = m.without(last);
        if last == x {
            if !x.is_odd() {
                return Arc::new(vec![(m.times(x), Rational::one())]);
            }
            // x·x = ½[x, x] for odd x
            for (g, c) in self.bracket(x, x) {
                for (mm, cc) in self.mono_times_gen(rest, *g).iter() {
                    add_comb(&mut acc, *mm, c * cc * rat(1, 2));
                }
            }
            return finish_comb(acc);
        }
        let y = last;
        // rest·y·x = ± (rest·x)·y + rest·[y, x]
        let sign = rat(koszul(x.parity(), y.parity()), 1);
        for (mx, cx) in self.mono_times_gen(rest, x).iter() {
            for (mm, cc) in self.mono_times_gen(*mx, y).iter() {
                add_comb(&mut acc, *mm, &sign * cx * cc);
            }
        }
        for (g, c) in self.bracket(y, x) {
            for (mm, cc) in self.mono_times_gen(rest, *g).iter() {
                add_comb(&mut acc, *mm, c * cc);
            }
        }
        finish_comb(acc)
    }

    /// Product of two PBW monomials in normal form.
    pub fn mono_mul(&self, a: Mono, b: Mono) -> MonoComb {
        if b.is_one() {
            return Arc::new(vec![(a, Rational::one())]);
        }
        if a.is_one() {
            return Arc::new(vec![(b, Rational::one())]);
        }
        if let (Some(la), Some(fb)) = (a.last(), b.first()) {
            if la < fb {
                return Arc::new(vec![(a.concat(&b), Rational::one())]);
            }
        }
        if let Some(v) = self.mono_cache.read().unwrap().get(&(a, b)) {
            return v.clone();
        }
        let mut cur: HashMap<Mono, Rational> = HashMap::from([(a, Rational::one())]);
        for x in b.word() {
            let mut next = HashMap::new();
            for (m, c) in cur {
                for (mm, cc) in self.mono_times_gen(m, x).iter() {
                    add_comb(&mut next, *mm, &c * cc);
                }
            }
            cur = next;
        }
        let result = finish_comb(cur);
        self.mono_cache
            .write()
            .unwrap()
            .insert((a, b), result.clone());
        result
    }

    /// Product in PBW normal form, truncated at the smaller order.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let order = a.order.min(b.order);
        let mut acc: HashMap<Mono, PolyHG> = HashMap::new();
        for (ma, ca) in &a.terms {
            let da = ca.min_degree().unwrap_or(0);
            for (mb, cb) in &b.terms {
                if da + cb.min_degree().unwrap_or(0) > order {
                    continue;
                }
                let c = ca.mul_trunc(cb, order);
                if c.is_zero() {
                    continue;
                }
                for (m, r) in self.mono_mul(*ma, *mb).iter() {
                    *acc.entry(*m).or_default() += &c.scale(r);
                }
            }
        }
        let mut out = Element::zero(order);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out
    }

    pub fn mul_all(&self, factors: &[&Element]) -> Element {
        let order = factors.iter().map(|e| e.order).min().unwrap_or(u32::MAX);
        factors
            .iter()
            .fold(Element::one(order), |acc, f| self.mul(&acc, f))
    }

    /// Graded commutator `ab - (-1)^{|a||b|} ba`; parities taken per monomial pair.
    pub fn supercommutator(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.mul(a, b);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let s = koszul(ma.parity(), mb.parity());
                let t = self.mul(
                    &Element::term(*mb, cb.clone(), b.order),
                    &Element::term(*ma, ca.clone(), a.order),
                );
                out = out.sub(&t.scale(&rat(s, 1)));
            }
        }
        out
    }

    /// Plain commutator `ab - ba`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn anticommutator(&self, a: &Element, b: &Element) -> Element {
        self.mul(a, b).add(&self.mul(b, a))
    }

    pub fn pow(&self, a: &Element, n: u32) -> Element {
        (0..n).fold(Element::one(a.order), |acc, _| self.mul(&acc, a))
    }

    /// Graded tensor product with the Koszul sign, slotwise PBW normalized.
    pub fn tensor_mul(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement, Error> {
        if a.rank != b.rank {
            return Err(Error::RankMismatch(a.rank, b.rank));
        }
        let order = a.order.min(b.order);
        let rank = a.rank;
        let mut acc: HashMap<[Mono; 3], PolyHG> = HashMap::new();
        for (ka, ca) in &a.terms {
            let da = ca.min_degree().unwrap_or(0);
            for (kb, cb) in &b.terms {
                if da + cb.min_degree().unwrap_or(0) > order {
                    continue;
                }
                let mut c = ca.mul_trunc(cb, order);
                if c.is_zero() {
                    continue;
                }
                if crossing_parity(&ka[..rank], &kb[..rank]) == 1 {
                    c = -c;
                }
                let p0 = self.mono_mul(ka[0], kb[0]);
                let p1 = self.mono_mul(ka[1], kb[1]);
                let p2 = if rank == 3 {
                    self.mono_mul(ka[2], kb[2])
                } else {
                    Arc::new(vec![(Mono::ONE, Rational::one())])
                };
                for (m0, r0) in p0.iter() {
                    for (m1, r1) in p1.iter() {
                        let r01 = r0 * r1;
                        for (m2, r2) in p2.iter() {
                            *acc.entry([*m0, *m1, *m2]).or_default() += &c.scale(&(&r01 * r2));
                        }
                    }
                }
            }
        }
        let mut out = TensorElement::zero(rank, order);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    pub fn tmul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        self.tensor_mul(a, b).expect("tensor rank mismatch")
    }

    pub fn tmul_all(&self, factors: &[&TensorElement]) -> TensorElement {
        let first = factors[0];
        let order = factors.iter().map(|e| e.order).min().unwrap();
        factors[1..]
            .iter()
            .fold(first.truncate(order), |acc, f| self.tmul(&acc, f))
    }

    /// Multiplication map `a ⊗ b ↦ a·b`.
    pub fn flatten(&self, t: &TensorElement) -> Element {
        assert_eq!(t.rank, 2);
        let mut out = Element::zero(t.order);
        for (k, c) in &t.terms {
            for (m, r) in self.mono_mul(k[0], k[1]).iter() {
                out.add_term(*m, &c.scale(r));
            }
        }
        out
    }

    /// `exp(x)` for an element whose coefficients all have positive degree.
    pub fn exp(&self, x: &Element) -> Result<Element, Error> {
        if x.terms.values().any(|c| c.min_degree() == Some(0)) {
            return Err(Error::DivergentExp);
        }
        let mut acc = Element::one(x.order);
        let mut power = Element::one(x.order);
        for k in 1..=x.order as i64 {
            power = self.mul(&power, x).scale(&rat(1, k));
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    /// Sum of `x^k / k!` for `k ≤ terms`; used when `x` is degree-0 but the
    /// caller knows the series terminates (nilpotent or bounded by context).
    pub fn exp_partial(&self, x: &Element, terms: u32) -> Element {
        let mut acc = Element::one(x.order);
        let mut power = Element::one(x.order);
        for k in 1..=terms as i64 {
            power = self.mul(&power, x).scale(&rat(1, k));
            acc = acc.add(&power);
        }
        acc
    }

    /// Inverse of `1 + n` where every coefficient of `n` has positive degree.
    pub fn inverse_unipotent(&self, x: &Element) -> Result<Element, Error> {
        let one = Element::one(x.order);
        let n = x.sub(&one);
        if n.terms.values().any(|c| c.min_degree() == Some(0)) {
            return Err(Error::NotInvertible(
                "element is not 1 plus higher order".into(),
            ));
        }
        let neg = n.neg();
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..x.order {
            power = self.mul(&power, &neg);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    /// `exp(t)` in the graded tensor algebra.
    pub fn tensor_exp(&self, t: &TensorElement) -> Result<TensorElement, Error> {
        if t.terms.values().any(|c| c.min_degree() == Some(0)) {
            return Err(Error::DivergentExp);
        }
        let mut acc = TensorElement::one(t.rank, t.order);
        let mut power = TensorElement::one(t.rank, t.order);
        for k in 1..=t.order as i64 {
            power = self.tmul(&power, t).scale(&rat(1, k));
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    pub fn tensor_inverse_unipotent(&self, t: &TensorElement) -> Result<TensorElement, Error> {
        let one = TensorElement::one(t.rank, t.order);
        let n = t.sub(&one);
        if n.terms.values().any(|c| c.min_degree() == Some(0)) {
            return Err(Error::NotInvertible(
                "tensor is not 1 plus higher order".into(),
            ));
        }
        let neg = n.scale(&rat(-1, 1));
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..t.order {
            power = self.tmul(&power, &neg);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    // ---- undeformed Hopf structure ----

    /// `Δ₀` of a PBW monomial: every generator is primitive, and splitting the
    /// ordered factors between the two slots keeps each slot ordered.
    pub fn coproduct0_mono(&self, m: Mono) -> Vec<((Mono, Mono), Rational)> {
        let mut out: Vec<((Mono, Mono), Rational)> =
            vec![((Mono::ONE, Mono::ONE), Rational::one())];
        for g in Gen::ALL {
            let e = m.exp(g);
            if e == 0 {
                continue;
            }
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for ((l, r), c) in &out {
                for k in 0..=e {
                    // k copies go left, e-k right; left copies cross the right
                    // part already placed
                    let mut c2 = c * binomial(e, k);
                    if g.is_odd() && k == 1 && r.parity() == 1 {
                        c2 = -c2;
                    }
                    let mut nl = *l;
                    nl.0[g.index()] += k;
                    let mut nr = *r;
                    nr.0[g.index()] += e - k;
                    next.push(((nl, nr), c2));
                }
            }
            out = next;
        }
        out
    }

    pub fn coproduct0(&self, x: &Element) -> TensorElement {
        let mut t = TensorElement::zero(2, x.order);
        for (m, c) in &x.terms {
            for ((l, r), q) in self.coproduct0_mono(*m) {
                t.add_term([l, r, Mono::ONE], &c.scale(&q));
            }
        }
        t
    }

    pub fn counit0(&self, x: &Element) -> PolyHG {
        x.counit_part()
    }

    /// `S₀` extended as a graded anti-automorphism with `S₀(x) = -x`.
    pub fn antipode0_mono(&self, m: Mono) -> Element {
        let word = m.word();
        let odd = m.odd_count() as i64;
        let sign = if (word.len() as i64 + odd * (odd - 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        };
        let mut cur: HashMap<Mono, Rational> = HashMap::from([(Mono::ONE, rat(sign, 1))]);
        for x in word.into_iter().rev() {
            let mut next = HashMap::new();
            for (mm, c) in cur {
                for (m2, c2) in self.mono_times_gen(mm, x).iter() {
                    add_comb(&mut next, *m2, &c * c2);
                }
            }
            cur = next;
        }
        let mut e = Element::zero(u32::MAX);
        for (mm, c) in cur {
            e.add_term(mm, &PolyHG::constant(c));
        }
        e
    }

    pub fn antipode0(&self, x: &Element) -> Element {
        let mut out = Element::zero(x.order);
        let mut cache: HashMap<Mono, Element> = HashMap::new();
        for (m, c) in &x.terms {
            let s = cache.entry(*m).or_insert_with(|| self.antipode0_mono(*m));
            for (mm, cc) in &s.terms {
                out.add_term(*mm, &c.mul_trunc(cc, x.order));
            }
        }
        out
    }

    /// `(Δ₀ ⊗ id)` on a rank-2 tensor.
    pub fn coproduct0_left(&self, t: &TensorElement) -> TensorElement {
        assert_eq!(t.rank, 2);
        let mut out = TensorElement::zero(3, t.order);
        for (k, c) in &t.terms {
            for ((l, r), q) in self.coproduct0_mono(k[0]) {
                out.add_term([l, r, k[1]], &c.scale(&q));
            }
        }
        out
    }

    /// `(id ⊗ Δ₀)` on a rank-2 tensor.
    pub fn coproduct0_right(&self, t: &TensorElement) -> TensorElement {
        assert_eq!(t.rank, 2);
        let mut out = TensorElement::zero(3, t.order);
        for (k, c) in &t.terms {
            for ((l, r), q) in self.coproduct0_mono(k[1]) {
                out.add_term([k[0], l, r], &c.scale(&q));
            }
        }
        out
    }

    /// `(ε₀ ⊗ id)` and `(id ⊗ ε₀)` of a rank-2 tensor.
    pub fn counit0_slots(&self, t: &TensorElement) -> (Element, Element) {
        let mut left = Element::zero(t.order);
        let mut right = Element::zero(t.order);
        for (k, c) in &t.terms {
            if k[0].is_one() {
                left.add_term(k[1], c);
            }
            if k[1].is_one() {
                right.add_term(k[0], c);
            }
        }
        (left, right)
    }

    /// `m ∘ (id ⊗ S₀)`.
    pub fn multiply_antipode0_right(&self, t: &TensorElement) -> Element {
        assert_eq!(t.rank, 2);
        let mut out = Element::zero(t.order);
        for (k, c) in &t.terms {
            let s = self.antipode0_mono(k[1]);
            let prod = self.mul(&Element::term(k[0], PolyHG::one(), t.order), &s);
            out = out.add(&prod.scale_poly(c));
        }
        out
    }

    /// Apply a slotwise map given by images of generators: each slot is sent
    /// through `f` multiplicatively. Used for `(Δ ⊗ id)` with twisted tables.
    pub fn map_slot_multiplicative<F>(&self, m: Mono, order: u32, f: &F) -> TensorElement
    where
        F: Fn(Gen) -> TensorElement,
    {
        let mut acc = TensorElement::one(2, order);
        for g in m.word() {
            acc = self.tmul(&acc, &f(g));
        }
        acc
    }
}

fn binomial(n: u8, k: u8) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r *= rat((n - i) as i64, (i + 1) as i64);
    }
    r
}

#[cfg(test)]
mod tests;
