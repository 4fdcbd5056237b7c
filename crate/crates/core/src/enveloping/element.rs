use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::mono::Mono;
use crate::scalars::poly::TermJson;
use crate::scalars::{PolyHG, Rational};
use crate::superalgebra::{Gen, NUM_GENS};

fn accumulate<K: Ord>(map: &mut BTreeMap<K, PolyHG>, k: K, c: &PolyHG) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Element of `U ⊗ Q[h,g] / (h,g)^{order+1}`: PBW monomials with polynomial
/// coefficients truncated at total degree `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    pub(crate) terms: BTreeMap<Mono, PolyHG>,
    pub(crate) order: u32,
}

impl Element {
    pub fn zero(order: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn one(order: u32) -> Self {
        Self::term(Mono::ONE, PolyHG::one(), order)
    }

    pub fn scalar(c: PolyHG, order: u32) -> Self {
        Self::term(Mono::ONE, c, order)
    }

    pub fn gen(g: Gen, order: u32) -> Self {
        Self::term(Mono::gen(g), PolyHG::one(), order)
    }

    pub fn term(m: Mono, c: PolyHG, order: u32) -> Self {
        let mut e = Self::zero(order);
        e.add_term(m, &c);
        e
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &PolyHG)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> PolyHG {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Mono, c: &PolyHG) {
        let c = c.truncate(self.order);
        accumulate(&mut self.terms, m, &c);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = Self {
            terms: self.terms.clone(),
            order: self.order.min(o.order),
        };
        for (m, c) in &o.terms {
            out.add_term(*m, c);
        }
        out.retruncate()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.order);
        if c.is_zero() {
            return out;
        }
        for (m, p) in &self.terms {
            out.terms.insert(*m, p.scale(c));
        }
        out
    }

    /// Multiply every coefficient by a polynomial.
    pub fn scale_poly(&self, c: &PolyHG) -> Self {
        let mut out = Self::zero(self.order);
        for (m, p) in &self.terms {
            out.add_term(*m, &p.mul_trunc(c, self.order));
        }
        out
    }

    pub fn truncate(&self, order: u32) -> Self {
        let mut out = Self::zero(order.min(self.order));
        for (m, c) in &self.terms {
            out.add_term(*m, c);
        }
        out
    }

    fn retruncate(mut self) -> Self {
        let order = self.order;
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| (m, c.truncate(order)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        self
    }

    /// Smallest total `(h,g)`-degree over all coefficients.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.min_degree()).min()
    }

    /// Parity if all monomials agree.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    /// Constant part (coefficient of the empty monomial).
    pub fn counit_part(&self) -> PolyHG {
        self.coeff(&Mono::ONE)
    }

    pub fn supported_on(&self, gens: &[Gen]) -> bool {
        self.terms.keys().all(|m| m.supported_on(gens))
    }

    /// Substitute rational values for `h` and/or `g`.
    pub fn specialize(&self, h: Option<&Rational>, g: Option<&Rational>) -> Self {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, &c.specialize(h, g));
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", c, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({})", self.order, self)
    }
}

pub(crate) type Slots = [Mono; 3];

/// Element of the graded tensor power of rank 2 or 3. Unused slots hold the
/// identity monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    pub(crate) rank: usize,
    pub(crate) terms: BTreeMap<Slots, PolyHG>,
    pub(crate) order: u32,
}

impl TensorElement {
    pub fn zero(rank: usize, order: u32) -> Self {
        assert!(rank == 2 || rank == 3, "tensor rank must be 2 or 3");
        Self {
            rank,
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn one(rank: usize, order: u32) -> Self {
        let mut t = Self::zero(rank, order);
        t.add_term([Mono::ONE; 3], &PolyHG::one());
        t
    }

    /// `a ⊗ b`.
    pub fn pure2(a: &Element, b: &Element) -> Self {
        let mut t = Self::zero(2, a.order.min(b.order));
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                t.add_term([*ma, *mb, Mono::ONE], &ca.mul_trunc(cb, t.order));
            }
        }
        t
    }

    /// `a ⊗ b ⊗ c`.
    pub fn pure3(a: &Element, b: &Element, c: &Element) -> Self {
        let order = a.order.min(b.order).min(c.order);
        let mut t = Self::zero(3, order);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let cab = ca.mul_trunc(cb, order);
                for (mc, cc) in &c.terms {
                    t.add_term([*ma, *mb, *mc], &cab.mul_trunc(cc, order));
                }
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Mono], &PolyHG)> {
        let r = self.rank;
        self.terms.iter().map(move |(k, c)| (&k[..r], c))
    }

    pub fn coeff(&self, slots: &[Mono]) -> PolyHG {
        let mut k = [Mono::ONE; 3];
        k[..slots.len()].copy_from_slice(slots);
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, k: Slots, c: &PolyHG) {
        let c = c.truncate(self.order);
        accumulate(&mut self.terms, k, &c);
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.rank, o.rank, "rank mismatch");
        let mut out = Self {
            rank: self.rank,
            terms: self.terms.clone(),
            order: self.order.min(o.order),
        };
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        out.retruncate()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.rank, self.order);
        if c.is_zero() {
            return out;
        }
        for (k, p) in &self.terms {
            out.terms.insert(*k, p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, c: &PolyHG) -> Self {
        let mut out = Self::zero(self.rank, self.order);
        for (k, p) in &self.terms {
            out.add_term(*k, &p.mul_trunc(c, self.order));
        }
        out
    }

    pub fn truncate(&self, order: u32) -> Self {
        let mut out = Self::zero(self.rank, order.min(self.order));
        for (k, c) in &self.terms {
            out.add_term(*k, c);
        }
        out
    }

    fn retruncate(mut self) -> Self {
        let order = self.order;
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| (m, c.truncate(order)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        self
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(|c| c.min_degree()).min()
    }

    /// Graded flip `a ⊗ b ↦ (-1)^{|a||b|} b ⊗ a`.
    pub fn flip(&self) -> Self {
        assert_eq!(self.rank, 2);
        let mut out = Self::zero(2, self.order);
        for (k, c) in &self.terms {
            let c = if k[0].parity() & k[1].parity() == 1 {
                -c
            } else {
                c.clone()
            };
            out.add_term([k[1], k[0], Mono::ONE], &c);
        }
        out
    }

    /// Place a rank-2 tensor into two of three slots: `(0,1)`, `(1,2)` or `(0,2)`.
    /// Only the identity fills the remaining slot, so no sign arises.
    pub fn embed(&self, slots: (usize, usize)) -> Self {
        assert_eq!(self.rank, 2);
        assert!(slots.0 < slots.1 && slots.1 < 3);
        let mut out = Self::zero(3, self.order);
        for (k, c) in &self.terms {
            let mut nk = [Mono::ONE; 3];
            nk[slots.0] = k[0];
            nk[slots.1] = k[1];
            out.add_term(nk, c);
        }
        out
    }

    pub fn specialize(&self, h: Option<&Rational>, g: Option<&Rational>) -> Self {
        let mut out = Self::zero(self.rank, self.order);
        for (k, c) in &self.terms {
            out.add_term(*k, &c.specialize(h, g));
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*", c)?;
            for (s, m) in k[..self.rank].iter().enumerate() {
                if s > 0 {
                    write!(f, "⊗")?;
                }
                write!(f, "{}", m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor{}[{}]({})", self.rank, self.order, self)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ElementTermJson {
    pub mono: [u8; NUM_GENS],
    pub coeff: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ElementJson {
    pub terms: Vec<ElementTermJson>,
    pub order: u32,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TensorTermJson {
    pub monos: Vec<[u8; NUM_GENS]>,
    pub coeff: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TensorJson {
    pub rank: usize,
    pub terms: Vec<TensorTermJson>,
    pub order: u32,
}

impl Element {
    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ElementTermJson {
                    mono: m.0,
                    coeff: c.to_json_terms(),
                })
                .collect(),
            order: self.order,
        }
    }

    pub fn from_json(j: &ElementJson) -> Result<Self, crate::Error> {
        let mut e = Self::zero(j.order);
        for t in &j.terms {
            check_odd_exponents(&t.mono)?;
            e.add_term(Mono(t.mono), &PolyHG::from_json_terms(&t.coeff)?);
        }
        Ok(e)
    }
}

impl TensorElement {
    pub fn to_json(&self) -> TensorJson {
        TensorJson {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TensorTermJson {
                    monos: k[..self.rank].iter().map(|m| m.0).collect(),
                    coeff: c.to_json_terms(),
                })
                .collect(),
            order: self.order,
        }
    }

    pub fn from_json(j: &TensorJson) -> Result<Self, crate::Error> {
        if j.rank != 2 && j.rank != 3 {
            return Err(crate::Error::Parse(format!("bad rank {}", j.rank)));
        }
        let mut t = Self::zero(j.rank, j.order);
        for term in &j.terms {
            if term.monos.len() != j.rank {
                return Err(crate::Error::RankMismatch(term.monos.len(), j.rank));
            }
            let mut k = [Mono::ONE; 3];
            for (s, m) in term.monos.iter().enumerate() {
                check_odd_exponents(m)?;
                k[s] = Mono(*m);
            }
            t.add_term(k, &PolyHG::from_json_terms(&term.coeff)?);
        }
        Ok(t)
    }
}

fn check_odd_exponents(m: &[u8; NUM_GENS]) -> Result<(), crate::Error> {
    if m[4..].iter().any(|&e| e > 1) {
        return Err(crate::Error::Parse(
            "odd generator with exponent > 1".into(),
        ));
    }
    Ok(())
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
