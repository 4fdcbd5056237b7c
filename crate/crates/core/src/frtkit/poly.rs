//! Generators of the supermatrix `M`, words, and noncommutative polynomials.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::scalars::{rat, PolyHG, Rational};
use crate::Error;

/// Entries of `M = [[e, Ψ], [Θ, T]]` with `Ψ = (ξ, η)`, `Θ = (γ, δ)ᵀ`,
/// `T = [[a, b], [c, d]]`, in rewriting order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FrtGen {
    E,
    Xi,
    Eta,
    Gamma,
    Delta,
    A,
    B,
    C,
    D,
}

pub const NUM_FRT: usize = 9;

impl FrtGen {
    pub const ALL: [FrtGen; NUM_FRT] = [
        FrtGen::E,
        FrtGen::Xi,
        FrtGen::Eta,
        FrtGen::Gamma,
        FrtGen::Delta,
        FrtGen::A,
        FrtGen::B,
        FrtGen::C,
        FrtGen::D,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> FrtGen {
        Self::ALL[i]
    }

    /// Row and column in `M`; index 0 is the even basis vector.
    pub fn position(self) -> (usize, usize) {
        use FrtGen::*;
        match self {
            E => (0, 0),
            Xi => (0, 1),
            Eta => (0, 2),
            Gamma => (1, 0),
            Delta => (2, 0),
            A => (1, 1),
            B => (1, 2),
            C => (2, 1),
            D => (2, 2),
        }
    }

    pub fn at(row: usize, col: usize) -> FrtGen {
        *Self::ALL
            .iter()
            .find(|g| g.position() == (row, col))
            .expect("index within 3x3")
    }

    pub fn parity(self) -> u8 {
        let (i, j) = self.position();
        (u8::from(i > 0) + u8::from(j > 0)) % 2
    }

    pub fn is_odd(self) -> bool {
        self.parity() == 1
    }

    /// `w(i) - w(j)` with basis weights `w = (0, 1, -1)`, the `H`-weights
    /// of the fundamental representation.
    pub fn weight(self) -> i32 {
        const W: [i32; 3] = [0, 1, -1];
        let (i, j) = self.position();
        W[i] - W[j]
    }

    pub fn name(self) -> &'static str {
        ["e", "xi", "eta", "gamma", "delta", "a", "b", "c", "d"][self.index()]
    }
}

impl fmt::Display for FrtGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FrtGen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .iter()
            .copied()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

/// Word in the generators. Words are ordered by length, then by total
/// weight (higher is larger), then lexicographically; every deformation
/// term of a relation has strictly lower weight than its classical part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<FrtGen>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn from_gens(gs: &[FrtGen]) -> Self {
        Self(gs.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> i32 {
        self.0.iter().map(|g| g.weight()).sum()
    }

    pub fn parity(&self) -> u8 {
        (self.0.iter().map(|g| g.parity() as usize).sum::<usize>() % 2) as u8
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn push(&self, g: FrtGen) -> Word {
        let mut v = self.0.clone();
        v.push(g);
        Word(v)
    }

    /// Parse a space-separated word such as `"xi e"`.
    pub fn parse(s: &str) -> Result<Word, Error> {
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&o.0.len())
            .then_with(|| self.weight().cmp(&o.weight()))
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.0.iter().map(|g| g.name()).collect();
        f.write_str(&names.join(" "))
    }
}

/// Linear combination of words with `(h,g)`-polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, PolyHG>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, PolyHG::one())
    }

    pub fn gen(g: FrtGen) -> Self {
        Self::word(Word(vec![g]))
    }

    pub fn gens(gs: &[FrtGen]) -> Self {
        Self::word(Word::from_gens(gs))
    }

    pub fn term(w: Word, c: PolyHG) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn scalar(c: PolyHG) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn add_term(&mut self, w: Word, c: &PolyHG) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &PolyHG)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> PolyHG {
        self.terms.get(w).cloned().unwrap_or_else(PolyHG::zero)
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

    /// Largest word under the word order.
    pub fn leading(&self) -> Option<(&Word, &PolyHG)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, o: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &NcPoly) -> NcPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&rat(-1, 1))
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        self.scale_poly(&PolyHG::constant(c.clone()))
    }

    pub fn scale_poly(&self, c: &PolyHG) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(d * c));
        }
        out
    }

    /// Free (unreduced) product of words.
    pub fn concat(&self, o: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                out.add_term(a.concat(b), &(c * d));
            }
        }
        out
    }

    pub fn specialize(&self, h: Option<&Rational>, g: Option<&Rational>) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &c.specialize(h, g));
        }
        out
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &PolyHG> {
        self.terms.values()
    }

    /// Every term has the given parity.
    pub fn is_homogeneous(&self, parity: u8) -> bool {
        self.terms.keys().all(|w| w.parity() == parity)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c}) {w}")?;
            }
        }
        Ok(())
    }
}

/// JSON term `{"coeff": poly, "word": [gens]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: PolyHG,
    pub word: Vec<String>,
}

impl NcPoly {
    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| TermJson {
                coeff: c.clone(),
                word: w.0.iter().map(|g| g.name().to_string()).collect(),
            })
            .collect()
    }
}
