//! Oriented quadratic rewriting with memoized normal forms.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use super::poly::{FrtGen, NcPoly, Word, NUM_FRT};
use crate::scalars::{PolyHG, Rational};
use crate::Error;

/// Limits on a single reduction session: longest intermediate word and
/// number of rule applications, cached or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_len: usize,
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_len: 8,
            max_steps: 100_000,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self {
            max_len: usize::MAX,
            max_steps: usize::MAX,
        }
    }

    /// Parse `steps=K,len=L` (either part optional).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let mut b = Self::default();
        for part in s.split(',').filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("budget item {part}")))?;
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("budget value {v}")))?;
            match k.trim() {
                "steps" => b.max_steps = n,
                "len" => b.max_len = n,
                other => return Err(Error::Parse(format!("budget key {other}"))),
            }
        }
        Ok(b)
    }
}

type Cache = RwLock<HashMap<(Word, FrtGen), Arc<NcPoly>>>;

/// Rules `y x → rhs` indexed by the ordered pair `(y, x)`.
pub struct RewriteSystem {
    rules: Vec<Option<NcPoly>>,
    cache: Cache,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        Self::new(self.rules.clone())
    }
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("rules", &self.rule_count())
            .finish()
    }
}

fn slot(y: FrtGen, x: FrtGen) -> usize {
    y.index() * NUM_FRT + x.index()
}

impl RewriteSystem {
    pub fn new(rules: Vec<Option<NcPoly>>) -> Self {
        assert_eq!(rules.len(), NUM_FRT * NUM_FRT);
        Self {
            rules,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn from_rules(rules: impl IntoIterator<Item = ((FrtGen, FrtGen), NcPoly)>) -> Self {
        let mut table = vec![None; NUM_FRT * NUM_FRT];
        for ((y, x), rhs) in rules {
            table[slot(y, x)] = Some(rhs);
        }
        Self::new(table)
    }

    pub fn rule(&self, y: FrtGen, x: FrtGen) -> Option<&NcPoly> {
        self.rules[slot(y, x)].as_ref()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.iter().filter(|r| r.is_some()).count()
    }

    pub fn rules(&self) -> impl Iterator<Item = ((FrtGen, FrtGen), &NcPoly)> {
        self.rules.iter().enumerate().filter_map(|(i, r)| {
            r.as_ref().map(|r| {
                (
                    (
                        FrtGen::from_index(i / NUM_FRT),
                        FrtGen::from_index(i % NUM_FRT),
                    ),
                    r,
                )
            })
        })
    }

    pub fn specialize(&self, h: Option<&Rational>, g: Option<&Rational>) -> Self {
        Self::new(
            self.rules
                .iter()
                .map(|r| r.as_ref().map(|p| p.specialize(h, g)))
                .collect(),
        )
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        w.0.windows(2).all(|p| self.rule(p[0], p[1]).is_none())
    }

    /// All normal words of length `n`.
    pub fn normal_words(&self, n: usize) -> Vec<Word> {
        let mut words = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &words {
                for g in FrtGen::ALL {
                    if w.0.last().is_none_or(|&y| self.rule(y, g).is_none()) {
                        next.push(w.push(g));
                    }
                }
            }
            words = next;
        }
        words
    }

    pub fn reducer(&self, budget: Budget) -> Reducer<'_> {
        Reducer {
            sys: self,
            budget,
            steps: 0,
        }
    }

    /// Normal form without a budget.
    pub fn nf(&self, p: &NcPoly) -> NcPoly {
        self.reducer(Budget::unlimited())
            .normal_form(p)
            .expect("unbounded reduction")
    }

    /// Product of `a` (normal) and `b` (any), normalized, without a budget.
    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        self.reducer(Budget::unlimited())
            .mul(a, b)
            .expect("unbounded reduction")
    }

    pub fn mul_all(&self, fs: &[&NcPoly]) -> NcPoly {
        let mut acc = NcPoly::one();
        for f in fs {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Overlaps `z y x` with rules on both `z y` and `y x` whose two
    /// one-step reductions have different normal forms.
    pub fn confluence_failures(&self) -> Vec<(Word, NcPoly)> {
        let mut out = Vec::new();
        for ((z, y), left) in self.rules() {
            for x in FrtGen::ALL {
                let Some(right) = self.rule(y, x) else {
                    continue;
                };
                let p1 = self.nf(&left.concat(&NcPoly::gen(x)));
                let p2 = self.nf(&NcPoly::gen(z).concat(right));
                let d = p1.sub(&p2);
                if !d.is_zero() {
                    out.push((Word(vec![z, y, x]), d));
                }
            }
        }
        out
    }

    /// Number of overlap ambiguities examined by the confluence audit.
    pub fn overlap_count(&self) -> usize {
        self.rules()
            .map(|((_, y), _)| {
                FrtGen::ALL
                    .iter()
                    .filter(|&&x| self.rule(y, x).is_some())
                    .count()
            })
            .sum()
    }
}

/// One budgeted reduction session.
pub struct Reducer<'a> {
    sys: &'a RewriteSystem,
    budget: Budget,
    steps: usize,
}

impl Reducer<'_> {
    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Normal form of `w·x` for a normal word `w`.
    fn times_letter(&mut self, w: &Word, x: FrtGen) -> Result<Arc<NcPoly>, Error> {
        if w.len() + 1 > self.budget.max_len {
            return Err(Error::BudgetExhausted);
        }
        let rule = w.0.last().and_then(|&y| self.sys.rule(y, x));
        if rule.is_some() {
            self.steps += 1;
            if self.steps > self.budget.max_steps {
                return Err(Error::BudgetExhausted);
            }
        }
        let key = (w.clone(), x);
        if let Some(r) = self.sys.cache.read().unwrap().get(&key) {
            return Ok(r.clone());
        }
        let result = match rule {
            None => NcPoly::word(w.push(x)),
            Some(rhs) => {
                let prefix = Word(w.0[..w.len() - 1].to_vec());
                let mut out = NcPoly::zero();
                for (u, c) in rhs.terms() {
                    let mut cur = NcPoly::word(prefix.clone());
                    for &letter in &u.0 {
                        cur = self.poly_times_letter(&cur, letter)?;
                    }
                    out = out.add(&cur.scale_poly(c));
                }
                out
            }
        };
        let result = Arc::new(result);
        self.sys.cache.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    fn poly_times_letter(&mut self, p: &NcPoly, x: FrtGen) -> Result<NcPoly, Error> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let r = self.times_letter(w, x)?;
            for (v, d) in r.terms() {
                out.add_term(v.clone(), &(c * d));
            }
        }
        Ok(out)
    }

    fn append_word(&mut self, p: NcPoly, w: &Word) -> Result<NcPoly, Error> {
        let mut cur = p;
        for &x in &w.0 {
            cur = self.poly_times_letter(&cur, x)?;
        }
        Ok(cur)
    }

    pub fn normal_form(&mut self, p: &NcPoly) -> Result<NcPoly, Error> {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            let r = self.append_word(NcPoly::one(), w)?;
            out = out.add(&r.scale_poly(c));
        }
        Ok(out)
    }

    /// Product of `a` (normal) and `b` (any), normalized.
    pub fn mul(&mut self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly, Error> {
        let mut out = NcPoly::zero();
        for (w, c) in b.terms() {
            let r = self.append_word(a.clone(), w)?;
            out = out.add(&r.scale_poly(c));
        }
        Ok(out)
    }
}

/// Coefficient vector of `p` over the listed words (for linear algebra).
pub fn coefficient_vector(p: &NcPoly, words: &[Word]) -> Vec<PolyHG> {
    words.iter().map(|w| p.coeff(w)).collect()
}
