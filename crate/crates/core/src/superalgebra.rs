//! Lie superalgebra presentations: generators with parities and structure
//! constants, with graded antisymmetry and graded Jacobi audits.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::scalars::{parse_rational, rat, Rational};
use crate::Error;

/// Generators of `sl(1/2)` in the fixed PBW order `Z < H < Xp < Xm < vp < vm < vbp < vbm`.
/// The even four span the `gl(2)` subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Z = 0,
    H = 1,
    Xp = 2,
    Xm = 3,
    Vp = 4,
    Vm = 5,
    Vbp = 6,
    Vbm = 7,
}

pub const NUM_GENS: usize = 8;

impl Gen {
    pub const ALL: [Gen; NUM_GENS] = [
        Gen::Z,
        Gen::H,
        Gen::Xp,
        Gen::Xm,
        Gen::Vp,
        Gen::Vm,
        Gen::Vbp,
        Gen::Vbm,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Gen {
        Gen::ALL[i]
    }

    pub fn is_odd(self) -> bool {
        self.index() >= 4
    }

    pub fn parity(self) -> u8 {
        self.is_odd() as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Z => "Z",
            Gen::H => "H",
            Gen::Xp => "Xp",
            Gen::Xm => "Xm",
            Gen::Vp => "vp",
            Gen::Vm => "vm",
            Gen::Vbp => "vbp",
            Gen::Vbm => "vbm",
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Gen::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

/// Sign `(-1)^{|x||y|}`.
pub fn koszul(px: u8, py: u8) -> i64 {
    if px & py & 1 == 1 {
        -1
    } else {
        1
    }
}

/// Linear combination of generators.
pub type LinComb = BTreeMap<Gen, Rational>;

fn add_into(acc: &mut LinComb, g: Gen, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(g).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&g);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    name: String,
    generators: Vec<Gen>,
    // one orientation per unordered pair, keyed with x <= y
    brackets: BTreeMap<(Gen, Gen), LinComb>,
}

impl Presentation {
    pub fn new(name: impl Into<String>, generators: Vec<Gen>) -> Self {
        Self {
            name: name.into(),
            generators,
            brackets: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Gen] {
        &self.generators
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.generators.contains(&g)
    }

    /// Set `[x, y] = rhs`; the opposite orientation is implied by graded antisymmetry.
    pub fn set_bracket(&mut self, x: Gen, y: Gen, rhs: &[(Gen, Rational)]) {
        let mut lc = LinComb::new();
        for (g, c) in rhs {
            add_into(&mut lc, *g, c.clone());
        }
        if x <= y {
            self.brackets.insert((x, y), lc);
        } else {
            let s = rat(-koszul(x.parity(), y.parity()), 1);
            let flipped = lc.into_iter().map(|(g, c)| (g, c * &s)).collect();
            self.brackets.insert((y, x), flipped);
        }
    }

    /// Graded bracket of two generators.
    pub fn bracket(&self, x: Gen, y: Gen) -> Result<LinComb, Error> {
        for g in [x, y] {
            if !self.contains(g) {
                return Err(Error::UnknownGenerator(g.name().into()));
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: Gen, y: Gen) -> LinComb {
        if x <= y {
            self.brackets.get(&(x, y)).cloned().unwrap_or_default()
        } else {
            let s = rat(-koszul(x.parity(), y.parity()), 1);
            self.brackets
                .get(&(y, x))
                .map(|lc| lc.iter().map(|(g, c)| (*g, c * &s)).collect())
                .unwrap_or_default()
        }
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_lin(&self, a: &LinComb, b: &LinComb) -> LinComb {
        let mut out = LinComb::new();
        for (x, cx) in a {
            for (y, cy) in b {
                for (z, cz) in self.bracket_unchecked(*x, *y) {
                    add_into(&mut out, z, cx * cy * cz);
                }
            }
        }
        out
    }

    /// Residual of the graded Jacobi identity
    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`.
    pub fn jacobi_residual(&self, x: Gen, y: Gen, z: Gen) -> LinComb {
        let single = |g: Gen| LinComb::from([(g, Rational::one())]);
        let mut out = LinComb::new();
        let cyc = [(x, y, z), (y, z, x), (z, x, y)];
        for (a, b, c) in cyc {
            let s = rat(koszul(a.parity(), c.parity()), 1);
            let inner = self.bracket_lin(&single(b), &single(c));
            for (g, v) in self.bracket_lin(&single(a), &inner) {
                add_into(&mut out, g, v * &s);
            }
        }
        out
    }

    /// Every generator triple with nonzero graded-Jacobi residual, plus every
    /// stored bracket with mismatched parity.
    pub fn validate(&self) -> ValidationReport {
        let mut jacobi = Vec::new();
        for &x in &self.generators {
            for &y in &self.generators {
                for &z in &self.generators {
                    let r = self.jacobi_residual(x, y, z);
                    if !r.is_empty() {
                        jacobi.push(((x, y, z), r));
                    }
                }
            }
        }
        let mut parity = Vec::new();
        let mut closure = Vec::new();
        for ((x, y), rhs) in &self.brackets {
            let p = x.parity() ^ y.parity();
            if rhs.keys().any(|g| g.parity() != p) {
                parity.push((*x, *y));
            }
            if rhs.keys().any(|g| !self.contains(*g)) {
                closure.push((*x, *y));
            }
        }
        ValidationReport {
            triples_checked: self.generators.len().pow(3),
            jacobi_failures: jacobi,
            parity_failures: parity,
            closure_failures: closure,
        }
    }

    /// Graded antisymmetry `[x,y] = -(-1)^{|x||y|}[y,x]` on every pair.
    pub fn antisymmetry_holds(&self) -> bool {
        self.generators.iter().all(|&x| {
            self.generators.iter().all(|&y| {
                let s = rat(-koszul(x.parity(), y.parity()), 1);
                let xy = self.bracket_unchecked(x, y);
                let yx: LinComb = self
                    .bracket_unchecked(y, x)
                    .into_iter()
                    .map(|(g, c)| (g, c * &s))
                    .collect();
                xy == yx
            })
        })
    }

    /// Restrict to a subset of generators, keeping only brackets among them.
    pub fn restrict(&self, name: &str, gens: &[Gen]) -> Presentation {
        let mut p = Presentation::new(name, gens.to_vec());
        for ((x, y), rhs) in &self.brackets {
            if gens.contains(x) && gens.contains(y) {
                p.brackets.insert((*x, *y), rhs.clone());
            }
        }
        p
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self
                .generators
                .iter()
                .map(|g| GenJson {
                    name: g.name().into(),
                    parity: if g.is_odd() { "odd" } else { "even" }.into(),
                })
                .collect(),
            brackets: self
                .brackets
                .iter()
                .filter(|(_, rhs)| !rhs.is_empty())
                .map(|((x, y), rhs)| BracketJson {
                    x: x.name().into(),
                    y: y.name().into(),
                    rhs: rhs
                        .iter()
                        .map(|(g, c)| CoeffJson {
                            gen: g.name().into(),
                            coeff: c.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(name: &str, j: &PresentationJson) -> Result<Self, Error> {
        let mut gens = Vec::new();
        for gj in &j.generators {
            let g: Gen = gj.name.parse()?;
            let odd = match gj.parity.as_str() {
                "odd" => true,
                "even" => false,
                other => return Err(Error::Parse(format!("bad parity {other:?}"))),
            };
            if odd != g.is_odd() {
                return Err(Error::Parse(format!("generator {} has wrong parity", g)));
            }
            gens.push(g);
        }
        let mut p = Presentation::new(name, gens);
        for b in &j.brackets {
            let x: Gen = b.x.parse()?;
            let y: Gen = b.y.parse()?;
            let rhs = b
                .rhs
                .iter()
                .map(|c| Ok((c.gen.parse()?, parse_rational(&c.coeff)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            p.set_bracket(x, y, &rhs);
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub triples_checked: usize,
    pub jacobi_failures: Vec<((Gen, Gen, Gen), LinComb)>,
    pub parity_failures: Vec<(Gen, Gen)>,
    pub closure_failures: Vec<(Gen, Gen)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.jacobi_failures.is_empty()
            && self.parity_failures.is_empty()
            && self.closure_failures.is_empty()
    }
}

/// True iff every bracket among `sub`'s generators, computed in `sup`, stays
/// inside `sub`'s span and agrees with `sub`'s own table.
pub fn subalgebra_check(sub: &Presentation, sup: &Presentation) -> bool {
    if !sub.generators.iter().all(|g| sup.contains(*g)) {
        return false;
    }
    sub.generators.iter().all(|&x| {
        sub.generators.iter().all(|&y| {
            let big = sup.bracket_unchecked(x, y);
            big.keys().all(|g| sub.contains(*g)) && big == sub.bracket_unchecked(x, y)
        })
    })
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct GenJson {
    pub name: String,
    pub parity: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CoeffJson {
    pub gen: String,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct BracketJson {
    pub x: String,
    pub y: String,
    pub rhs: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct PresentationJson {
    pub generators: Vec<GenJson>,
    pub brackets: Vec<BracketJson>,
}

fn one() -> Rational {
    Rational::one()
}

fn set_gl2_brackets(p: &mut Presentation) {
    use Gen::*;
    p.set_bracket(H, Xp, &[(Xp, rat(2, 1))]);
    p.set_bracket(H, Xm, &[(Xm, rat(-2, 1))]);
    p.set_bracket(Xp, Xm, &[(H, one())]);
}

/// `gl(2)`: `[H, X±] = ±2X±`, `[X+, X-] = H`, `Z` central.
pub fn gl2() -> Presentation {
    use Gen::*;
    let mut p = Presentation::new("gl2", vec![Z, H, Xp, Xm]);
    set_gl2_brackets(&mut p);
    p
}

/// `sl(1/2)` with even part `gl(2)` and odd generators `v±`, `vb±`.
pub fn sl12() -> Presentation {
    use Gen::*;
    let mut p = Presentation::new("sl12", Gen::ALL.to_vec());
    set_gl2_brackets(&mut p);
    let m1 = rat(-1, 1);
    let half = rat(1, 2);
    // [X±, v∓] = -v±, [X±, vb∓] = vb±
    p.set_bracket(Xp, Vm, &[(Vp, m1.clone())]);
    p.set_bracket(Xm, Vp, &[(Vm, m1.clone())]);
    p.set_bracket(Xp, Vbm, &[(Vbp, one())]);
    p.set_bracket(Xm, Vbp, &[(Vbm, one())]);
    // [Z, v±] = v±, [Z, vb±] = -vb±
    p.set_bracket(Z, Vp, &[(Vp, one())]);
    p.set_bracket(Z, Vm, &[(Vm, one())]);
    p.set_bracket(Z, Vbp, &[(Vbp, m1.clone())]);
    p.set_bracket(Z, Vbm, &[(Vbm, m1.clone())]);
    // [H, v±] = ±v±, [H, vb±] = ±vb±
    p.set_bracket(H, Vp, &[(Vp, one())]);
    p.set_bracket(H, Vm, &[(Vm, m1.clone())]);
    p.set_bracket(H, Vbp, &[(Vbp, one())]);
    p.set_bracket(H, Vbm, &[(Vbm, m1)]);
    // {v±, vb±} = X±, {vb±, v∓} = (Z ± H)/2
    p.set_bracket(Vp, Vbp, &[(Xp, one())]);
    p.set_bracket(Vm, Vbm, &[(Xm, one())]);
    p.set_bracket(Vbp, Vm, &[(Z, half.clone()), (H, half.clone())]);
    p.set_bracket(Vbm, Vp, &[(Z, half.clone()), (H, -half)]);
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use Gen::*;

    fn lc(items: &[(Gen, Rational)]) -> LinComb {
        items.iter().cloned().collect()
    }

    #[test]
    fn gl2_bracket_values() {
        let p = gl2();
        assert_eq!(p.bracket(H, Xp).unwrap(), lc(&[(Xp, rat(2, 1))]));
        assert_eq!(p.bracket(Xm, Xp).unwrap(), lc(&[(H, rat(-1, 1))]));
        assert!(p.bracket(Z, Xm).unwrap().is_empty());
        assert!(p.bracket(Vp, H).is_err());
    }

    #[test]
    fn sl12_anticommutators() {
        let p = sl12();
        assert_eq!(p.bracket(Vp, Vbp).unwrap(), lc(&[(Xp, one())]));
        assert_eq!(p.bracket(Vbp, Vp).unwrap(), lc(&[(Xp, one())]));
        assert_eq!(
            p.bracket(Vbp, Vm).unwrap(),
            lc(&[(Z, rat(1, 2)), (H, rat(1, 2))])
        );
        assert!(p.bracket(Vp, Vp).unwrap().is_empty());
        assert!(p.bracket(Vp, Vm).unwrap().is_empty());
    }

    #[test]
    fn both_presentations_validate() {
        for p in [gl2(), sl12()] {
            let r = p.validate();
            assert!(r.is_valid(), "{}: {:?}", p.name(), r.jacobi_failures);
            assert!(p.antisymmetry_holds());
        }
        assert_eq!(sl12().validate().triples_checked, 512);
    }

    #[test]
    fn mutated_sl12_fails_jacobi() {
        let mut p = sl12();
        p.set_bracket(Vbp, Vm, &[(Z, rat(1, 2)), (H, rat(-1, 2))]);
        assert!(!p.validate().jacobi_failures.is_empty());
    }

    #[test]
    fn subalgebras() {
        let sl = sl12();
        assert!(subalgebra_check(&gl2(), &sl));
        assert!(subalgebra_check(&sl.restrict("z", &[Z]), &sl));
        assert!(!subalgebra_check(&sl.restrict("bad", &[H, Xp, Vm]), &sl));
    }

    #[test]
    fn json_round_trip() {
        let p = sl12();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let back = Presentation::from_json("sl12", &serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, p);
    }
}
