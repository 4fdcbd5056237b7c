//! Polynomials in the two deformation parameters `h` and `g` over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{rat, Rational};

/// Exponent pair `(i, j)` standing for `h^i g^j`.
pub type Exp = (u32, u32);

/// Graded lexicographic comparison with `h > g`.
pub fn grlex_cmp(a: &Exp, b: &Exp) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

/// Exact polynomial in `h`, `g` with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyHG {
    terms: BTreeMap<Exp, Rational>,
}

impl PolyHG {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n, 1))
    }

    pub fn h() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn g() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn add_term(&mut self, e: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lowest total degree of a stored term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_h(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_g(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// Leading term under grlex with `h > g`.
    pub fn leading(&self) -> Option<(Exp, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex_cmp(a.0, b.0))
            .map(|(e, c)| (*e, c.clone()))
    }

    /// Drop every term of total degree above `order`.
    pub fn truncate(&self, order: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j <= order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply, discarding every product term above total degree `order`.
    pub fn mul_trunc(&self, other: &Self, order: u32) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            if i1 + j1 > order {
                continue;
            }
            for ((i2, j2), c2) in &other.terms {
                if i1 + j1 + i2 + j2 > order {
                    continue;
                }
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    /// In-place `self += a * b * r`, truncated at `order`.
    pub fn add_product(&mut self, a: &Self, b: &Self, r: &Rational, order: u32) {
        for ((i1, j1), c1) in &a.terms {
            if i1 + j1 > order {
                continue;
            }
            let c1r = c1 * r;
            for ((i2, j2), c2) in &b.terms {
                if i1 + j1 + i2 + j2 > order {
                    continue;
                }
                self.add_term((i1 + i2, j1 + j2), &c1r * c2);
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Substitute rational values for `h` and/or `g`.
    pub fn specialize(&self, h: Option<&Rational>, g: Option<&Rational>) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            let mut c = c.clone();
            let (mut ni, mut nj) = (*i, *j);
            if let Some(hv) = h {
                c *= num_traits::pow(hv.clone(), *i as usize);
                ni = 0;
            }
            if let Some(gv) = g {
                c *= num_traits::pow(gv.clone(), *j as usize);
                nj = 0;
            }
            out.add_term((ni, nj), c);
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        // lex order with h first; division by a single polynomial has a
        // unique quotient, so a nonzero remainder means non-divisibility
        let lead = |p: &Self| p.terms.iter().next_back().map(|(e, c)| (*e, c.clone()));
        let (de, dc) = lead(divisor)?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((re, rc)) = lead(&rem) {
            if re.0 < de.0 || re.1 < de.1 {
                return None;
            }
            let t = Self::monomial(rc / &dc, re.0 - de.0, re.1 - de.1);
            rem = &rem - &(&t * divisor);
            q = &q + &t;
        }
        Some(q)
    }

    pub fn is_divisible_by_g(&self) -> bool {
        self.terms.keys().all(|e| e.1 >= 1)
    }

    pub fn is_h_free(&self) -> bool {
        self.terms.keys().all(|e| e.0 == 0)
    }

    /// Evaluate at rational points.
    pub fn eval(&self, h: &Rational, g: &Rational) -> Rational {
        self.specialize(Some(h), Some(g)).constant_term()
    }
}

impl Add for &PolyHG {
    type Output = PolyHG;
    fn add(self, rhs: &PolyHG) -> PolyHG {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &PolyHG {
    type Output = PolyHG;
    fn sub(self, rhs: &PolyHG) -> PolyHG {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &PolyHG {
    type Output = PolyHG;
    fn mul(self, rhs: &PolyHG) -> PolyHG {
        self.mul_trunc(rhs, u32::MAX)
    }
}

impl Neg for &PolyHG {
    type Output = PolyHG;
    fn neg(self) -> PolyHG {
        PolyHG {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl AddAssign<&PolyHG> for PolyHG {
    fn add_assign(&mut self, rhs: &PolyHG) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&PolyHG> for PolyHG {
    fn sub_assign(&mut self, rhs: &PolyHG) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyHG {
            type Output = PolyHG;
            fn $m(self, rhs: PolyHG) -> PolyHG {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyHG {
    type Output = PolyHG;
    fn neg(self) -> PolyHG {
        -&self
    }
}

impl fmt::Display for PolyHG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by(|a, b| grlex_cmp(b.0, a.0));
        for (k, ((i, j), c)) in sorted.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_unit = abs.is_one();
            let has_var = *i > 0 || *j > 0;
            if !is_unit || !has_var {
                write!(f, "{}", abs)?;
            }
            let mut first_var = is_unit;
            for (name, e) in [("h", *i), ("g", *j)] {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                if e == 1 {
                    write!(f, "{}", name)?;
                } else {
                    write!(f, "{}^{}", name, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyHG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyHG({})", self)
    }
}

/// Wire form of one term: `{"h":i,"g":j,"num":"..","den":".."}`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct TermJson {
    pub h: u32,
    pub g: u32,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u32>,
}

impl PolyHG {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|((i, j), c)| TermJson {
                h: *i,
                g: *j,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<Self, crate::Error> {
        let mut p = Self::zero();
        for t in terms {
            let num = t
                .num
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad numerator {:?}", t.num)))?;
            let den: num_bigint::BigInt = t
                .den
                .parse()
                .map_err(|_| crate::Error::Parse(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(crate::Error::Parse("zero denominator".into()));
            }
            p.add_term((t.h, t.g), Rational::new(num, den));
        }
        Ok(p)
    }
}

impl Serialize for PolyHG {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            terms: self.to_json_terms(),
            order: None,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyHG {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Self::from_json_terms(&j.terms).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let h = PolyHG::h();
        let g = PolyHG::g();
        let p = &(&h + &g) * &(&h - &g);
        assert_eq!(p, &h.pow(2) - &g.pow(2));
        assert_eq!(p.to_string(), "h^2 - g^2");
    }

    #[test]
    fn truncate_filters_by_total_degree() {
        let h = PolyHG::h();
        let g = PolyHG::g();
        let p = &(&h.pow(2) + &(&h * &g)) + &g.pow(3);
        assert_eq!(p.truncate(2), &h.pow(2) + &(&h * &g));
    }

    #[test]
    fn truncated_product_drops_high_terms() {
        let a = &PolyHG::one() + &PolyHG::h().scale(&rat(2, 1));
        let b = &PolyHG::one() - &PolyHG::h().scale(&rat(2, 1));
        assert_eq!(a.mul_trunc(&b, 1), PolyHG::one());
        assert_eq!(
            a.mul_trunc(&b, 2),
            &PolyHG::one() - &PolyHG::monomial(rat(4, 1), 2, 0)
        );
    }

    #[test]
    fn exact_division() {
        let h = PolyHG::h();
        let g = PolyHG::g();
        let num = &h.pow(2) - &g.pow(2);
        assert_eq!(num.div_exact(&(&h + &g)), Some(&h - &g));
        assert_eq!(h.div_exact(&g), None);
    }

    #[test]
    fn json_shape() {
        let p = PolyHG::monomial(rat(-1, 3), 1, 2);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"terms":[{"h":1,"g":2,"num":"-1","den":"3"}]}"#);
        let back: PolyHG = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
