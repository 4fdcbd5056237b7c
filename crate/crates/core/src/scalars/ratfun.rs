//! Rational functions in `h`, `g` kept in reduced canonical form.
//!
//! The gcd treats a polynomial as univariate in `h` with coefficients in
//! `Q[g]` and runs a primitive pseudo-remainder sequence; contents are taken
//! with the Euclidean gcd of `Q[g]`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::PolyHG;
use super::Rational;
use crate::Error;

/// Dense univariate polynomial in `g`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct UniG(Vec<Rational>);

impl UniG {
    fn zero() -> Self {
        UniG(Vec::new())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero")
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![Rational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] += c;
        }
        UniG(v).trim()
    }

    fn neg(&self) -> Self {
        UniG(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniG(v).trim()
    }

    fn scale(&self, c: &Rational) -> Self {
        UniG(self.0.iter().map(|x| x * c).collect()).trim()
    }

    fn divrem(&self, d: &Self) -> (Self, Self) {
        let mut r = self.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(d.0.len()) + 1];
        while !r.is_zero() && r.deg() >= d.deg() {
            let shift = r.deg() - d.deg();
            let c = r.lead() / d.lead();
            q[shift] += &c;
            let mut t = vec![Rational::zero(); shift];
            t.extend(d.0.iter().map(|x| x * &c));
            r = r.add(&UniG(t).neg());
        }
        (UniG(q).trim(), r)
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = Rational::one() / self.lead();
        self.scale(&inv)
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Polynomial in `h` over `Q[g]`, lowest `h`-degree first.
#[derive(Clone, Debug)]
struct Biv(Vec<UniG>);

impl Biv {
    fn from_poly(p: &PolyHG) -> Self {
        let dh = p.degree_h().unwrap_or(0) as usize;
        let dg = p.degree_g().unwrap_or(0) as usize;
        let mut v = vec![vec![Rational::zero(); dg + 1]; dh + 1];
        for ((i, j), c) in p.terms() {
            v[*i as usize][*j as usize] = c.clone();
        }
        Biv(v.into_iter().map(|c| UniG(c).trim()).collect()).trim()
    }

    fn to_poly(&self) -> PolyHG {
        let mut p = PolyHG::zero();
        for (i, cg) in self.0.iter().enumerate() {
            for (j, c) in cg.0.iter().enumerate() {
                p.add_term((i as u32, j as u32), c.clone());
            }
        }
        p
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn content(&self) -> UniG {
        self.0
            .iter()
            .fold(UniG::zero(), |acc, c| UniG::gcd(&acc, c))
    }

    fn div_uni(&self, c: &UniG) -> Self {
        Biv(self
            .0
            .iter()
            .map(|x| {
                let (q, r) = x.divrem(c);
                debug_assert!(r.is_zero());
                q
            })
            .collect())
        .trim()
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_uni(&self.content())
    }

    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.clone();
        let ld = d.0.last().expect("nonzero divisor").clone();
        while !r.is_zero() && r.deg() >= d.deg() {
            let shift = r.deg() - d.deg();
            let lr = r.0.last().unwrap().clone();
            let mut next: Vec<UniG> = r.0.iter().map(|c| c.mul(&ld)).collect();
            for (i, c) in d.0.iter().enumerate() {
                next[i + shift] = next[i + shift].add(&c.mul(&lr).neg());
            }
            r = Biv(next).trim();
        }
        r
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let cont = UniG::gcd(&a.content(), &b.content());
        let (mut x, mut y) = (a.primitive(), b.primitive());
        if x.deg() < y.deg() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y);
            x = y;
            y = r.primitive();
        }
        Biv(x.0.iter().map(|c| c.mul(&cont)).collect())
    }
}

/// Greatest common divisor of two bivariate polynomials, normalized so its
/// grlex leading coefficient is 1.
pub fn poly_gcd(a: &PolyHG, b: &PolyHG) -> PolyHG {
    let g = Biv::gcd(&Biv::from_poly(a), &Biv::from_poly(b)).to_poly();
    match g.leading() {
        Some((_, c)) => g.scale(&(Rational::one() / c)),
        None => g,
    }
}

/// Reduced fraction `num / den` with `gcd(num, den) = 1` and `den` monic
/// under grlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: PolyHG,
    den: PolyHG,
}

impl RatFun {
    pub fn new(num: PolyHG, den: PolyHG) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::simplify_raw(num, den))
    }

    fn simplify_raw(num: PolyHG, den: PolyHG) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let (_, lc) = den.leading().expect("nonzero");
        let inv = Rational::one() / lc;
        Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: PolyHG) -> Self {
        Self {
            num: p,
            den: PolyHG::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyHG::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyHG::one())
    }

    pub fn num(&self) -> &PolyHG {
        &self.num
    }

    pub fn den(&self) -> &PolyHG {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&PolyHG> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, Error> {
        Ok(self * &o.inv()?)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.den == o.den {
            return RatFun::simplify_raw(&self.num + &o.num, self.den.clone());
        }
        RatFun::simplify_raw(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun::from_poly(&self.num * &o.num);
        }
        RatFun::simplify_raw(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, o: &RatFun) -> RatFun {
        self.checked_div(o)
            .expect("division by zero rational function")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<PolyHG> for RatFun {
    fn from(p: PolyHG) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn h() -> PolyHG {
        PolyHG::h()
    }
    fn g() -> PolyHG {
        PolyHG::g()
    }

    #[test]
    fn simplify_difference_of_squares() {
        let f = RatFun::new(&h().pow(2) - &g().pow(2), &h() + &g()).unwrap();
        assert_eq!(f.num(), &(&h() - &g()));
        assert!(f.den().is_one());
    }

    #[test]
    fn simplify_monomial_ratio() {
        let f = RatFun::new(
            PolyHG::monomial(rat(2, 1), 1, 1),
            PolyHG::monomial(rat(2, 1), 1, 0),
        )
        .unwrap();
        assert_eq!(f, RatFun::from_poly(g()));
    }

    #[test]
    fn self_ratio_is_one() {
        let f = RatFun::new(&h() + &g(), &h() + &g()).unwrap();
        assert_eq!(f, RatFun::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFun::new(h(), PolyHG::zero()).is_err());
    }

    #[test]
    fn gcd_of_products() {
        let a = &(&h() + &g()) * &(&h() - &PolyHG::int(1));
        let b = &(&h() + &g()) * &(&g() + &PolyHG::int(3));
        assert_eq!(poly_gcd(&a, &b), &h() + &g());
    }

    #[test]
    fn denominators_normalize() {
        let a = RatFun::new(PolyHG::one(), &h().scale(&rat(3, 1)) + &g()).unwrap();
        let b = RatFun::new(
            PolyHG::int(2),
            &h().scale(&rat(6, 1)) + &g().scale(&rat(2, 1)),
        )
        .unwrap();
        assert_eq!(a, b);
        let s = &a + &b;
        assert_eq!(
            s,
            RatFun::new(PolyHG::int(2), &h().scale(&rat(3, 1)) + &g()).unwrap()
        );
    }
}
