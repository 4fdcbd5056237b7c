//! Formal power series in `h`, `g` truncated at a fixed total degree.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{PolyHG, PolyJson};
use super::{rat, Rational};
use crate::Error;

/// Default truncation order for series-level computations.
pub const DEFAULT_ORDER: u32 = 6;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    poly: PolyHG,
    order: u32,
}

impl TruncSeries {
    pub fn new(poly: PolyHG, order: u32) -> Self {
        Self {
            poly: poly.truncate(order),
            order,
        }
    }

    pub fn zero(order: u32) -> Self {
        Self::new(PolyHG::zero(), order)
    }

    pub fn one(order: u32) -> Self {
        Self::new(PolyHG::one(), order)
    }

    pub fn poly(&self) -> &PolyHG {
        &self.poly
    }

    pub fn into_poly(self) -> PolyHG {
        self.poly
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::new(&self.poly + &other.poly, order)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::new(&self.poly - &other.poly, order)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self {
            poly: self.poly.mul_trunc(&other.poly, order),
            order,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            poly: self.poly.scale(c),
            order: self.order,
        }
    }

    pub fn truncate(&self, order: u32) -> Self {
        Self::new(self.poly.clone(), order.min(self.order))
    }

    /// `exp(s)` for a series without constant term.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.poly.constant_term().is_zero() {
            return Err(Error::NonzeroConstant("series_exp"));
        }
        let mut acc = Self::one(self.order);
        let mut power = Self::one(self.order);
        for k in 1..=self.order {
            power = power.mul(self).scale(&rat(1, k as i64));
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    /// `log(s)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self, Error> {
        if !self.poly.constant_term().is_one() {
            return Err(Error::NonUnitConstant("series_log"));
        }
        let u = self.sub(&Self::one(self.order));
        let mut acc = Self::zero(self.order);
        let mut power = Self::one(self.order);
        for k in 1..=self.order as i64 {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(&rat(sign, k)));
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a series with invertible constant term.
    pub fn inverse(&self) -> Result<Self, Error> {
        let c0 = self.poly.constant_term();
        if c0.is_zero() {
            return Err(Error::NotInvertible(
                "series with zero constant term".into(),
            ));
        }
        let inv0 = Rational::one() / c0;
        // 1/s = inv0 * sum (1 - inv0 s)^k
        let u = Self::one(self.order).sub(&self.scale(&inv0));
        let mut acc = Self::one(self.order);
        let mut power = Self::one(self.order);
        for _ in 0..self.order {
            power = power.mul(&u);
            acc = acc.add(&power);
        }
        Ok(acc.scale(&inv0))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.poly, self.order + 1)
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            terms: self.poly.to_json_terms(),
            order: Some(self.order),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        let poly = PolyHG::from_json_terms(&j.terms).map_err(serde::de::Error::custom)?;
        let order = j.order.unwrap_or(DEFAULT_ORDER);
        Ok(Self::new(poly, order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(order: u32) -> TruncSeries {
        TruncSeries::new(PolyHG::h(), order)
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(TruncSeries::zero(4).exp().unwrap(), TruncSeries::one(4));
    }

    #[test]
    fn exp_two_h() {
        // 1 + 2h + (2h)^2/2
        let e = h(2).scale(&rat(2, 1)).exp().unwrap();
        let expect = PolyHG::from_terms([
            ((0, 0), rat(1, 1)),
            ((1, 0), rat(2, 1)),
            ((2, 0), rat(2, 1)),
        ]);
        assert_eq!(e.poly(), &expect);
    }

    #[test]
    fn log_one_minus_two_h() {
        // -ln(1-u) = u + u^2/2 + u^3/3, u = 2h
        let s = TruncSeries::one(3).sub(&h(3).scale(&rat(2, 1)));
        let l = s.log().unwrap();
        let expect = PolyHG::from_terms([
            ((1, 0), rat(-2, 1)),
            ((2, 0), rat(-2, 1)),
            ((3, 0), rat(-8, 3)),
        ]);
        assert_eq!(l.poly(), &expect);
    }

    #[test]
    fn log_exp_round_trip_simple() {
        let s = TruncSeries::new(&(&PolyHG::one() + &PolyHG::h()) + &PolyHG::g(), 6);
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
        assert!(TruncSeries::one(6).log().unwrap().is_zero());
    }

    #[test]
    fn misuse_is_rejected() {
        assert!(TruncSeries::one(3).exp().is_err());
        assert!(h(3).log().is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let s = TruncSeries::new(&PolyHG::int(2) + &PolyHG::g(), 5);
        assert_eq!(s.mul(&s.inverse().unwrap()), TruncSeries::one(5));
    }
}
