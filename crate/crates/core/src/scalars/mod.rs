//! Exact coefficient arithmetic: rationals, polynomials and truncated series
//! in the deformation parameters `h`, `g`, and reduced rational functions.

pub mod poly;
pub mod ratfun;
pub mod series;

pub use poly::PolyHG;
pub use ratfun::RatFun;
pub use series::{TruncSeries, DEFAULT_ORDER};

use num_bigint::BigInt;

/// Arbitrary-precision rational, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, crate::Error> {
    let bad = || crate::Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}
