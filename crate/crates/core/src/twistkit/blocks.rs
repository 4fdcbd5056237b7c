//! Series in `Xp` that the twist is assembled from. Everything here is a
//! polynomial in `Xp` with `(h,g)`-polynomial coefficients; `1/h` never
//! appears because `σ` carries an overall factor of `h`.

use num_traits::One;

use crate::enveloping::{Element, Enveloping, Mono};
use crate::scalars::{rat, PolyHG, Rational};
use crate::superalgebra::Gen;

fn xp_pow(k: u32) -> Mono {
    Mono::pow(Gen::Xp, k as u8)
}

/// `σ = -ln(1 - 2h Xp) = Σ_{k≥1} (2h)^k Xp^k / k`.
pub fn build_sigma(order: u32) -> Element {
    let mut s = Element::zero(order);
    for k in 1..=order {
        let c = PolyHG::monomial(
            num_traits::pow(rat(2, 1), k as usize) * rat(1, k as i64),
            k,
            0,
        );
        s.add_term(xp_pow(k), &c);
    }
    s
}

/// `σ / 2h = Σ_{k≥1} (2h)^{k-1} Xp^k / k`, i.e. the Jordanian generator `X`.
pub fn sigma_over_2h(order: u32) -> Element {
    let mut s = Element::zero(order);
    for k in 1..=order + 1 {
        let c = PolyHG::monomial(
            num_traits::pow(rat(2, 1), (k - 1) as usize) * rat(1, k as i64),
            k - 1,
            0,
        );
        s.add_term(xp_pow(k), &c);
    }
    s
}

/// `e^{kσ} = (1 - 2h Xp)^{-k}` as a binomial series.
pub fn exp_sigma(k: &Rational, order: u32) -> Element {
    let mut s = Element::zero(order);
    let mut coeff = Rational::one();
    for m in 0..=order {
        if m > 0 {
            // (k)(k+1)...(k+m-1)/m! · 2^m
            coeff = coeff * (k + rat(m as i64 - 1, 1)) * rat(2, m as i64);
        }
        s.add_term(xp_pow(m), &PolyHG::monomial(coeff.clone(), m, 0));
    }
    s
}

/// `exp(c · g σ / 2h)` for a rational multiplier `c`.
pub fn exp_g_sigma(u: &Enveloping, c: &Rational, order: u32) -> Element {
    let arg = sigma_over_2h(order).scale_poly(&PolyHG::g()).scale(c);
    u.exp(&arg).expect("g σ/2h has no degree-0 part")
}

/// `e^{hX} = Σ h^k X^k / k!` with `X = σ/2h`.
pub fn exp_hx(u: &Enveloping, sign: i64, order: u32) -> Element {
    let x = sigma_over_2h(order);
    let mut acc = Element::one(order);
    let mut power = Element::one(order);
    for k in 1..=order as i64 {
        power = u
            .mul(&power, &x)
            .scale_poly(&PolyHG::h())
            .scale(&rat(sign, k));
        acc = acc.add(&power);
    }
    acc
}

/// `sinh(hX)/h = Σ h^{2k} X^{2k+1} / (2k+1)!`.
pub fn sinh_hx_over_h(u: &Enveloping, order: u32) -> Element {
    hyperbolic(u, order, 1)
}

/// `cosh(hX) = Σ h^{2k} X^{2k} / (2k)!`.
pub fn cosh_hx(u: &Enveloping, order: u32) -> Element {
    hyperbolic(u, order, 0)
}

fn hyperbolic(u: &Enveloping, order: u32, start: u32) -> Element {
    let x = sigma_over_2h(order);
    let mut acc = Element::zero(order);
    let mut n = start;
    while n <= order + 1 {
        let hpow = n - start;
        if hpow > order {
            break;
        }
        let mut fact = Rational::one();
        for i in 1..=n {
            fact *= rat(i as i64, 1);
        }
        let term = u
            .pow(&x, n)
            .scale_poly(&PolyHG::monomial(Rational::one() / fact, hpow, 0));
        acc = acc.add(&term);
        n += 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::gl2;

    #[test]
    fn sigma_first_orders() {
        let s1 = build_sigma(1);
        assert_eq!(
            s1,
            Element::term(Mono::gen(Gen::Xp), PolyHG::h().scale(&rat(2, 1)), 1)
        );
        let s3 = build_sigma(3);
        assert_eq!(s3.coeff(&xp_pow(2)), PolyHG::monomial(rat(2, 1), 2, 0));
        assert_eq!(s3.coeff(&xp_pow(3)), PolyHG::monomial(rat(8, 3), 3, 0));
        assert_eq!(s3.len(), 3);
    }

    #[test]
    fn exp_minus_sigma_is_linear() {
        let u = Enveloping::new(gl2());
        for n in 1..=6 {
            let e = u.exp(&build_sigma(n).neg()).unwrap();
            let expect = Element::one(n).sub(&Element::term(
                Mono::gen(Gen::Xp),
                PolyHG::h().scale(&rat(2, 1)),
                n,
            ));
            assert_eq!(e, expect, "order {n}");
            assert_eq!(exp_sigma(&rat(-1, 1), n), expect);
        }
    }

    #[test]
    fn binomial_series_agree_with_exponentials() {
        let u = Enveloping::new(gl2());
        let n = 5;
        let s = build_sigma(n);
        for k in [rat(1, 1), rat(1, 2), rat(-1, 2), rat(2, 1), rat(-3, 2)] {
            assert_eq!(exp_sigma(&k, n), u.exp(&s.scale(&k)).unwrap(), "k={k}");
        }
        // e^{hX} = e^{σ/2}
        assert_eq!(exp_hx(&u, 1, n), exp_sigma(&rat(1, 2), n));
        assert_eq!(exp_hx(&u, -1, n), exp_sigma(&rat(-1, 2), n));
    }

    #[test]
    fn sigma_over_2h_times_2h_is_sigma() {
        let n = 5;
        let s = sigma_over_2h(n).scale_poly(&PolyHG::h().scale(&rat(2, 1)));
        assert_eq!(s, build_sigma(n));
    }
}
