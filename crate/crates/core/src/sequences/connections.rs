//! Closed forms linking Stirling numbers to Euler polynomials.
//!
//! Each formula takes its Stirling numbers through a closure so that the
//! identity suite can feed in a deliberately corrupted table.

use crate::exact::{binomial, BiPoly, Rational};

use super::integer::{stirling_first, stirling_second};

/// `E_n(x) = sum_k (-1)^{n-k} C(n,k) [sum_{l=1}^{n-k+1} (-1)^{l-1} (l-1)!/2^{l-1} S(n-k+1, l)] x^k`.
pub fn euler_poly_via_stirling_second(n: u64) -> BiPoly {
    euler_poly_via_stirling_second_with(n, &stirling_second)
}

pub fn euler_poly_via_stirling_second_with(n: u64, big_s: &dyn Fn(u64, u64) -> Rational) -> BiPoly {
    let mut out = BiPoly::zero();
    for k in 0..=n {
        let r = n - k;
        let mut bracket = Rational::zero();
        let mut fact = Rational::one();
        for l in 1..=r + 1 {
            if l > 1 {
                fact *= &Rational::from(l as i64 - 1);
            }
            let term = &(&Rational::sign_pow(l as i64 - 1) * &fact) * &Rational::pow2(1 - l as i64);
            bracket += &(&term * &big_s(r + 1, l));
        }
        let coeff = &(&Rational::sign_pow(r as i64) * &binomial(n, k)) * &bracket;
        out = out + BiPoly::monomial(coeff, k as u32, 0);
    }
    out
}

/// `sum_j s(r, j) a^j`, the falling factorial `(a)_r` written through
/// Stirling numbers of the first kind.
fn falling_via_first(r: u64, a: &Rational, s: &dyn Fn(u64, u64) -> Rational) -> Rational {
    (0..=r).map(|j| &s(r, j) * &a.pow(j as i32)).sum()
}

/// The first-kind connection exactly as stated for integer order `m`:
/// `2^{-n} sum_k C(n,k) [sum_j s(n-k, j) (-m)^j] (2x)^k`.
///
/// This does not reproduce `E_n^(m)(x)` once `m >= 1` and `n >= 2`; see
/// [`euler_poly_via_stirling_composite`] for the form that does.
pub fn euler_poly_via_stirling_first(n: u64, m: u64) -> BiPoly {
    euler_poly_via_stirling_first_with(n, m, &stirling_first)
}

pub fn euler_poly_via_stirling_first_with(n: u64, m: u64, s: &dyn Fn(u64, u64) -> Rational) -> BiPoly {
    let neg_m = -Rational::from(m);
    let mut out = BiPoly::zero();
    for k in 0..=n {
        let bracket = falling_via_first(n - k, &neg_m, s);
        let coeff = &(&binomial(n, k) * &bracket) * &Rational::pow2(k as i64 - n as i64);
        out = out + BiPoly::monomial(coeff, k as u32, 0);
    }
    out
}

/// `E_n^(m)(x) = sum_k C(n,k) [sum_j S(n-k, j) 2^{-j} (-m)_j] x^k`, from
/// `(2/(e^z+1))^m = (1 + (e^z-1)/2)^{-m}`. The falling factorials come
/// from the first-kind numbers, so both Stirling kinds are exercised.
pub fn euler_poly_via_stirling_composite(n: u64, m: u64) -> BiPoly {
    euler_poly_via_stirling_composite_with(n, m, &stirling_first)
}

pub fn euler_poly_via_stirling_composite_with(n: u64, m: u64, s: &dyn Fn(u64, u64) -> Rational) -> BiPoly {
    let neg_m = -Rational::from(m);
    let mut out = BiPoly::zero();
    for k in 0..=n {
        let r = n - k;
        let bracket: Rational = (0..=r)
            .map(|j| &(&stirling_second(r, j) * &Rational::pow2(-(j as i64))) * &falling_via_first(j, &neg_m, s))
            .sum();
        out = out + BiPoly::monomial(&binomial(n, k) * &bracket, k as u32, 0);
    }
    out
}
