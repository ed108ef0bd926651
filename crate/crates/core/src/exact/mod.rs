//! Exact scalars: rationals, the polynomial ring `Q[x, alpha]` and the
//! binomial-type helpers every family is built from.

mod poly;
mod rational;

pub use poly::{BiPoly, Monomial};
pub use rational::{is_reduced, Rational};

use num_bigint::BigInt;
use num_traits::One;

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(i, j)`, zero whenever `j > i`.
pub fn binomial(i: u64, j: u64) -> Rational {
    if j > i {
        return Rational::zero();
    }
    let j = j.min(i - j);
    let mut acc = BigInt::one();
    for t in 0..j {
        acc = acc * (i - t) / (t + 1);
    }
    Rational::from_integer(acc)
}

/// `C(i, j)` for signed indices: zero if either index is negative or `j > i`.
pub fn binomial_i(i: i64, j: i64) -> Rational {
    if i < 0 || j < 0 {
        Rational::zero()
    } else {
        binomial(i as u64, j as u64)
    }
}

/// `base (base - 1) ... (base - k + 1)`; the empty product for `k = 0`.
pub fn falling_factorial(base: &BiPoly, k: u32) -> BiPoly {
    let mut acc = BiPoly::one();
    for t in 0..k {
        acc = &acc * &(base - &BiPoly::constant(t as i64));
    }
    acc
}

/// Generalized binomial coefficient `falling_factorial(base, k) / k!`.
pub fn binomial_poly(base: &BiPoly, k: u32) -> BiPoly {
    falling_factorial(base, k).scale(&Rational::from_integer(factorial(k as u64)).recip())
}
