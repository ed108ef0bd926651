//! Generalized Euler polynomials `E_n^(alpha)(x)` and the Euler numbers.
//!
//! The polynomials are the coefficients of `(2 / (e^z + 1))^alpha e^{xz}`.
//! Writing `((e^z + 1) / 2)^alpha = sum c_k(alpha) z^k / k!`, the generating
//! relation becomes the convolution
//!
//! ```text
//! E_n(x) = x^n - sum_{k=1..n} C(n, k) c_k(alpha) E_{n-k}(x)
//! ```
//!
//! and the `c_k` come from a formal log-then-exp expansion over `Q[alpha]`.
//! Everything is computed once with `x` and `alpha` formal and cached;
//! concrete orders and arguments are substituted afterwards.

use std::sync::{OnceLock, RwLock};

use crate::exact::{binomial, BiPoly, Rational};

/// `c_k(alpha) = k! [z^k] ((e^z + 1)/2)^alpha` for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoeffs {
    c: Vec<BiPoly>,
}

impl SeriesCoeffs {
    pub fn coeffs(&self) -> &[BiPoly] {
        &self.c
    }

    pub fn get(&self, k: usize) -> &BiPoly {
        &self.c[k]
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }
}

/// Rows `E_0 .. E_n` of the generalized Euler polynomials, with whatever
/// substitution was requested already applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerPolyTable {
    rows: Vec<BiPoly>,
}

impl EulerPolyTable {
    pub fn rows(&self) -> &[BiPoly] {
        &self.rows
    }

    /// `E_k`, or zero for a negative index (the convention used by the
    /// banded matrix families).
    pub fn get(&self, k: i64) -> BiPoly {
        if k < 0 {
            BiPoly::zero()
        } else {
            self.rows[k as usize].clone()
        }
    }

    pub fn into_rows(self) -> Vec<BiPoly> {
        self.rows
    }
}

/// Exponential-generating-function coefficients of `d/dz log((e^z + 1)/2)`.
fn log_derivative_coeffs(n: usize) -> Vec<Rational> {
    // h = (e^z + 1)/2 has egf coefficients 1, 1/2, 1/2, ...; u solves u * h = h'.
    let h = |k: usize| if k == 0 { Rational::one() } else { Rational::new(1, 2) };
    let mut u: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut val = h(m + 1);
        for (j, uj) in u.iter().enumerate() {
            val -= &(&binomial(m as u64, j as u64) * &(uj * &h(m - j)));
        }
        u.push(val);
    }
    u
}

fn compute_series(n: usize) -> Vec<BiPoly> {
    // G = exp(alpha L) satisfies G' = alpha L' G.
    let u = log_derivative_coeffs(n);
    let alpha = BiPoly::alpha();
    let mut g = vec![BiPoly::one()];
    for m in 0..n {
        let mut acc = BiPoly::zero();
        for k in 0..=m {
            let coeff = &binomial(m as u64, k as u64) * &u[k];
            acc = acc + g[m - k].scale(&coeff);
        }
        g.push(&alpha * &acc);
    }
    g
}

/// Coefficients `c_0..c_n` of the power series of `((e^z + 1)/2)^alpha`, scaled by `k!`.
pub fn series_coeffs(n: usize) -> SeriesCoeffs {
    SeriesCoeffs { c: compute_series(n) }
}

struct FormalCache {
    series: Vec<BiPoly>,
    polys: Vec<BiPoly>,
}

fn cache() -> &'static RwLock<FormalCache> {
    static CACHE: OnceLock<RwLock<FormalCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        RwLock::new(FormalCache {
            series: vec![BiPoly::one()],
            polys: vec![BiPoly::one()],
        })
    })
}

/// Fully formal `E_0(x; alpha) .. E_n(x; alpha)`.
fn formal_polys(n: usize) -> Vec<BiPoly> {
    {
        let guard = cache().read().expect("euler cache poisoned");
        if guard.polys.len() > n {
            return guard.polys[..=n].to_vec();
        }
    }
    let mut guard = cache().write().expect("euler cache poisoned");
    if guard.series.len() <= n {
        guard.series = compute_series(n);
    }
    let x = BiPoly::x();
    while guard.polys.len() <= n {
        let m = guard.polys.len();
        let mut e = x.pow(m as u32);
        for k in 1..=m {
            let term = &guard.series[k] * &guard.polys[m - k];
            e = &e - &term.scale(&binomial(m as u64, k as u64));
        }
        guard.polys.push(e);
    }
    guard.polys[..=n].to_vec()
}

/// Table of `E_k^(alpha)(x)` for `k = 0..=n`. `None` keeps a variable formal;
/// otherwise it is replaced by the given polynomial (a rational constant,
/// `x + 1/2`, `k*alpha`, ...).
pub fn euler_poly_table(n: usize, alpha: Option<&BiPoly>, x: Option<&BiPoly>) -> EulerPolyTable {
    let formal = formal_polys(n);
    let x_to = x.cloned().unwrap_or_else(BiPoly::x);
    let a_to = alpha.cloned().unwrap_or_else(BiPoly::alpha);
    EulerPolyTable {
        rows: formal.iter().map(|p| p.compose(&x_to, &a_to)).collect(),
    }
}

/// `E_n^(alpha)(x)` with `x` formal and the order given as a polynomial
/// (use [`BiPoly::alpha`] for a formal order or a constant for a rational one).
pub fn gen_euler_poly(n: usize, alpha: &BiPoly) -> BiPoly {
    let formal = formal_polys(n);
    formal[n].compose(&BiPoly::x(), alpha)
}

/// `E_n^(alpha) = E_n^(alpha)(0)`.
pub fn gen_euler_number(n: usize, alpha: &BiPoly) -> BiPoly {
    let formal = formal_polys(n);
    formal[n].compose(&BiPoly::zero(), alpha)
}

/// Classical Euler numbers `eps_n` from `2/(e^z + e^{-z}) = sum eps_n z^n/n!`,
/// i.e. `sum_{k even} C(n, k) eps_{n-k} = [n = 0]`.
pub fn classical_euler_numbers(n: usize) -> Vec<Rational> {
    let mut eps: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut val = if m == 0 { Rational::one() } else { Rational::zero() };
        for k in (2..=m).step_by(2) {
            val -= &(&binomial(m as u64, k as u64) * &eps[m - k]);
        }
        eps.push(val);
    }
    eps
}

pub fn classical_euler_number(n: usize) -> Rational {
    classical_euler_numbers(n).pop().expect("nonempty")
}

/// `E_n = E_n^(1)(0)`.
pub fn euler_number(n: usize) -> Rational {
    gen_euler_number(n, &BiPoly::one()).as_constant().expect("constant after full substitution")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Direct expansion for integer order: ((e^z+1)/2)^m = 2^{-m} sum_j C(m,j) e^{jz}.
    fn series_at_integer_order(k: u32, m: u32) -> Rational {
        let mut acc = Rational::zero();
        for j in 0..=m {
            acc += &(&binomial(m as u64, j as u64) * &Rational::from(j as i64).pow(k as i32));
        }
        &acc * &Rational::pow2(-(m as i64))
    }

    /// E_n(x) = x^n - 1/2 sum_{k<n} C(n,k) E_k(x): the alpha = 1 recurrence
    /// from E_n(x+1) + E_n(x) = 2x^n.
    fn classical_euler_oracle(n: usize) -> Vec<BiPoly> {
        let mut out: Vec<BiPoly> = Vec::new();
        for m in 0..=n {
            let mut e = BiPoly::x().pow(m as u32);
            for (k, ek) in out.iter().enumerate() {
                e = &e - &ek.scale(&(&binomial(m as u64, k as u64) * &q("1/2")));
            }
            out.push(e);
        }
        out
    }

    #[test]
    fn series_coeff_examples() {
        let s = series_coeffs(2);
        assert_eq!(s.get(0), &BiPoly::one());
        assert_eq!(s.get(1), &p("1/2*alpha"));
        assert_eq!(s.get(2), &p("1/4*alpha^2 + 1/4*alpha"));
    }

    #[test]
    fn series_coeffs_match_integer_order_expansion() {
        let s = series_coeffs(9);
        for k in 0..=9u32 {
            let ck = s.get(k as usize);
            assert_eq!(ck.degree_alpha().unwrap_or(0), k);
            // deg_alpha(c_k) = k, so k+1 integer orders pin the polynomial down.
            for m in 0..=k {
                let got = ck.eval(None, Some(&Rational::from(m as i64))).as_constant().unwrap();
                assert_eq!(got, series_at_integer_order(k, m), "c_{k}({m})");
            }
        }
    }

    #[test]
    fn displayed_low_order_polynomials() {
        let a = BiPoly::alpha();
        assert_eq!(gen_euler_poly(0, &a), BiPoly::one());
        assert_eq!(gen_euler_poly(1, &a), p("x - 1/2*alpha"));
        assert_eq!(gen_euler_poly(2, &a), p("x^2 - x*alpha + 1/4*alpha^2 - 1/4*alpha"));
    }

    #[test]
    fn classical_polynomials_match_oracle() {
        let oracle = classical_euler_oracle(12);
        let table = euler_poly_table(12, Some(&BiPoly::one()), None);
        assert_eq!(table.rows(), &oracle[..]);
        assert_eq!(gen_euler_poly(3, &BiPoly::one()), p("x^3 - 3/2*x^2 + 1/4"));
    }

    #[test]
    fn generalized_numbers() {
        let a = BiPoly::alpha();
        assert_eq!(gen_euler_number(1, &a), p("-1/2*alpha"));
        assert_eq!(gen_euler_number(0, &BiPoly::constant(q("7/3"))), BiPoly::one());
        // E^(2)_3 = sum C(3,k) E_k E_{3-k} with classical Euler numbers from the oracle.
        let e: Vec<Rational> = classical_euler_oracle(3)
            .iter()
            .map(|p| p.eval(Some(&Rational::zero()), None).as_constant().unwrap())
            .collect();
        let conv: Rational = (0..=3u64).map(|k| &binomial(3, k) * &(&e[k as usize] * &e[3 - k as usize])).sum();
        assert_eq!(conv, q("1/2"));
        assert_eq!(gen_euler_number(3, &BiPoly::constant(2)), BiPoly::constant(q("1/2")));
    }

    #[test]
    fn order_zero_is_pure_power() {
        for n in 0..=10 {
            assert_eq!(gen_euler_poly(n, &BiPoly::zero()), BiPoly::x().pow(n as u32));
        }
    }

    #[test]
    fn degrees() {
        let t = euler_poly_table(10, None, None);
        for (k, row) in t.rows().iter().enumerate() {
            assert_eq!(row.degree_x(), Some(k as u32));
            assert!(row.degree_alpha().unwrap_or(0) <= k as u32);
        }
    }

    #[test]
    fn classical_euler_number_values() {
        // sech series, cross-checked against the zigzag counts in the combinatorial tests.
        let expect = ["1", "0", "-1", "0", "5", "0", "-61", "0", "1385", "0", "-50521"];
        let got = classical_euler_numbers(10);
        for (g, e) in got.iter().zip(expect) {
            assert_eq!(g, &q(e));
        }
        assert_eq!(classical_euler_number(4), q("5"));
    }

    #[test]
    fn euler_number_values() {
        assert_eq!(euler_number(1), q("-1/2"));
        assert_eq!(euler_number(2), q("0"));
        assert_eq!(euler_number(3), q("1/4"));
        assert_eq!(euler_number(0), q("1"));
    }

    /// The closed forms derived from the generating function, not the
    /// printed list of the first six polynomials.
    #[test]
    fn constant_terms_from_generating_function() {
        let a = BiPoly::alpha();
        assert_eq!(gen_euler_number(3, &a), p("-1/8*alpha^3 + 3/8*alpha^2"));
        assert_eq!(gen_euler_number(4, &a), p("1/16*alpha^4 - 3/8*alpha^3 + 3/16*alpha^2 + 1/8*alpha"));
    }

    #[test]
    fn printed_constant_terms_disagree_at_order_one() {
        let one = Rational::one();
        // -3 alpha^2 (alpha - 1)/8 and alpha (alpha^3 - 6 alpha^2 + 3 alpha - 26)/16 as printed.
        let printed_e3 = p("-3/8*alpha^3 + 3/8*alpha^2").eval(None, Some(&one)).as_constant().unwrap();
        let printed_e4 = p("1/16*alpha^4 - 3/8*alpha^3 + 3/16*alpha^2 - 13/8*alpha").eval(None, Some(&one)).as_constant().unwrap();
        assert_eq!(printed_e3, q("0"));
        assert_eq!(printed_e4, q("-7/4"));
        assert_ne!(printed_e3, euler_number(3));
        assert_ne!(printed_e4, euler_number(4));
    }
}
