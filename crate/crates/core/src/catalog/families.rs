//! Constructors for the individual families. All take the family order
//! `n` and return an `(n+1) x (n+1)` matrix unless noted otherwise.

use crate::exact::{binomial, binomial_i, binomial_poly, factorial, BiPoly, Rational};
use crate::matrix::Mat;
use crate::sequences::{
    classical_euler_numbers, euler_number, euler_poly_table, fibonacci, helper_m, lucas, stirling_first_table,
    stirling_second, EulerPolyTable,
};

/// Which reading of a display to follow for the families where the
/// printed formula and the one satisfying the stated factorization differ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Reading {
    #[default]
    Resolved,
    AsPrinted,
}

fn c(i: i64, j: i64) -> Rational {
    binomial_i(i, j)
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn konst(r: Rational) -> BiPoly {
    BiPoly::constant(r)
}

pub fn identity(n: usize) -> Mat {
    Mat::identity(n + 1)
}

/// `P[x]`: entries `C(i,j) x^{i-j}`.
pub fn pascal(n: usize, x: &BiPoly) -> Mat {
    let powers: Vec<BiPoly> = (0..=n).scan(BiPoly::one(), |acc, _| {
        let cur = acc.clone();
        *acc = &*acc * x;
        Some(cur)
    }).collect();
    Mat::lower_from_fn(n + 1, |i, j| powers[i - j].scale(&binomial(i as u64, j as u64)))
}

/// `S_k[x]`, order `k+1`: entries `x^{i-j}` on and below the diagonal.
pub fn summation_s(k: usize, x: &BiPoly) -> Mat {
    Mat::lower_from_fn(k + 1, |i, j| x.pow((i - j) as u32))
}

/// `G_k[x] = I_{n-k} (+) S_k[x]`.
pub fn summation_g(n: usize, k: usize, x: &BiPoly) -> Mat {
    let offset = n - k;
    Mat::from_fn(n + 1, |i, j| {
        if i < offset || j < offset {
            if i == j { BiPoly::one() } else { BiPoly::zero() }
        } else if i >= j {
            x.pow((i - j) as u32)
        } else {
            BiPoly::zero()
        }
    })
}

/// The product `G_n[x] G_{n-1}[x] ... G_1[x]`.
pub fn summation_product(n: usize, x: &BiPoly) -> Mat {
    (1..=n).rev().fold(Mat::identity(n + 1), |acc, k| &acc * &summation_g(n, k, x))
}

/// The matrix with `j+1` at `(j+1, j)` and zeros elsewhere.
pub fn pascal_derivation(n: usize) -> Mat {
    Mat::from_fn(n + 1, |i, j| if i == j + 1 { konst(q(i as i64)) } else { BiPoly::zero() })
}

fn euler_table(n: usize, alpha: &BiPoly, x: &BiPoly) -> EulerPolyTable {
    euler_poly_table(n, Some(alpha), Some(x))
}

/// `E^(alpha)(x)`: entries `C(i,j) E^(alpha)_{i-j}(x)`.
pub fn gen_euler(n: usize, alpha: &BiPoly, x: &BiPoly) -> Mat {
    let e = euler_table(n, alpha, x);
    Mat::lower_from_fn(n + 1, |i, j| e.rows()[i - j].scale(&binomial(i as u64, j as u64)))
}

/// `E(x) = E^(1)(x)`.
pub fn euler_poly(n: usize, x: &BiPoly) -> Mat {
    gen_euler(n, &BiPoly::one(), x)
}

/// The Euler matrix from its parity-pattern description: `C(i,j) E_{i-j}`
/// for odd `i-j`, ones on the diagonal, zeros elsewhere.
pub fn euler(n: usize) -> Mat {
    let e: Vec<Rational> = (0..=n).map(euler_number).collect();
    Mat::lower_from_fn(n + 1, |i, j| {
        let d = i - j;
        if d == 0 {
            BiPoly::one()
        } else if d % 2 == 1 {
            konst(&binomial(i as u64, j as u64) * &e[d])
        } else {
            BiPoly::zero()
        }
    })
}

/// `C(i,j) 2^{j-i} eps_{i-j}` with the classical Euler numbers.
pub fn specialized_euler(n: usize) -> Mat {
    let eps = classical_euler_numbers(n);
    Mat::lower_from_fn(n + 1, |i, j| {
        konst(&(&binomial(i as u64, j as u64) * &Rational::pow2(j as i64 - i as i64)) * &eps[i - j])
    })
}

/// `(1 + (-1)^{i-j}) C(i,j) 2^{j-i-1}`.
pub fn d_matrix(n: usize) -> Mat {
    Mat::lower_from_fn(n + 1, |i, j| {
        if (i - j) % 2 == 1 {
            BiPoly::zero()
        } else {
            konst(&binomial(i as u64, j as u64) * &Rational::pow2(j as i64 - i as i64))
        }
    })
}

/// `E^{-1} = D P[1/2]`.
pub fn euler_inverse(n: usize) -> Mat {
    &d_matrix(n) * &pascal(n, &konst(Rational::new(1, 2)))
}

/// `F_{i-j+1}`.
pub fn fibonacci_matrix(n: usize) -> Mat {
    Mat::lower_from_fn(n + 1, |i, j| konst(fibonacci((i - j + 1) as u64)))
}

/// Banded closed form: 1 on the diagonal, -1 on the two subdiagonals below.
pub fn fibonacci_inverse_closed(n: usize) -> Mat {
    Mat::lower_from_fn(n + 1, |i, j| match i - j {
        0 => BiPoly::one(),
        1 | 2 => konst(q(-1)),
        _ => BiPoly::zero(),
    })
}

/// `L_{i-j+1}`.
pub fn lucas_matrix(n: usize) -> Mat {
    Mat::lower_from_fn(n + 1, |i, j| konst(lucas((i - j + 1) as u64).expect("index >= 1")))
}

/// 1, then -3, then `5 (-1)^{i-j} 2^{i-j-2}` below.
pub fn lucas_inverse_closed(n: usize) -> Mat {
    Mat::lower_from_fn(n + 1, |i, j| {
        let d = (i - j) as i64;
        match d {
            0 => BiPoly::one(),
            1 => konst(q(-3)),
            _ => konst(&(&q(5) * &Rational::sign_pow(d)) * &Rational::pow2(d - 2)),
        }
    })
}

/// `m_{i,j}(x/2)` as a polynomial in `x`.
fn helper_m_half(i: i64, j: i64) -> BiPoly {
    helper_m(i, j).compose(&BiPoly::x().scale(&Rational::new(1, 2)), &BiPoly::alpha())
}

/// `x^shift n_{i,j}(2/x)`; needs `shift >= i` so the result is a polynomial.
fn helper_n_two_over_x(i: i64, j: i64, shift: i64) -> BiPoly {
    if i < j || i < 0 {
        return BiPoly::zero();
    }
    debug_assert!(shift >= i);
    (j.max(0)..=i)
        .map(|k| {
            let coeff = &(&Rational::sign_pow(k) * &c(i, k)) * &Rational::pow2(k);
            BiPoly::monomial(coeff, (shift - k) as u32, 0)
        })
        .sum()
}

/// `G[x]` with formal `x`: the bracket is divisible by `x^{j+1}` in `Q[x]`.
fn g_formal(n: usize, reading: Reading) -> Mat {
    let x = BiPoly::x();
    Mat::from_fn(n + 1, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let mut bracket = x.pow((i + 1) as u32).scale(&c(i, j)) - x.pow(i as u32).scale(&(&q(3) * &c(i - 1, j)));
        bracket = bracket
            + match reading {
                Reading::Resolved => {
                    // 5 (-1)^i 2^{i-1} (x/2) m_{i-2,j}(x/2)
                    let k = &(&q(5) * &Rational::sign_pow(i)) * &Rational::pow2(i - 2);
                    (&x * &helper_m_half(i - 2, j)).scale(&k)
                }
                Reading::AsPrinted => {
                    // 5 (-1)^{i+1} 2^{i-1} m_{i-1,j+1}(x/2)
                    let k = &(&q(5) * &Rational::sign_pow(i + 1)) * &Rational::pow2(i - 1);
                    helper_m_half(i - 1, j + 1).scale(&k)
                }
            };
        bracket.div_x_pow((j + 1) as u32).expect("bracket divisible by x^{j+1}")
    })
}

/// `H[x]` with formal `x`.
fn h_formal(n: usize, reading: Reading) -> Mat {
    let x = BiPoly::x();
    Mat::from_fn(n + 1, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let mut bracket = x.pow((i + 1) as u32).scale(&c(i, j)) - x.pow(i as u32).scale(&(&q(3) * &c(i, j + 1)));
        bracket = bracket
            + match reading {
                Reading::Resolved => {
                    // (-1)^j 5 x^{i+j+1} / 2^{j+2} n_{i,j+2}(2/x)
                    let k = &(&q(5) * &Rational::sign_pow(j)) * &Rational::pow2(-(j + 2));
                    helper_n_two_over_x(i, j + 2, i + j + 1).scale(&k)
                }
                Reading::AsPrinted => {
                    // (-1)^{j+1} 5 x^{i+j+2} / 2^{j+3} n_{i+1,j+3}(2/x)
                    let k = &(&q(5) * &Rational::sign_pow(j + 1)) * &Rational::pow2(-(j + 3));
                    helper_n_two_over_x(i + 1, j + 3, i + j + 2).scale(&k)
                }
            };
        bracket.div_x_pow((j + 1) as u32).expect("bracket divisible by x^{j+1}")
    })
}

/// `G[x]` from the Lucas bridge `P[x] = L G[x]`. `x` must not be the zero constant.
pub fn g_mat(n: usize, x: &BiPoly, reading: Reading) -> Mat {
    let formal = g_formal(n, reading);
    if *x == BiPoly::x() { formal } else { crate::matrix::compose(&formal, x, &BiPoly::alpha()) }
}

/// `H[x]` from the Lucas bridge `P[x] = H[x] L`. `x` must not be the zero constant.
pub fn h_mat(n: usize, x: &BiPoly, reading: Reading) -> Mat {
    let formal = h_formal(n, reading);
    if *x == BiPoly::x() { formal } else { crate::matrix::compose(&formal, x, &BiPoly::alpha()) }
}

/// `C(i,j) E_{i-j} - C(i-1,j) E_{i-j-1} - C(i-2,j) E_{i-j-2}`.
pub fn m_mat(n: usize, alpha: &BiPoly, x: &BiPoly) -> Mat {
    let e = euler_table(n, alpha, x);
    Mat::lower_from_fn(n + 1, |i, j| {
        let (i, j) = (i as i64, j as i64);
        e.get(i - j).scale(&c(i, j)) - e.get(i - j - 1).scale(&c(i - 1, j)) - e.get(i - j - 2).scale(&c(i - 2, j))
    })
}

/// `C(i,j) E_{i-j} - C(i,j+1) E_{i-j-1} - C(i,j+2) E_{i-j-2}`.
pub fn n_mat(n: usize, alpha: &BiPoly, x: &BiPoly) -> Mat {
    let e = euler_table(n, alpha, x);
    Mat::lower_from_fn(n + 1, |i, j| {
        let (i, j) = (i as i64, j as i64);
        e.get(i - j).scale(&c(i, j)) - e.get(i - j - 1).scale(&c(i, j + 1)) - e.get(i - j - 2).scale(&c(i, j + 2))
    })
}

/// `L_1^(alpha)(x)`. The resolved reading uses `C(i-1, j)` in the middle
/// term; the printed one uses `C(i-j, j)`. They agree for `j <= 1`.
pub fn l1_mat(n: usize, alpha: &BiPoly, x: &BiPoly, reading: Reading) -> Mat {
    let e = euler_table(n, alpha, x);
    Mat::lower_from_fn(n + 1, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let middle = match reading {
            Reading::Resolved => c(i - 1, j),
            Reading::AsPrinted => c(i - j, j),
        };
        let mut out = e.get(i - j).scale(&c(i, j)) - e.get(i - j - 1).scale(&(&q(3) * &middle));
        for k in j..=i - 2 {
            let w = &(&(&q(5) * &Rational::sign_pow(i - k)) * &Rational::pow2(i - k - 2)) * &c(k, j);
            out = out + e.get(k - j).scale(&w);
        }
        out
    })
}

/// `L_2^(alpha)(x)`. The resolved reading starts the sum at `k = j+2`;
/// the printed one at `k = j+1`.
pub fn l2_mat(n: usize, alpha: &BiPoly, x: &BiPoly, reading: Reading) -> Mat {
    let e = euler_table(n, alpha, x);
    let start = match reading {
        Reading::Resolved => 2,
        Reading::AsPrinted => 1,
    };
    Mat::lower_from_fn(n + 1, |i, j| {
        let (i, j) = (i as i64, j as i64);
        let mut out = e.get(i - j).scale(&c(i, j)) - e.get(i - j - 1).scale(&(&q(3) * &c(i, j + 1)));
        for k in j + start..=i {
            let w = &(&(&q(5) * &Rational::sign_pow(k - j)) * &Rational::pow2(k - j - 2)) * &c(i, k);
            out = out + e.get(i - k).scale(&w);
        }
        out
    })
}

pub fn stirling_first_matrix(n: usize) -> Mat {
    let s = stirling_first_table(n);
    Mat::lower_from_fn(n + 1, |i, j| konst(s[i][j].clone()))
}

pub fn stirling_second_matrix(n: usize) -> Mat {
    Mat::lower_from_fn(n + 1, |i, j| konst(stirling_second(i as u64, j as u64)))
}

/// `j! S(i,j)` for `1 <= i, j <= n`, stored as an `n x n` matrix. Needs `n >= 1`.
pub fn factorial_stirling(n: usize) -> Mat {
    Mat::lower_from_fn(n, |i, j| {
        let (i, j) = (i as u64 + 1, j as u64 + 1);
        konst(&Rational::from(factorial(j)) * &stirling_second(i, j))
    })
}

/// `j! S(r, j)` extended to `r, j >= 0`.
fn factorial_stirling_entry(r: i64, j: i64) -> Rational {
    if r < 0 || j < 0 {
        return Rational::zero();
    }
    &Rational::from(factorial(j as u64)) * &stirling_second(r as u64, j as u64)
}

/// `C(i,j) sum_k s(i-j,k) (-m)^k`.
pub fn st_m(n: usize, m: u64) -> Mat {
    let s = stirling_first_table(n);
    let neg_m = -Rational::from(m);
    Mat::lower_from_fn(n + 1, |i, j| {
        let r = i - j;
        let sum: Rational = (0..=r).map(|k| &s[r][k] * &neg_m.pow(k as i32)).sum();
        konst(&binomial(i as u64, j as u64) * &sum)
    })
}

fn tilde(n: usize, reading: Reading, offset: i64) -> Mat {
    Mat::lower_from_fn(n + 1, |i, j| {
        let r = (i - j) as i64;
        let mut sum = Rational::zero();
        for k in 0..=r {
            let w = Rational::new(-1, 2).pow(k as i32);
            let entry = match reading {
                Reading::Resolved => factorial_stirling_entry(r, k + offset),
                Reading::AsPrinted => factorial_stirling_entry(r - k, k + offset),
            };
            sum += &(&w * &entry);
        }
        konst(&(&binomial(i as u64, j as u64) * &Rational::sign_pow(r)) * &sum)
    })
}

/// `C~`: `C(i,j) (-1)^{i-j} sum_k (-1/2)^k k! S(i-j, k)`. The printed
/// reading takes the first Stirling index as `i-j-k`.
pub fn c_tilde(n: usize, reading: Reading) -> Mat {
    tilde(n, reading, 0)
}

/// `D~`: as [`c_tilde`] with `(k+1)! S(i-j, k+1)`.
pub fn d_tilde(n: usize, reading: Reading) -> Mat {
    tilde(n, reading, 1)
}

/// `E~(x)`: full matrix with entries `E_i(j + x)`.
pub fn shifted_euler(n: usize, x: &BiPoly) -> Mat {
    let formal = euler_poly_table(n, Some(&BiPoly::one()), None);
    let args: Vec<BiPoly> = (0..=n).map(|j| x + &konst(q(j as i64))).collect();
    Mat::from_fn(n + 1, |i, j| formal.rows()[i].compose(&args[j], &BiPoly::alpha()))
}

/// `V(x)`: entries `(j + x)^i`.
pub fn vandermonde(n: usize, x: &BiPoly) -> Mat {
    Mat::from_fn(n + 1, |i, j| (x + &konst(q(j as i64))).pow(i as u32))
}

/// Lower triangular with entries `C(x, i-j)`.
pub fn delta_binom(n: usize, x: &BiPoly) -> Mat {
    let col: Vec<BiPoly> = (0..=n).map(|k| binomial_poly(x, k as u32)).collect();
    Mat::lower_from_fn(n + 1, |i, j| col[i - j].clone())
}
