//! Fibonacci, Lucas and Stirling numbers, the helper polynomials `m_{i,j}`,
//! `n_{i,j}`, and the alternating-permutation counter.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::SequenceError;
use crate::exact::{binomial, binomial_i, factorial, BiPoly, Rational};
use crate::par::Exec;

/// Largest `n` accepted by [`alternating_count`].
pub const ALTERNATING_MAX: usize = 10;

fn fib_pair(n: u64) -> (BigInt, BigInt) {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    (a, b)
}

/// `F_0 = 0`, `F_1 = 1`, `F_n = F_{n-1} + F_{n-2}`.
pub fn fibonacci(n: u64) -> Rational {
    Rational::from(fib_pair(n).0)
}

/// `L_1 = 1`, `L_2 = 3`, `L_{n+2} = L_{n+1} + L_n`.
pub fn lucas(n: u64) -> Result<Rational, SequenceError> {
    if n == 0 {
        return Err(SequenceError::LucasIndexZero);
    }
    // L_n = F_{n-1} + F_{n+1}
    let (f_prev, f) = fib_pair(n - 1);
    Ok(Rational::from(&f_prev + &f_prev + f))
}

/// Rows `0..=n` of the signed Stirling numbers of the first kind,
/// `sum_k s(r, k) z^k = z (z-1) ... (z-r+1)`.
pub fn stirling_first_table(n: usize) -> Vec<Vec<Rational>> {
    let mut rows = vec![vec![Rational::one()]];
    for r in 0..n {
        let prev = &rows[r];
        let mut row = vec![Rational::zero(); r + 2];
        for (k, v) in prev.iter().enumerate() {
            // s(r+1, k+1) += s(r, k);  s(r+1, k) -= r s(r, k)
            row[k + 1] += v;
            row[k] -= &(v * &Rational::from(r as i64));
        }
        rows.push(row);
    }
    rows
}

pub fn stirling_first(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    stirling_first_table(n as usize)[n as usize][k as usize].clone()
}

/// `S(n, k) = (1/k!) sum_l (-1)^{k-l} C(k, l) l^n`, with `S(0, 0) = 1`.
pub fn stirling_second(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    if k == 0 {
        return if n == 0 { Rational::one() } else { Rational::zero() };
    }
    let mut acc = Rational::zero();
    for l in 0..=k {
        let term = &binomial(k, l) * &Rational::from(BigInt::from(l).pow(n as u32));
        if (k - l).is_multiple_of(2) {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    &acc / &Rational::from(factorial(k))
}

/// `m_{i,j}(x) = sum_{k=j..i} (-1)^k C(k, j) x^k` for `i >= j`, else 0.
pub fn helper_m(i: i64, j: i64) -> BiPoly {
    if i < j || i < 0 {
        return BiPoly::zero();
    }
    let start = j.max(0);
    (start..=i)
        .map(|k| BiPoly::monomial(&Rational::sign_pow(k) * &binomial_i(k, j), k as u32, 0))
        .sum()
}

/// `n_{i,j}(x) = sum_{k=j..i} (-1)^k C(i, k) x^k` for `i >= j`, else 0.
pub fn helper_n(i: i64, j: i64) -> BiPoly {
    if i < j || i < 0 {
        return BiPoly::zero();
    }
    let start = j.max(0);
    (start..=i)
        .map(|k| BiPoly::monomial(&Rational::sign_pow(k) * &binomial_i(i, k), k as u32, 0))
        .sum()
}

fn count_alternating_from(prefix: &mut Vec<u8>, used: &mut [bool]) -> u64 {
    if prefix.len() == used.len() {
        return is_alternating(prefix) as u64;
    }
    let mut total = 0;
    for v in 0..used.len() {
        if !used[v] {
            used[v] = true;
            prefix.push(v as u8);
            total += count_alternating_from(prefix, used);
            prefix.pop();
            used[v] = false;
        }
    }
    total
}

fn is_alternating(perm: &[u8]) -> bool {
    perm.windows(3)
        .all(|w| (w[1] > w[0]) != (w[2] > w[1]))
}

/// Number of permutations of `{1..n}` whose consecutive differences
/// alternate in sign, counted by brute-force enumeration of all `n!`
/// permutations. For `n >= 2` the up-down and down-up classes are mirror
/// images and only one class is reported.
pub fn alternating_count(n: usize) -> Result<Rational, SequenceError> {
    alternating_count_with(n, Exec::default())
}

pub fn alternating_count_with(n: usize, exec: Exec) -> Result<Rational, SequenceError> {
    if n > ALTERNATING_MAX {
        return Err(SequenceError::EnumerationBudget { n, max: ALTERNATING_MAX });
    }
    if n <= 1 {
        return Ok(Rational::one());
    }
    let per_first = exec.map(n, |first| {
        let mut used = vec![false; n];
        used[first] = true;
        let mut prefix = vec![first as u8];
        count_alternating_from(&mut prefix, &mut used)
    });
    let total: u64 = per_first.iter().sum();
    Ok(Rational::from(total / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn fibonacci_and_lucas() {
        let fib: Vec<i64> = (0..10).map(|n| fibonacci(n).to_i64().unwrap()).collect();
        assert_eq!(fib, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let luc: Vec<i64> = (1..10).map(|n| lucas(n).unwrap().to_i64().unwrap()).collect();
        assert_eq!(luc, [1, 3, 4, 7, 11, 18, 29, 47, 76]);
        assert_eq!(lucas(0), Err(SequenceError::LucasIndexZero));
    }

    /// Expands z (z-1) ... (z-n+1) as a polynomial in x.
    fn falling_expansion(n: u64) -> BiPoly {
        (0..n).fold(BiPoly::one(), |acc, r| &acc * &(BiPoly::x() - BiPoly::constant(r as i64)))
    }

    #[test]
    fn stirling_first_matches_product_expansion() {
        for n in 0..=10u64 {
            let poly = falling_expansion(n);
            for k in 0..=n + 1 {
                assert_eq!(stirling_first(n, k), poly.coeff(k as u32, 0), "s({n},{k})");
            }
        }
        assert_eq!(stirling_first(3, 1), Rational::from(2));
        assert_eq!(stirling_first(3, 2), Rational::from(-3));
        for n in 0..=12 {
            assert!(stirling_first(n, n).is_one());
        }
    }

    /// Counts set partitions of {0..n} into k blocks by restricted growth strings.
    fn partitions_brute(n: usize, k: usize) -> u64 {
        fn go(pos: usize, n: usize, k: usize, max: usize) -> u64 {
            if pos == n {
                return (max == k) as u64;
            }
            (0..=max.min(k - 1)).map(|b| go(pos + 1, n, k, max.max(b + 1))).sum()
        }
        if k == 0 {
            return (n == 0) as u64;
        }
        go(0, n, k, 0)
    }

    #[test]
    fn stirling_second_matches_partition_count() {
        assert_eq!(stirling_second(4, 2), Rational::from(7));
        assert_eq!(stirling_second(3, 5), Rational::zero());
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(stirling_second(n as u64, k as u64), Rational::from(partitions_brute(n, k)));
            }
        }
        for n in 0..=12 {
            assert!(stirling_second(n, n).is_one());
        }
    }

    #[test]
    fn helper_examples() {
        assert_eq!(helper_m(2, 1), p("2*x^2 - x"));
        assert_eq!(helper_m(1, 3), BiPoly::zero());
        assert_eq!(helper_m(2, 0), p("x^2 - x + 1"));
        assert_eq!(helper_n(2, 1), p("x^2 - 2*x"));
        assert_eq!(helper_n(1, 3), BiPoly::zero());
        assert_eq!(helper_n(3, 3), p("-x^3"));
    }

    /// Entringer triangle: E(0,0) = 1, E(n,k) = E(n,k-1) + E(n-1,n-k).
    fn zigzag(n: usize) -> u64 {
        let mut rows: Vec<Vec<u64>> = vec![vec![1]];
        for r in 1..=n {
            let mut row = vec![0u64; r + 1];
            for k in 1..=r {
                row[k] = row[k - 1] + rows[r - 1][r - k];
            }
            rows.push(row);
        }
        rows[n][n]
    }

    #[test]
    fn alternating_counts() {
        assert_eq!(alternating_count(2).unwrap(), Rational::from(1));
        assert_eq!(alternating_count(4).unwrap(), Rational::from(5));
        assert_eq!(alternating_count(6).unwrap(), Rational::from(61));
        for n in 0..=8 {
            assert_eq!(alternating_count(n).unwrap(), Rational::from(zigzag(n)), "n = {n}");
        }
        assert!(matches!(alternating_count(11), Err(SequenceError::EnumerationBudget { n: 11, .. })));
    }

    #[test]
    fn alternating_count_is_schedule_independent() {
        for n in 0..=7 {
            assert_eq!(
                alternating_count_with(n, Exec::Sequential).unwrap(),
                alternating_count_with(n, Exec::Parallel).unwrap()
            );
        }
    }
}
