//! Scalar identities: Euler polynomial addition and translation formulas,
//! Euler number connections, the Fibonacci and Lucas expansions and the
//! Stirling connections.

use crate::error::{CheckError, SequenceError};
use crate::exact::{binomial, binomial_i, BiPoly, Rational};
use crate::sequences::{
    alternating_count, classical_euler_numbers, euler_number, euler_poly_table, euler_poly_via_stirling_composite_with,
    euler_poly_via_stirling_first_with, euler_poly_via_stirling_second, fibonacci, gen_euler_poly, lucas,
    ALTERNATING_MAX,
};

use super::ctx::{Ctx, Sym};
use super::Role;

fn konst(r: Rational) -> BiPoly {
    BiPoly::constant(r)
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn frac(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn params(pairs: &[(&str, String)]) -> Vec<(String, String)> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// `F_m`, zero for negative `m`.
fn fib(m: i64) -> Rational {
    if m < 0 { Rational::zero() } else { fibonacci(m as u64) }
}

fn luc(m: i64) -> Rational {
    lucas(m as u64).expect("Lucas indices in these identities start at 1")
}

pub(crate) fn scalar_addition(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let sub = ctx.sub("E^(a+b)_n(x+y) = sum C(n,k) E^(a)_k(x) E^(b)_{n-k}(y)", Role::Primary);
    for s in ctx.samples(&[Sym::X, Sym::Y, Sym::Alpha, Sym::Beta]) {
        let (x, y, a, b) = (s.get(Sym::X), s.get(Sym::Y), s.get(Sym::Alpha), s.get(Sym::Beta));
        let ta = euler_poly_table(n, Some(a), Some(x));
        let tb = euler_poly_table(n, Some(b), Some(y));
        let tab = euler_poly_table(n, Some(&(a + b)), Some(&(x + y)));
        for m in 0..=n {
            let rhs: BiPoly = (0..=m).map(|k| (&ta.rows()[k] * &tb.rows()[m - k]).scale(&binomial(m as u64, k as u64))).sum();
            ctx.scalar(sub, || s.describe(m), m, &tab.rows()[m], &rhs);
        }
    }
    Ok(())
}

pub(crate) fn scalar_translation(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let general = ctx.sub("E^(a)_n(x+y) = sum C(n,k) E^(a)_k(y) x^{n-k}", Role::Primary);
    let unit = ctx.sub("E_n(x+y) = sum C(n,k) E_k(y) x^{n-k}", Role::Primary);
    let at_zero = ctx.sub("E_n(x) = sum C(n,k) E_k x^{n-k}", Role::Primary);
    let expand = |t: &[BiPoly], x: &BiPoly, m: usize| -> BiPoly {
        (0..=m).map(|k| (&t[k] * &x.pow((m - k) as u32)).scale(&binomial(m as u64, k as u64))).sum()
    };
    for s in ctx.samples(&[Sym::X, Sym::Y, Sym::Alpha]) {
        let (x, y, a) = (s.get(Sym::X), s.get(Sym::Y), s.get(Sym::Alpha));
        let lhs = euler_poly_table(n, Some(a), Some(&(x + y)));
        let ty = euler_poly_table(n, Some(a), Some(y));
        let lhs1 = euler_poly_table(n, Some(&BiPoly::one()), Some(&(x + y)));
        let ty1 = euler_poly_table(n, Some(&BiPoly::one()), Some(y));
        for m in 0..=n {
            ctx.scalar(general, || s.describe(m), m, &lhs.rows()[m], &expand(ty.rows(), x, m));
            ctx.scalar(unit, || s.describe(m), m, &lhs1.rows()[m], &expand(ty1.rows(), x, m));
        }
    }
    let numbers: Vec<BiPoly> = (0..=n).map(|k| konst(euler_number(k))).collect();
    for s in ctx.samples(&[Sym::X]) {
        let x = s.get(Sym::X);
        let lhs = euler_poly_table(n, Some(&BiPoly::one()), Some(x));
        for m in 0..=n {
            ctx.scalar(at_zero, || s.describe(m), m, &lhs.rows()[m], &expand(&numbers, x, m));
        }
    }
    Ok(())
}

pub(crate) fn scalar_three_term(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let sub = ctx.sub("E^(a)_n(x+1) + E^(a)_n(x) = 2 E^(a-1)_n(x)", Role::Primary);
    for s in ctx.samples(&[Sym::X, Sym::Alpha]) {
        let (x, a) = (s.get(Sym::X), s.get(Sym::Alpha));
        let shifted = euler_poly_table(n, Some(a), Some(&(x + &BiPoly::one())));
        let plain = euler_poly_table(n, Some(a), Some(x));
        let lower = euler_poly_table(n, Some(&(a - &BiPoly::one())), Some(x));
        for m in 0..=n {
            let lhs = &shifted.rows()[m] + &plain.rows()[m];
            ctx.scalar(sub, || s.describe(m), m, &lhs, &lower.rows()[m].scale(&q(2)));
        }
    }
    Ok(())
}

pub(crate) fn epsilon_connection(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let sub = ctx.sub("eps_n = 2^n E_n(1/2)", Role::Primary);
    let eps = classical_euler_numbers(n);
    let half = euler_poly_table(n, Some(&BiPoly::one()), Some(&konst(frac(1, 2))));
    for (m, e) in eps.iter().enumerate() {
        let rhs = half.rows()[m].scale(&Rational::pow2(m as i64));
        ctx.scalar(sub, || params(&[("n", m.to_string())]), m, &konst(e.clone()), &rhs);
    }
    Ok(())
}

pub(crate) fn euler_number_parity(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let odd = ctx.sub("E_n = -2^{-n} sum C(n,k) eps_{n-k}, n odd", Role::Primary);
    let even = ctx.sub("E_n = 0, n even", Role::Primary);
    let eps = classical_euler_numbers(n);
    for m in 1..=n {
        let lhs = konst(euler_number(m));
        if m % 2 == 1 {
            let sum: Rational = (0..=m).map(|k| &binomial(m as u64, k as u64) * &eps[m - k]).sum();
            let rhs = konst(-(&sum * &Rational::pow2(-(m as i64))));
            ctx.scalar(odd, || params(&[("n", m.to_string())]), m, &lhs, &rhs);
        } else {
            ctx.scalar(even, || params(&[("n", m.to_string())]), m, &lhs, &BiPoly::zero());
        }
    }
    Ok(())
}

/// `E^(a)_j(x)` with both variables formal, zero for negative `j`.
struct Formal {
    rows: Vec<BiPoly>,
}

impl Formal {
    fn new(n: usize) -> Self {
        Formal { rows: euler_poly_table(n, None, None).into_rows() }
    }

    fn e(&self, j: i64) -> BiPoly {
        if j < 0 { BiPoly::zero() } else { self.rows[j as usize].clone() }
    }
}

fn formal_params(n: usize, r: usize) -> Vec<(String, String)> {
    params(&[("n", n.to_string()), ("r", r.to_string()), ("x", "sym".into()), ("alpha", "sym".into())])
}

fn formal_params_n(n: usize) -> Vec<(String, String)> {
    params(&[("n", n.to_string()), ("x", "sym".into()), ("alpha", "sym".into())])
}

/// Fibonacci expansion, first form: sum over the column `r` of the
/// factor `M`. `reflected` gives the version for `(-1)^n C(n,r) E_{n-r}(x)`.
fn fib_first_form(e: &Formal, n: i64, r: i64, reflected: bool) -> BiPoly {
    let x = BiPoly::x();
    let a = BiPoly::alpha();
    let mut out = konst(fib(n - r + 1));
    if !reflected {
        // [(r+1)x - ((r+1)a + 2)/2] F_{n-r}
        let bracket = &x.scale(&q(r + 1)) - &(&a.scale(&q(r + 1)) + &konst(q(2))).scale(&frac(1, 2));
        out = &out + &bracket.scale(&fib(n - r));
        for k in r + 2..=n {
            let inner = &e.e(k - r - 1) + &e.e(k - r - 2).scale(&frac(k - r - 1, k - 1));
            let term = &e.e(k - r) - &inner.scale(&frac(k - r, k));
            out = &out + &term.scale(&(&binomial_i(k, r) * &fib(n - k + 1)));
        }
        out
    } else {
        let sr = Rational::sign_pow(r);
        out = out.scale(&sr);
        // (-1)^{r+1} [((r+1)(2x - a) + 2)/2] F_{n-r}
        let bracket = (&(&x.scale(&q(2)) - &a).scale(&q(r + 1)) + &konst(q(2))).scale(&frac(1, 2));
        out = &out + &bracket.scale(&(&-&sr * &fib(n - r)));
        for k in r + 2..=n {
            let inner = &e.e(k - r - 1) - &e.e(k - r - 2).scale(&frac(k - r - 1, k - 1));
            let term = &e.e(k - r) + &inner.scale(&frac(k - r, k));
            let w = &(&Rational::sign_pow(k) * &binomial_i(k, r)) * &fib(n - k + 1);
            out = &out + &term.scale(&w);
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq)]
enum SecondForm {
    Plain,
    Reflected,
    ReflectedPrinted,
}

/// Fibonacci expansion, second form: sum over the row `n` of the factor `N`.
fn fib_second_form(e: &Formal, n: i64, r: i64, form: SecondForm) -> BiPoly {
    let x = BiPoly::x();
    let a = BiPoly::alpha();
    let core = (&x - &a.scale(&frac(1, 2))).scale(&q(n));
    let sr = Rational::sign_pow(r);
    let mut out;
    match form {
        SecondForm::Plain => {
            out = konst(fib(n - r + 1));
            out = &out + &(&core - &BiPoly::one()).scale(&fib(n - r));
        }
        SecondForm::Reflected => {
            out = konst(&sr * &fib(n - r + 1));
            out = &out + &(&core + &BiPoly::one()).scale(&(&-&sr * &fib(n - r)));
        }
        SecondForm::ReflectedPrinted => {
            out = konst(&sr * &fib(n - r + 1));
            out = &out + &(&core - &BiPoly::one()).scale(&(&-&sr * &fib(n - r)));
        }
    }
    for k in 0..=n - 2 {
        let c = binomial_i(n, k);
        let f = fib(k - r + 1);
        if f.is_zero() {
            continue;
        }
        let ratio = frac(n - k - 1, k + 2);
        let term = match form {
            SecondForm::Plain => {
                let inner = &e.e(n - k - 1) + &e.e(n - k - 2).scale(&ratio);
                (&e.e(n - k) - &inner.scale(&frac(n - k, k + 1))).scale(&(&c * &f))
            }
            SecondForm::Reflected | SecondForm::ReflectedPrinted => {
                let inner = if form == SecondForm::Reflected {
                    &e.e(n - k - 1) - &e.e(n - k - 2).scale(&ratio)
                } else {
                    &e.e(n - k - 1) + &e.e(n - k - 2).scale(&ratio)
                };
                let w = &(&Rational::sign_pow(n - k + r) * &c) * &f;
                (&e.e(n - k) + &inner.scale(&frac(n - k, k + 1))).scale(&w)
            }
        };
        out = &out + &term;
    }
    out
}

pub(crate) fn fibonacci_scalar(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let first = ctx.sub("C(n,r) E^(a)_{n-r}(x), first form (columns of M)", Role::Primary);
    let second = ctx.sub("C(n,r) E^(a)_{n-r}(x), second form (rows of N)", Role::Primary);
    let e = Formal::new(n);
    for m in 0..=n {
        for r in 0..=m {
            let lhs = e.e((m - r) as i64).scale(&binomial(m as u64, r as u64));
            let rhs1 = fib_first_form(&e, m as i64, r as i64, false);
            ctx.scalar(first, || formal_params(m, r), m, &lhs, &rhs1);
            let rhs2 = fib_second_form(&e, m as i64, r as i64, SecondForm::Plain);
            ctx.scalar(second, || formal_params(m, r), m, &lhs, &rhs2);
        }
    }
    Ok(())
}

pub(crate) fn fibonacci_scalar_reflected(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let first = ctx.sub("(-1)^n C(n,r) E^(a)_{n-r}(x), first form", Role::Primary);
    let second = ctx.sub("(-1)^n C(n,r) E^(a)_{n-r}(x), second form with n(x-a/2)+1 and -(n-k-1)/(k+2)", Role::Primary);
    let printed = ctx.sub("(-1)^n C(n,r) E^(a)_{n-r}(x), second form as printed", Role::Informational);
    let e = Formal::new(n);
    for m in 0..=n {
        for r in 0..=m {
            let lhs = e.e((m - r) as i64).scale(&(&Rational::sign_pow(m as i64) * &binomial(m as u64, r as u64)));
            let (mi, ri) = (m as i64, r as i64);
            ctx.scalar(first, || formal_params(m, r), m, &lhs, &fib_first_form(&e, mi, ri, true));
            ctx.scalar(second, || formal_params(m, r), m, &lhs, &fib_second_form(&e, mi, ri, SecondForm::Reflected));
            if ctx.active(printed) {
                let rhs = fib_second_form(&e, mi, ri, SecondForm::ReflectedPrinted);
                ctx.scalar(printed, || formal_params(m, r), m, &lhs, &rhs);
            }
        }
    }
    Ok(())
}

/// `5 sum_{k=lo}^{n} sum_{s} sign(k, s) 2^{k-s-2} w(s) L_{n-k+1} E_{s+shift}`,
/// the double sum shared by the Lucas expansions.
fn lucas_double_sum(
    n: i64,
    lo: i64,
    s_lo: i64,
    sign: impl Fn(i64, i64) -> Rational,
    weight: impl Fn(i64) -> Rational,
    e: impl Fn(i64) -> BiPoly,
) -> BiPoly {
    let mut out = BiPoly::zero();
    for k in lo..=n {
        for s in s_lo..=k - 2 {
            let w = &(&(&sign(k, s) * &Rational::pow2(k - s - 2)) * &weight(s)) * &luc(n - k + 1);
            out = &out + &e(s).scale(&w);
        }
    }
    out.scale(&q(5))
}

/// Right side of the expansion of `E_n` against Lucas numbers; `reflected`
/// selects the version for `(-1)^n E_n(x)` with the given double-sum sign.
fn lucas_first(n: i64, e: &dyn Fn(i64) -> BiPoly, head: BiPoly, reflected: bool, sign: &dyn Fn(i64, i64) -> Rational) -> BiPoly {
    let mut out = &konst(luc(n + 1)) + &head.scale(&luc(n));
    for k in 2..=n {
        let term = if reflected {
            (&e(k) + &e(k - 1).scale(&q(3))).scale(&Rational::sign_pow(k))
        } else {
            &e(k) - &e(k - 1).scale(&q(3))
        };
        out = &out + &term.scale(&luc(n - k + 1));
    }
    &out + &lucas_double_sum(n, 2, 0, sign, |_| Rational::one(), e)
}

/// Right side of the expansion of `n E_{n-1}` against Lucas numbers.
fn lucas_second(n: i64, e: &dyn Fn(i64) -> BiPoly, head: BiPoly, reflected: bool) -> BiPoly {
    let mut out = &konst(luc(n)) + &head.scale(&luc(n - 1));
    for k in 3..=n {
        let term = if reflected {
            (&e(k - 1).scale(&q(k)) + &e(k - 2).scale(&q(3 * (k - 1)))).scale(&Rational::sign_pow(k - 1))
        } else {
            &e(k - 1).scale(&q(k)) - &e(k - 2).scale(&q(3 * (k - 1)))
        };
        out = &out + &term.scale(&luc(n - k + 1));
    }
    let sign = |k: i64, s: i64| if reflected { Rational::sign_pow(k - 1) } else { Rational::sign_pow(k - s) };
    &out + &lucas_double_sum(n, 3, 1, sign, q, |s| e(s - 1))
}

fn sign_k_minus_s(k: i64, s: i64) -> Rational {
    Rational::sign_pow(k - s)
}

fn sign_k(k: i64, _s: i64) -> Rational {
    Rational::sign_pow(k)
}

pub(crate) fn lucas_scalar(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let first = ctx.sub("E^(a)_n(x) against Lucas numbers, n >= 2", Role::Primary);
    let second = ctx.sub("n E^(a)_{n-1}(x) against Lucas numbers, n >= 3", Role::Primary);
    let f = Formal::new(n);
    let e = |j: i64| f.e(j);
    let (x, a) = (BiPoly::x(), BiPoly::alpha());
    for m in 2..=n as i64 {
        let head = &(&x - &a.scale(&frac(1, 2))) - &konst(q(3));
        let rhs = lucas_first(m, &e, head, false, &sign_k_minus_s);
        ctx.scalar(first, || formal_params_n(m as usize), m as usize, &e(m), &rhs);
    }
    for m in 3..=n as i64 {
        let head = &(&x.scale(&q(2)) - &a) - &konst(q(3));
        let rhs = lucas_second(m, &e, head, false);
        ctx.scalar(second, || formal_params_n(m as usize), m as usize, &e(m - 1).scale(&q(m)), &rhs);
    }
    Ok(())
}

pub(crate) fn lucas_scalar_reflected(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let first = ctx.sub("(-1)^n E^(a)_n(x) against Lucas numbers with (-1)^k in the double sum, n >= 2", Role::Primary);
    let printed = ctx.sub("(-1)^n E^(a)_n(x) against Lucas numbers as printed, (-1)^{k-s}", Role::Informational);
    let second = ctx.sub("(-1)^{n-1} n E^(a)_{n-1}(x) against Lucas numbers, n >= 3", Role::Primary);
    let f = Formal::new(n);
    let e = |j: i64| f.e(j);
    let (x, a) = (BiPoly::x(), BiPoly::alpha());
    for m in 2..=n as i64 {
        let lhs = e(m).scale(&Rational::sign_pow(m));
        let head = -&(&(&x - &a.scale(&frac(1, 2))) + &konst(q(3)));
        let rhs = lucas_first(m, &e, head.clone(), true, &sign_k);
        ctx.scalar(first, || formal_params_n(m as usize), m as usize, &lhs, &rhs);
        if ctx.active(printed) {
            let rhs = lucas_first(m, &e, head, true, &sign_k_minus_s);
            ctx.scalar(printed, || formal_params_n(m as usize), m as usize, &lhs, &rhs);
        }
    }
    for m in 3..=n as i64 {
        let lhs = e(m - 1).scale(&(&Rational::sign_pow(m - 1) * &q(m)));
        let head = &(&a - &x.scale(&q(2))) - &konst(q(3));
        let rhs = lucas_second(m, &e, head, true);
        ctx.scalar(second, || formal_params_n(m as usize), m as usize, &lhs, &rhs);
    }
    Ok(())
}

/// Upper end of the Euler and Lucas number identities.
const LUCAS_NUMERIC_MAX: usize = 15;

pub(crate) fn euler_lucas_numeric(ctx: &mut Ctx) -> Result<(), CheckError> {
    let top = ctx.n().max(LUCAS_NUMERIC_MAX);
    let b1 = ctx.sub("E_n - (L_{n+1} - 7/2 L_n) = sum (...) L_{n-k+1}, n >= 2", Role::Primary);
    let b2 = ctx.sub("(-1)^n E_n = L_{n+1} - 5/2 L_n + ..., with (-1)^k in the double sum", Role::Primary);
    let b2_printed = ctx.sub("(-1)^n E_n = L_{n+1} - 5/2 L_n + ..., as printed", Role::Informational);
    let b3 = ctx.sub("n E_{n-1} - (L_n - 4 L_{n-1}) = sum (...) L_{n-k+1}, n >= 3", Role::Primary);
    let b4 = ctx.sub("(-1)^{n-1} n E_{n-1} - L_n - (a - 2x - 3) L_{n-1} = ..., at a = 1, x = 0", Role::Primary);
    let b4_free = ctx.sub("(-1)^{n-1} n E_{n-1} - L_n - (a - 2x - 3) L_{n-1} = ..., a and x left free", Role::Informational);
    let numbers: Vec<BiPoly> = (0..=top).map(|k| konst(euler_number(k))).collect();
    let e = |j: i64| if j < 0 { BiPoly::zero() } else { numbers[j as usize].clone() };
    let at = |m: i64| params(&[("n", m.to_string())]);
    for m in 2..=top as i64 {
        // Bullet 1: move L_{n+1} - 7/2 L_n to the right of the E_n expansion.
        let lhs = &e(m) - &konst(&luc(m + 1) - &(&frac(7, 2) * &luc(m)));
        let mut rhs = BiPoly::zero();
        for k in 2..=m {
            let mut inner = &e(k) - &e(k - 1).scale(&q(3));
            for s in 0..=k - 2 {
                inner = &inner + &e(s).scale(&(&(&Rational::sign_pow(k - s) * &Rational::pow2(k - s - 2)) * &q(5)));
            }
            rhs = &rhs + &inner.scale(&luc(m - k + 1));
        }
        ctx.scalar(b1, || at(m), m as usize, &lhs, &rhs);

        let lhs = e(m).scale(&Rational::sign_pow(m));
        let head = konst(frac(-5, 2));
        ctx.scalar(b2, || at(m), m as usize, &lhs, &lucas_first(m, &e, head.clone(), true, &sign_k));
        if ctx.active(b2_printed) {
            let rhs = lucas_first(m, &e, head, true, &sign_k_minus_s);
            ctx.scalar(b2_printed, || at(m), m as usize, &lhs, &rhs);
        }
    }
    for m in 3..=top as i64 {
        let lhs = &e(m - 1).scale(&q(m)) - &konst(&luc(m) - &(&q(4) * &luc(m - 1)));
        let rhs = &lucas_second(m, &e, konst(q(-4)), false) - &konst(&luc(m) - &(&q(4) * &luc(m - 1)));
        ctx.scalar(b3, || at(m), m as usize, &lhs, &rhs);

        // Bullet 4 with its stray (a - 2x - 3): the right side is the
        // expansion sum without its two leading terms.
        let head_terms = |h: BiPoly| &konst(luc(m)) + &h.scale(&luc(m - 1));
        let body = &lucas_second(m, &e, konst(q(-2)), true) - &head_terms(konst(q(-2)));
        let nes = e(m - 1).scale(&(&Rational::sign_pow(m - 1) * &q(m)));
        let lhs = &nes - &head_terms(konst(q(-2)));
        ctx.scalar(b4, || at(m), m as usize, &lhs, &body);
        if ctx.active(b4_free) {
            let free = &(&BiPoly::alpha() - &BiPoly::x().scale(&q(2))) - &konst(q(3));
            let lhs = &nes - &head_terms(free);
            ctx.scalar(b4_free, || at(m), m as usize, &lhs, &body);
        }
    }
    Ok(())
}

pub(crate) fn stirling_second_connection(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let sub = ctx.sub("E_n(x) = sum (-1)^{n-k} C(n,k) [sum (-1)^{l-1} (l-1)!/2^{l-1} S(n-k+1,l)] x^k", Role::Primary);
    for m in 0..=n {
        let lhs = gen_euler_poly(m, &BiPoly::one());
        let rhs = euler_poly_via_stirling_second(m as u64);
        ctx.scalar(sub, || params(&[("n", m.to_string()), ("x", "sym".into())]), m, &lhs, &rhs);
    }
    Ok(())
}

/// Orders `m` for which the integer-order connections are checked.
pub(crate) const STIRLING_ORDERS: std::ops::RangeInclusive<u64> = 1..=5;

pub(crate) fn stirling_first_connection(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    let printed = ctx.sub("E^(m)_n(x) = 2^{-n} sum C(n,k) [sum s(n-k,j) (-m)^j] (2x)^k", Role::Primary);
    let composite = ctx.sub("E^(m)_n(x) = sum C(n,k) [sum S(n-k,j) 2^{-j} (-m)_j] x^k", Role::Informational);
    let overrides = ctx.overrides;
    let s = |a: u64, b: u64| overrides.stirling_first(a, b);
    for deg in 0..=n {
        for m in STIRLING_ORDERS {
            let lhs = gen_euler_poly(deg, &konst(q(m as i64)));
            let at = || params(&[("n", deg.to_string()), ("m", m.to_string()), ("x", "sym".into())]);
            if ctx.active(printed) {
                let rhs = euler_poly_via_stirling_first_with(deg as u64, m, &s);
                ctx.scalar(printed, at, deg, &lhs, &rhs);
            }
            if ctx.active(composite) {
                let rhs = euler_poly_via_stirling_composite_with(deg as u64, m, &s);
                ctx.scalar(composite, at, deg, &lhs, &rhs);
            }
        }
    }
    Ok(())
}

pub(crate) fn epsilon_combinatorial(ctx: &mut Ctx) -> Result<(), CheckError> {
    let n = ctx.n();
    if n > ALTERNATING_MAX {
        return Err(SequenceError::EnumerationBudget { n, max: ALTERNATING_MAX }.into());
    }
    let sub = ctx.sub("|eps_2k| = alternating permutations of 2k elements", Role::Primary);
    let eps = classical_euler_numbers(n);
    for m in (0..=n).step_by(2) {
        let count = alternating_count(m)?;
        ctx.scalar(sub, || params(&[("n", m.to_string())]), m, &konst(eps[m].abs()), &konst(count));
    }
    Ok(())
}
