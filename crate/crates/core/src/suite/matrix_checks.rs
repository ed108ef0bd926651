//! Matrix identities. Every check runs at each order `0..=n`.

use crate::catalog::families::{
    d_matrix, delta_binom, euler, euler_inverse, euler_poly, factorial_stirling, fibonacci_inverse_closed,
    fibonacci_matrix, g_mat, gen_euler, h_mat, identity, l1_mat, l2_mat, lucas_inverse_closed, lucas_matrix, m_mat,
    n_mat, pascal, pascal_derivation, shifted_euler, specialized_euler, st_m, summation_product, vandermonde, c_tilde,
    d_tilde,
};
use crate::catalog::Reading;
use crate::error::CheckError;
use crate::exact::{binomial, BiPoly, Rational};
use crate::matrix::{d_dx, direct_sum, inverse_unit_lower, mat_pow, transpose, Mat};
use crate::sequences::euler_poly_via_stirling_composite;

use super::ctx::{Ctx, Sample, Sym};
use super::scalar_checks::STIRLING_ORDERS;
use super::Role;

fn konst(r: Rational) -> BiPoly {
    BiPoly::constant(r)
}

fn frac(a: i64, b: i64) -> BiPoly {
    konst(Rational::new(a, b))
}

fn int(v: i64) -> BiPoly {
    BiPoly::constant(v)
}

fn at(n: usize) -> impl FnOnce() -> Vec<(String, String)> {
    move || vec![("n".to_string(), n.to_string())]
}

fn at_k(n: usize, k: u32) -> impl FnOnce() -> Vec<(String, String)> {
    move || vec![("n".to_string(), n.to_string()), ("k".to_string(), k.to_string())]
}

fn desc<'a>(s: &'a Sample, n: usize) -> impl FnOnce() -> Vec<(String, String)> + 'a {
    move || s.describe(n)
}

fn inv(a: &Mat) -> Mat {
    inverse_unit_lower(a).expect("family is unit lower triangular")
}

fn prod(ms: &[&Mat]) -> Mat {
    let mut it = ms.iter();
    let first = (*it.next().expect("nonempty product")).clone();
    it.fold(first, |acc, m| &acc * *m)
}

pub(crate) fn pascal_inverse(ctx: &mut Ctx) -> Result<(), CheckError> {
    let inverse = ctx.sub("P[x]^{-1} = P[-x]", Role::Primary);
    let special = ctx.sub("P[0] = I", Role::Primary);
    let samples = ctx.samples(&[Sym::X]);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let x = s.get(Sym::X);
            ctx.mat(inverse, desc(s, ord), || (inv(&pascal(ord, x)), pascal(ord, &-x)));
        }
        ctx.mat(special, at(ord), || (pascal(ord, &BiPoly::zero()), identity(ord)));
    }
    Ok(())
}

pub(crate) fn pascal_addition(ctx: &mut Ctx) -> Result<(), CheckError> {
    let sub = ctx.sub("P[x+y] = P[x] P[y]", Role::Primary);
    let samples = ctx.samples(&[Sym::X, Sym::Y]);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let (x, y) = (s.get(Sym::X), s.get(Sym::Y));
            ctx.mat(sub, desc(s, ord), || (pascal(ord, &(x + y)), &pascal(ord, x) * &pascal(ord, y)));
        }
    }
    Ok(())
}

pub(crate) fn pascal_differential(ctx: &mut Ctx) -> Result<(), CheckError> {
    let left = ctx.sub("D_x P[x] = L P[x]", Role::Primary);
    let right = ctx.sub("L P[x] = P[x] L", Role::Primary);
    let x = BiPoly::x();
    let sym = |n: usize| move || vec![("n".to_string(), n.to_string()), ("x".to_string(), "sym".to_string())];
    for ord in 0..=ctx.n() {
        let p = pascal(ord, &x);
        let l = pascal_derivation(ord);
        ctx.mat(left, sym(ord), || (d_dx(&p), &l * &p));
        ctx.mat(right, sym(ord), || (&l * &p, &p * &l));
    }
    Ok(())
}

pub(crate) fn pascal_summation_factorization(ctx: &mut Ctx) -> Result<(), CheckError> {
    let sub = ctx.sub("P[x] = G_n[x] ... G_1[x]", Role::Primary);
    let samples = ctx.samples(&[Sym::X]);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let x = s.get(Sym::X);
            ctx.mat(sub, desc(s, ord), || (pascal(ord, x), summation_product(ord, x)));
        }
    }
    Ok(())
}

pub(crate) fn lucas_pascal_bridge(ctx: &mut Ctx) -> Result<(), CheckError> {
    let lg = ctx.sub("P[x] = L G[x]", Role::Primary);
    let hl = ctx.sub("P[x] = H[x] L", Role::Primary);
    let lg_printed = ctx.sub("P[x] = L G[x], G entries as printed", Role::Informational);
    let hl_printed = ctx.sub("P[x] = H[x] L, H entries as printed", Role::Informational);
    let samples = ctx.samples_nonzero_x(&[Sym::X]);
    for ord in 0..=ctx.n() {
        let l = lucas_matrix(ord);
        for s in &samples {
            let x = s.get(Sym::X);
            let p = pascal(ord, x);
            ctx.mat(lg, desc(s, ord), || (p.clone(), &l * &g_mat(ord, x, Reading::Resolved)));
            ctx.mat(hl, desc(s, ord), || (p.clone(), &h_mat(ord, x, Reading::Resolved) * &l));
            ctx.mat(lg_printed, desc(s, ord), || (p.clone(), &l * &g_mat(ord, x, Reading::AsPrinted)));
            ctx.mat(hl_printed, desc(s, ord), || (p.clone(), &h_mat(ord, x, Reading::AsPrinted) * &l));
        }
    }
    Ok(())
}

pub(crate) fn matrix_product_formula(ctx: &mut Ctx) -> Result<(), CheckError> {
    let first = ctx.sub("E^(a+b)(x+y) = E^(a)(x) E^(b)(y)", Role::Primary);
    let second = ctx.sub("E^(a+b)(x+y) = E^(b)(x) E^(a)(y)", Role::Primary);
    let third = ctx.sub("E^(a+b)(x+y) = E^(a)(y) E^(b)(x)", Role::Primary);
    let samples = ctx.samples(&[Sym::X, Sym::Y, Sym::Alpha, Sym::Beta]);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let (x, y, a, b) = (s.get(Sym::X), s.get(Sym::Y), s.get(Sym::Alpha), s.get(Sym::Beta));
            let lhs = gen_euler(ord, &(a + b), &(x + y));
            ctx.mat(first, desc(s, ord), || (lhs.clone(), &gen_euler(ord, a, x) * &gen_euler(ord, b, y)));
            ctx.mat(second, desc(s, ord), || (lhs.clone(), &gen_euler(ord, b, x) * &gen_euler(ord, a, y)));
            ctx.mat(third, desc(s, ord), || (lhs.clone(), &gen_euler(ord, a, y) * &gen_euler(ord, b, x)));
        }
    }
    Ok(())
}

pub(crate) fn multi_product(ctx: &mut Ctx) -> Result<(), CheckError> {
    let sub = ctx.sub("E^(a1+a2+a3)(x1+x2+x3) = E^(a1)(x1) E^(a2)(x2) E^(a3)(x3)", Role::Primary);
    let samples = ctx.samples(&[Sym::X, Sym::Alpha, Sym::Y, Sym::Beta, Sym::X3, Sym::Alpha3]);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let (x1, a1) = (s.get(Sym::X), s.get(Sym::Alpha));
            let (x2, a2) = (s.get(Sym::Y), s.get(Sym::Beta));
            let (x3, a3) = (s.get(Sym::X3), s.get(Sym::Alpha3));
            ctx.mat(sub, desc(s, ord), || {
                let lhs = gen_euler(ord, &(&(a1 + a2) + a3), &(&(x1 + x2) + x3));
                let rhs = prod(&[&gen_euler(ord, a1, x1), &gen_euler(ord, a2, x2), &gen_euler(ord, a3, x3)]);
                (lhs, rhs)
            });
        }
    }
    Ok(())
}

/// Exponents for the power identities.
const POWERS: std::ops::RangeInclusive<u32> = 0..=4;

pub(crate) fn matrix_power(ctx: &mut Ctx) -> Result<(), CheckError> {
    let general = ctx.sub("(E^(a)(x))^k = E^(ka)(kx)", Role::Primary);
    let unit = ctx.sub("E(x)^k = E^(k)(kx)", Role::Primary);
    let numbers = ctx.sub("E^k = E^(k)", Role::Primary);
    let samples = ctx.samples(&[Sym::X, Sym::Alpha]);
    let xs = ctx.samples(&[Sym::X]);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let (x, a) = (s.get(Sym::X), s.get(Sym::Alpha));
            let base = gen_euler(ord, a, x);
            for k in POWERS {
                let kk = int(k as i64);
                let params = || {
                    let mut p = s.describe(ord);
                    p.push(("k".into(), k.to_string()));
                    p
                };
                ctx.mat(general, params, || (mat_pow(&base, k), gen_euler(ord, &(a * &kk), &(x * &kk))));
            }
        }
        for s in &xs {
            let x = s.get(Sym::X);
            let base = euler_poly(ord, x);
            for k in POWERS {
                let kk = int(k as i64);
                let params = || {
                    let mut p = s.describe(ord);
                    p.push(("k".into(), k.to_string()));
                    p
                };
                ctx.mat(unit, params, || (mat_pow(&base, k), gen_euler(ord, &kk, &(x * &kk))));
            }
        }
        let e = euler(ord);
        for k in POWERS {
            ctx.mat(numbers, at_k(ord, k), || (mat_pow(&e, k), gen_euler(ord, &int(k as i64), &BiPoly::zero())));
        }
    }
    Ok(())
}

pub(crate) fn matrix_three_term(ctx: &mut Ctx) -> Result<(), CheckError> {
    let general = ctx.sub("E^(a)(x+1) + E^(a)(x) = 2 E^(a-1)(x)", Role::Primary);
    let unit = ctx.sub("E(x+1) + E(x) = 2 P[x]", Role::Primary);
    let at_zero = ctx.sub("E(1) + E = 2 I", Role::Primary);
    let at_minus_one = ctx.sub("E + E(-1) = 2 P[-1]", Role::Primary);
    let printed = ctx.sub("E + E(-1) = 2 P[-1/2], as printed", Role::Informational);
    let samples = ctx.samples(&[Sym::X, Sym::Alpha]);
    let xs = ctx.samples(&[Sym::X]);
    let one = BiPoly::one();
    let two = Rational::from(2);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let (x, a) = (s.get(Sym::X), s.get(Sym::Alpha));
            ctx.mat(general, desc(s, ord), || {
                (&gen_euler(ord, a, &(x + &one)) + &gen_euler(ord, a, x), gen_euler(ord, &(a - &one), x).scale(&two))
            });
        }
        for s in &xs {
            let x = s.get(Sym::X);
            ctx.mat(unit, desc(s, ord), || {
                (&euler_poly(ord, &(x + &one)) + &euler_poly(ord, x), pascal(ord, x).scale(&two))
            });
        }
        let e = euler(ord);
        ctx.mat(at_zero, at(ord), || (&euler_poly(ord, &one) + &e, identity(ord).scale(&two)));
        let lhs = &e + &euler_poly(ord, &int(-1));
        ctx.mat(at_minus_one, at(ord), || (lhs.clone(), pascal(ord, &int(-1)).scale(&two)));
        ctx.mat(printed, at(ord), || (lhs, pascal(ord, &frac(-1, 2)).scale(&two)));
    }
    Ok(())
}

/// Largest `k` in `[E^(k)(k/2)]^{-1} = D^k`.
const INVERSE_POWERS: u32 = 3;

pub(crate) fn specialized_inverse(ctx: &mut Ctx) -> Result<(), CheckError> {
    let entries = ctx.sub("E^ = E(1/2) has entries C(i,j) 2^{j-i} eps_{i-j}", Role::Primary);
    let left = ctx.sub("D E^ = I", Role::Primary);
    let right = ctx.sub("E^ D = I", Role::Primary);
    let inverse = ctx.sub("E^{-1} (specialized) = D", Role::Primary);
    let powers = ctx.sub("[E^(k)(k/2)]^{-1} = D^k", Role::Primary);
    for ord in 0..=ctx.n() {
        let hat = specialized_euler(ord);
        let d = d_matrix(ord);
        ctx.mat(entries, at(ord), || (euler_poly(ord, &frac(1, 2)), hat.clone()));
        ctx.mat(left, at(ord), || (&d * &hat, identity(ord)));
        ctx.mat(right, at(ord), || (&hat * &d, identity(ord)));
        ctx.mat(inverse, at(ord), || (inv(&hat), d.clone()));
        for k in 1..=INVERSE_POWERS {
            ctx.mat(powers, at_k(ord, k), || {
                (inv(&gen_euler(ord, &int(k as i64), &frac(k as i64, 2))), mat_pow(&d, k))
            });
        }
    }
    Ok(())
}

pub(crate) fn pascal_translation_family(ctx: &mut Ctx) -> Result<(), CheckError> {
    let t1 = ctx.sub("E^(a)(x+y) = E^(a)(x) P[y]", Role::Primary);
    let t2 = ctx.sub("E^(a)(x+y) = P[x] E^(a)(y)", Role::Primary);
    let t3 = ctx.sub("E^(a)(x+y) = E^(a)(y) P[x]", Role::Primary);
    let u1 = ctx.sub("E(x+y) = P[x] E(y)", Role::Primary);
    let u2 = ctx.sub("E(x+y) = P[y] E(x)", Role::Primary);
    let at_zero = ctx.sub("E(x) = P[x] E", Role::Primary);
    let at_half = ctx.sub("E(x+1/2) = P[x] E^", Role::Primary);
    let special = ctx.sub("E = P[-1/2] E^", Role::Primary);
    let samples = ctx.samples(&[Sym::X, Sym::Y, Sym::Alpha]);
    let pairs = ctx.samples(&[Sym::X, Sym::Y]);
    let xs = ctx.samples(&[Sym::X]);
    for ord in 0..=ctx.n() {
        for s in &samples {
            let (x, y, a) = (s.get(Sym::X), s.get(Sym::Y), s.get(Sym::Alpha));
            let lhs = gen_euler(ord, a, &(x + y));
            let (px, py) = (pascal(ord, x), pascal(ord, y));
            ctx.mat(t1, desc(s, ord), || (lhs.clone(), &gen_euler(ord, a, x) * &py));
            let ey = gen_euler(ord, a, y);
            ctx.mat(t2, desc(s, ord), || (lhs.clone(), &px * &ey));
            ctx.mat(t3, desc(s, ord), || (lhs.clone(), &ey * &px));
        }
        for s in &pairs {
            let (x, y) = (s.get(Sym::X), s.get(Sym::Y));
            let lhs = euler_poly(ord, &(x + y));
            ctx.mat(u1, desc(s, ord), || (lhs.clone(), &pascal(ord, x) * &euler_poly(ord, y)));
            ctx.mat(u2, desc(s, ord), || (lhs.clone(), &pascal(ord, y) * &euler_poly(ord, x)));
        }
        let (e, hat) = (euler(ord), specialized_euler(ord));
        for s in &xs {
            let x = s.get(Sym::X);
            let px = pascal(ord, x);
            ctx.mat(at_zero, desc(s, ord), || (euler_poly(ord, x), &px * &e));
            ctx.mat(at_half, desc(s, ord), || (euler_poly(ord, &(x + &frac(1, 2))), &px * &hat));
        }
        ctx.mat(special, at(ord), || (e.clone(), &pascal(ord, &frac(-1, 2)) * &hat));
    }
    Ok(())
}

pub(crate) fn shifted_inverse(ctx: &mut Ctx) -> Result<(), CheckError> {
    let general = ctx.sub("[E(x+1/2)]^{-1} = D P[-x]", Role::Primary);
    let special = ctx.sub("E^{-1} = D P[1/2]", Role::Primary);
    let built = ctx.sub("catalog E^{-1} equals the computed inverse of E", Role::Primary);
    let xs = ctx.samples(&[Sym::X]);
    for ord in 0..=ctx.n() {
        let d = d_matrix(ord);
        for s in &xs {
            let x = s.get(Sym::X);
            ctx.mat(general, desc(s, ord), || (inv(&euler_poly(ord, &(x + &frac(1, 2)))), &d * &pascal(ord, &-x)));
        }
        let e_inv = inv(&euler(ord));
        ctx.mat(special, at(ord), || (e_inv.clone(), &d * &pascal(ord, &frac(1, 2))));
        ctx.mat(built, at(ord), || (e_inv, euler_inverse(ord)));
    }
    Ok(())
}

pub(crate) fn summation_factorization_euler(ctx: &mut Ctx) -> Result<(), CheckError> {
    let forward = ctx.sub("E(x+1/2) = G_n[x] ... G_1[x] E^", Role::Primary);
    let backward = ctx.sub("[E(x+1/2)]^{-1} = D G_n[-x] ... G_1[-x]", Role::Primary);
    let special = ctx.sub("E = G_n[-1/2] ... G_1[-1/2] E^", Role::Primary);
    let special_inv = ctx.sub("E^{-1} = D G_n[1/2] ... G_1[1/2]", Role::Primary);
    let xs = ctx.samples(&[Sym::X]);
    for ord in 0..=ctx.n() {
        let (hat, d) = (specialized_euler(ord), d_matrix(ord));
        for s in &xs {
            let x = s.get(Sym::X);
            let shifted = euler_poly(ord, &(x + &frac(1, 2)));
            ctx.mat(forward, desc(s, ord), || (shifted.clone(), &summation_product(ord, x) * &hat));
            ctx.mat(backward, desc(s, ord), || (inv(&shifted), &d * &summation_product(ord, &-x)));
        }
        let e = euler(ord);
        ctx.mat(special, at(ord), || (e.clone(), &summation_product(ord, &frac(-1, 2)) * &hat));
        ctx.mat(special_inv, at(ord), || (inv(&e), &d * &summation_product(ord, &frac(1, 2))));
    }
    Ok(())
}

pub(crate) fn lucas_factorization_euler(ctx: &mut Ctx) -> Result<(), CheckError> {
    let lg = ctx.sub("E(x+1/2) = L G[x] E^", Role::Primary);
    let hl = ctx.sub("E(x+1/2) = H[x] L E^", Role::Primary);
    let lg_inv = ctx.sub("[E(x+1/2)]^{-1} = D G[x]^{-1} L^{-1}", Role::Primary);
    let hl_inv = ctx.sub("[E(x+1/2)]^{-1} = D L^{-1} H[x]^{-1}", Role::Primary);
    let s_lg = ctx.sub("E = L G[-1/2] E^", Role::Primary);
    let s_hl = ctx.sub("E = H[-1/2] L E^", Role::Primary);
    let s_lg_inv = ctx.sub("E^{-1} = D G[-1/2]^{-1} L^{-1}", Role::Primary);
    let s_hl_inv = ctx.sub("E^{-1} = D L^{-1} H[-1/2]^{-1}", Role::Primary);
    let printed = ctx.sub("E(x+1/2) = L G[x] E^ = H[x] L E^, G and H entries as printed", Role::Informational);
    let xs = ctx.samples_nonzero_x(&[Sym::X]);
    let minus_half = frac(-1, 2);
    for ord in 0..=ctx.n() {
        let (l, hat, d) = (lucas_matrix(ord), specialized_euler(ord), d_matrix(ord));
        let l_inv = inv(&l);
        for s in &xs {
            let x = s.get(Sym::X);
            let shifted = euler_poly(ord, &(x + &frac(1, 2)));
            let (g, h) = (g_mat(ord, x, Reading::Resolved), h_mat(ord, x, Reading::Resolved));
            ctx.mat(lg, desc(s, ord), || (shifted.clone(), prod(&[&l, &g, &hat])));
            ctx.mat(hl, desc(s, ord), || (shifted.clone(), prod(&[&h, &l, &hat])));
            let shifted_inv = inv(&shifted);
            ctx.mat(lg_inv, desc(s, ord), || (shifted_inv.clone(), prod(&[&d, &inv(&g), &l_inv])));
            ctx.mat(hl_inv, desc(s, ord), || (shifted_inv.clone(), prod(&[&d, &l_inv, &inv(&h)])));
            ctx.mat(printed, desc(s, ord), || (shifted.clone(), prod(&[&l, &g_mat(ord, x, Reading::AsPrinted), &hat])));
            ctx.mat(printed, desc(s, ord), || (shifted, prod(&[&h_mat(ord, x, Reading::AsPrinted), &l, &hat])));
        }
        let e = euler(ord);
        let e_inv = inv(&e);
        let (g, h) = (g_mat(ord, &minus_half, Reading::Resolved), h_mat(ord, &minus_half, Reading::Resolved));
        ctx.mat(s_lg, at(ord), || (e.clone(), prod(&[&l, &g, &hat])));
        ctx.mat(s_hl, at(ord), || (e.clone(), prod(&[&h, &l, &hat])));
        ctx.mat(s_lg_inv, at(ord), || (e_inv.clone(), prod(&[&d, &inv(&g), &l_inv])));
        ctx.mat(s_hl_inv, at(ord), || (e_inv.clone(), prod(&[&d, &l_inv, &inv(&h)])));
    }
    Ok(())
}

pub(crate) fn derivative_identities(ctx: &mut Ctx) -> Result<(), CheckError> {
    let d1 = ctx.sub("D_x E(x+y) = L P[x] E(y)", Role::Primary);
    let d2 = ctx.sub("D_x E(x) = L P[x] E", Role::Primary);
    let d3 = ctx.sub("D_x E(x+1/2) = L P[x] E^", Role::Primary);
    let d4 = ctx.sub("D_x [E(x+1/2)]^{-1} = -D L P[-x]", Role::Primary);
    let d4_printed = ctx.sub("D_x [E(x+1/2)]^{-1} = D L P[-x], as printed", Role::Informational);
    let ys = ctx.samples(&[Sym::Y]);
    let x = BiPoly::x();
    let sym = |n: usize| move || vec![("n".to_string(), n.to_string()), ("x".to_string(), "sym".to_string())];
    for ord in 0..=ctx.n() {
        let l = pascal_derivation(ord);
        let lp = &l * &pascal(ord, &x);
        for s in &ys {
            let y = s.get(Sym::Y);
            let params = || {
                let mut p = s.describe(ord);
                p.insert(1, ("x".into(), "sym".into()));
                p
            };
            ctx.mat(d1, params, || (d_dx(&euler_poly(ord, &(&x + y))), &lp * &euler_poly(ord, y)));
        }
        ctx.mat(d2, sym(ord), || (d_dx(&euler_poly(ord, &x)), &lp * &euler(ord)));
        let shifted = euler_poly(ord, &(&x + &frac(1, 2)));
        ctx.mat(d3, sym(ord), || (d_dx(&shifted), &lp * &specialized_euler(ord)));
        let lhs = d_dx(&inv(&shifted));
        let dlp = prod(&[&d_matrix(ord), &l, &pascal(ord, &-&x)]);
        ctx.mat(d4, sym(ord), || (lhs.clone(), -&dlp));
        ctx.mat(d4_printed, sym(ord), || (lhs, dlp));
    }
    Ok(())
}

pub(crate) fn fibonacci_factorization(ctx: &mut Ctx) -> Result<(), CheckError> {
    let fm = ctx.sub("E^(a)(x) = F M^(a)(x)", Role::Primary);
    let nf = ctx.sub("E^(a)(x) = N^(a)(x) F", Role::Primary);
    let unit = ctx.sub("F M(x) = E(x) = N(x) F", Role::Primary);
    let at_zero = ctx.sub("F M = E = N F", Role::Primary);
    let at_half = ctx.sub("F M(1/2) = E^ = N(1/2) F", Role::Primary);
    let conj = ctx.sub("M^(a)(x) = F^{-1} N^(a)(x) F", Role::Primary);
    let consistency = ctx.sub("M^(a)(x) entries agree with F^{-1} E^(a)(x)", Role::Primary);
    let samples = ctx.samples(&[Sym::X, Sym::Alpha]);
    let xs = ctx.samples(&[Sym::X]);
    let one = BiPoly::one();
    for ord in 0..=ctx.n() {
        let f = fibonacci_matrix(ord);
        let f_inv = inv(&f);
        for s in &samples {
            let (x, a) = (s.get(Sym::X), s.get(Sym::Alpha));
            let e = gen_euler(ord, a, x);
            let (m, nn) = (m_mat(ord, a, x), n_mat(ord, a, x));
            ctx.mat(fm, desc(s, ord), || (e.clone(), &f * &m));
            ctx.mat(nf, desc(s, ord), || (e.clone(), &nn * &f));
            ctx.mat(conj, desc(s, ord), || (m.clone(), prod(&[&f_inv, &nn, &f])));
            ctx.mat(consistency, desc(s, ord), || (m, &f_inv * &e));
        }
        for s in &xs {
            let x = s.get(Sym::X);
            let e = euler_poly(ord, x);
            ctx.mat(unit, desc(s, ord), || (e.clone(), &f * &m_mat(ord, &one, x)));
            ctx.mat(unit, desc(s, ord), || (e, &n_mat(ord, &one, x) * &f));
        }
        let zero = BiPoly::zero();
        let e = euler(ord);
        ctx.mat(at_zero, at(ord), || (e.clone(), &f * &m_mat(ord, &one, &zero)));
        ctx.mat(at_zero, at(ord), || (e, &n_mat(ord, &one, &zero) * &f));
        let hat = specialized_euler(ord);
        let half = frac(1, 2);
        ctx.mat(at_half, at(ord), || (hat.clone(), &f * &m_mat(ord, &one, &half)));
        ctx.mat(at_half, at(ord), || (hat, &n_mat(ord, &one, &half) * &f));
    }
    Ok(())
}

pub(crate) fn mn_inverses(ctx: &mut Ctx) -> Result<(), CheckError> {
    let m_shift = ctx.sub("[M(x+1/2)]^{-1} = D P[-x] F", Role::Primary);
    let n_shift = ctx.sub("[N(x+1/2)]^{-1} = F D P[-x]", Role::Primary);
    let at_zero = ctx.sub("M^{-1} = D P[1/2] F, N^{-1} = F D P[1/2]", Role::Primary);
    let at_half = ctx.sub("[M(1/2)]^{-1} = D F, [N(1/2)]^{-1} = F D", Role::Primary);
    let xs = ctx.samples(&[Sym::X]);
    let one = BiPoly::one();
    for ord in 0..=ctx.n() {
        let (f, d) = (fibonacci_matrix(ord), d_matrix(ord));
        for s in &xs {
            let x = s.get(Sym::X);
            let arg = x + &frac(1, 2);
            let dp = &d * &pascal(ord, &-x);
            ctx.mat(m_shift, desc(s, ord), || (inv(&m_mat(ord, &one, &arg)), &dp * &f));
            ctx.mat(n_shift, desc(s, ord), || (inv(&n_mat(ord, &one, &arg)), &f * &dp));
        }
        let zero = BiPoly::zero();
        let dp = &d * &pascal(ord, &frac(1, 2));
        ctx.mat(at_zero, at(ord), || (inv(&m_mat(ord, &one, &zero)), &dp * &f));
        ctx.mat(at_zero, at(ord), || (inv(&n_mat(ord, &one, &zero)), &f * &dp));
        let half = frac(1, 2);
        ctx.mat(at_half, at(ord), || (inv(&m_mat(ord, &one, &half)), &d * &f));
        ctx.mat(at_half, at(ord), || (inv(&n_mat(ord, &one, &half)), &f * &d));
    }
    Ok(())
}

pub(crate) fn lucas_factorization_general(ctx: &mut Ctx) -> Result<(), CheckError> {
    let ll1 = ctx.sub("E^(a)(x) = L L1^(a)(x), middle term C(i-1,j)", Role::Primary);
    let ll1_printed = ctx.sub("E^(a)(x) = L L1^(a)(x), L1 as printed with C(i-j,j)", Role::Informational);
    let l2l = ctx.sub("E^(a)(x) = L2^(a)(x) L, sum from k = j+2", Role::Primary);
    let l2l_printed = ctx.sub("E^(a)(x) = L2^(a)(x) L, L2 as printed with k = j+1", Role::Informational);
    let unit = ctx.sub("L L1(x) = E(x) = L2(x) L", Role::Primary);
    let at_zero = ctx.sub("L L1 = E = L2 L", Role::Primary);
    let at_half = ctx.sub("L L1(1/2) = E^ = L2(1/2) L", Role::Primary);
    let literal = ctx.sub("L L1^(1/2)(x) = E^ = L2^(1/2)(x) L, superscript read literally", Role::Informational);
    let conj = ctx.sub("L1^(a)(x) = L^{-1} L2^(a)(x) L", Role::Primary);
    let samples = ctx.samples(&[Sym::X, Sym::Alpha]);
    let xs = ctx.samples(&[Sym::X]);
    let one = BiPoly::one();
    let res = Reading::Resolved;
    for ord in 0..=ctx.n() {
        let l = lucas_matrix(ord);
        let l_inv = inv(&l);
        for s in &samples {
            let (x, a) = (s.get(Sym::X), s.get(Sym::Alpha));
            let e = gen_euler(ord, a, x);
            let (l1, l2) = (l1_mat(ord, a, x, res), l2_mat(ord, a, x, res));
            ctx.mat(ll1, desc(s, ord), || (e.clone(), &l * &l1));
            ctx.mat(l2l, desc(s, ord), || (e.clone(), &l2 * &l));
            ctx.mat(ll1_printed, desc(s, ord), || (e.clone(), &l * &l1_mat(ord, a, x, Reading::AsPrinted)));
            ctx.mat(l2l_printed, desc(s, ord), || (e.clone(), &l2_mat(ord, a, x, Reading::AsPrinted) * &l));
            ctx.mat(conj, desc(s, ord), || (l1, prod(&[&l_inv, &l2, &l])));
        }
        let hat = specialized_euler(ord);
        for s in &xs {
            let x = s.get(Sym::X);
            let e = euler_poly(ord, x);
            ctx.mat(unit, desc(s, ord), || (e.clone(), &l * &l1_mat(ord, &one, x, res)));
            ctx.mat(unit, desc(s, ord), || (e, &l2_mat(ord, &one, x, res) * &l));
            let a = frac(1, 2);
            ctx.mat(literal, desc(s, ord), || (hat.clone(), &l * &l1_mat(ord, &a, x, res)));
            ctx.mat(literal, desc(s, ord), || (hat.clone(), &l2_mat(ord, &a, x, res) * &l));
        }
        let zero = BiPoly::zero();
        let e = euler(ord);
        ctx.mat(at_zero, at(ord), || (e.clone(), &l * &l1_mat(ord, &one, &zero, res)));
        ctx.mat(at_zero, at(ord), || (e, &l2_mat(ord, &one, &zero, res) * &l));
        let half = frac(1, 2);
        ctx.mat(at_half, at(ord), || (hat.clone(), &l * &l1_mat(ord, &one, &half, res)));
        ctx.mat(at_half, at(ord), || (hat, &l2_mat(ord, &one, &half, res) * &l));
    }
    Ok(())
}

pub(crate) fn l1l2_inverses(ctx: &mut Ctx) -> Result<(), CheckError> {
    let l1_shift = ctx.sub("[L1(x+1/2)]^{-1} = D P[-x] L", Role::Primary);
    let l2_shift = ctx.sub("[L2(x+1/2)]^{-1} = L D P[-x]", Role::Primary);
    let at_zero = ctx.sub("L1^{-1} = D P[1/2] L, L2^{-1} = L D P[1/2]", Role::Primary);
    let at_half = ctx.sub("[L1(1/2)]^{-1} = D L, [L2(1/2)]^{-1} = L D", Role::Primary);
    let xs = ctx.samples(&[Sym::X]);
    let one = BiPoly::one();
    let res = Reading::Resolved;
    for ord in 0..=ctx.n() {
        let (l, d) = (lucas_matrix(ord), d_matrix(ord));
        for s in &xs {
            let x = s.get(Sym::X);
            let arg = x + &frac(1, 2);
            let dp = &d * &pascal(ord, &-x);
            ctx.mat(l1_shift, desc(s, ord), || (inv(&l1_mat(ord, &one, &arg, res)), &dp * &l));
            ctx.mat(l2_shift, desc(s, ord), || (inv(&l2_mat(ord, &one, &arg, res)), &l * &dp));
        }
        let zero = BiPoly::zero();
        let dp = &d * &pascal(ord, &frac(1, 2));
        ctx.mat(at_zero, at(ord), || (inv(&l1_mat(ord, &one, &zero, res)), &dp * &l));
        ctx.mat(at_zero, at(ord), || (inv(&l2_mat(ord, &one, &zero, res)), &l * &dp));
        let half = frac(1, 2);
        ctx.mat(at_half, at(ord), || (inv(&l1_mat(ord, &one, &half, res)), &d * &l));
        ctx.mat(at_half, at(ord), || (inv(&l2_mat(ord, &one, &half, res)), &l * &d));
    }
    Ok(())
}

/// `C(i,j) c_{i-j}` where `c_r` is the constant term of the composite
/// Stirling formula for `E^(m)_r`, i.e. `E^(m)_r(0)`.
fn composite_factor(n: usize, m: u64) -> Mat {
    let c: Vec<Rational> = (0..=n).map(|r| euler_poly_via_stirling_composite(r as u64, m).coeff(0, 0)).collect();
    Mat::lower_from_fn(n + 1, |i, j| konst(&binomial(i as u64, j as u64) * &c[i - j]))
}

pub(crate) fn stirling_matrix_factorization(ctx: &mut Ctx) -> Result<(), CheckError> {
    let st_p = ctx.sub("E^(m)(x) = st^(m) P[x]", Role::Primary);
    let cd_p = ctx.sub("E(x) = (C~ + D~) P[x]", Role::Primary);
    let cd_printed = ctx.sub("E(x) = (C~ + D~) P[x], C~ and D~ as printed", Role::Informational);
    let st_cd = ctx.sub("st^(1) = C~ + D~", Role::Primary);
    let st_cd_printed = ctx.sub("st^(1) = C~ + D~, C~ and D~ as printed", Role::Informational);
    let composite = ctx.sub("E^(m)(x) = [C(i,j) E^(m)_{i-j}(0) via S(r,j) 2^{-j} (-m)_j] P[x]", Role::Informational);
    let xs = ctx.samples(&[Sym::X]);
    let with_m = |s: &Sample, n: usize, m: u64| {
        let mut p = s.describe(n);
        p.push(("m".into(), m.to_string()));
        p
    };
    for ord in 0..=ctx.n() {
        let cd = &c_tilde(ord, Reading::Resolved) + &d_tilde(ord, Reading::Resolved);
        let cd_as_printed = &c_tilde(ord, Reading::AsPrinted) + &d_tilde(ord, Reading::AsPrinted);
        for s in &xs {
            let x = s.get(Sym::X);
            let p = pascal(ord, x);
            for m in STIRLING_ORDERS {
                let e = gen_euler(ord, &int(m as i64), x);
                ctx.mat(st_p, || with_m(s, ord, m), || (e.clone(), &st_m(ord, m) * &p));
                ctx.mat(composite, || with_m(s, ord, m), || (e, &composite_factor(ord, m) * &p));
            }
            let e = euler_poly(ord, x);
            ctx.mat(cd_p, desc(s, ord), || (e.clone(), &cd * &p));
            ctx.mat(cd_printed, desc(s, ord), || (e, &cd_as_printed * &p));
        }
        let st1 = st_m(ord, 1);
        ctx.mat(st_cd, at(ord), || (st1.clone(), cd.clone()));
        ctx.mat(st_cd_printed, at(ord), || (st1, cd_as_printed));
    }
    Ok(())
}

pub(crate) fn closed_form_inverses(ctx: &mut Ctx) -> Result<(), CheckError> {
    let fib = ctx.sub("F^{-1} has 1 on the diagonal and -1 on the two subdiagonals", Role::Primary);
    let luc = ctx.sub("L^{-1} has entries 1, -3 and 5 (-1)^{i-j} 2^{i-j-2}", Role::Primary);
    for ord in 0..=ctx.n() {
        let (f, l) = (fibonacci_matrix(ord), lucas_matrix(ord));
        let (f_closed, l_closed) = (fibonacci_inverse_closed(ord), lucas_inverse_closed(ord));
        ctx.mat(fib, at(ord), || (inv(&f), f_closed.clone()));
        ctx.mat(fib, at(ord), || (&f * &f_closed, identity(ord)));
        ctx.mat(luc, at(ord), || (inv(&l), l_closed.clone()));
        ctx.mat(luc, at(ord), || (&l * &l_closed, identity(ord)));
    }
    Ok(())
}

/// `[1] (+) S~_n`; the factorial Stirling block is empty at order 0.
fn bordered_stirling(n: usize) -> Mat {
    if n == 0 {
        identity(0)
    } else {
        direct_sum(&Mat::identity(1), &factorial_stirling(n))
    }
}

pub(crate) fn vandermonde_factorization(ctx: &mut Ctx) -> Result<(), CheckError> {
    let ev = ctx.sub("E~(x) = E V(x)", Role::Primary);
    let v = ctx.sub("V(x) = ([1] (+) S~_n) Delta(x) P[1]^T", Role::Primary);
    let full = ctx.sub("E~(x) = E ([1] (+) S~_n) Delta(x) P[1]^T", Role::Primary);
    let xs = ctx.samples(&[Sym::X]);
    for ord in 0..=ctx.n() {
        let e = euler(ord);
        let pt = transpose(&pascal(ord, &BiPoly::one()));
        let border = bordered_stirling(ord);
        for s in &xs {
            let x = s.get(Sym::X);
            let shifted = shifted_euler(ord, x);
            let vx = vandermonde(ord, x);
            let factored = prod(&[&border, &delta_binom(ord, x), &pt]);
            ctx.mat(ev, desc(s, ord), || (shifted.clone(), &e * &vx));
            ctx.mat(v, desc(s, ord), || (vx, factored.clone()));
            ctx.mat(full, desc(s, ord), || (shifted, &e * &factored));
        }
    }
    Ok(())
}
