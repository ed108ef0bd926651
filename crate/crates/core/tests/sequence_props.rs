use euler_matrix::exact::binomial;
use euler_matrix::sequences::{
    classical_euler_numbers, euler_number, euler_poly_table, euler_poly_via_stirling_composite,
    euler_poly_via_stirling_first, euler_poly_via_stirling_second, gen_euler_poly,
};
use euler_matrix::{BiPoly, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
}

fn c(r: Rational) -> BiPoly {
    BiPoly::constant(r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn addition_formula_at_rational_points(a in rational(), b in rational(), x in rational(), y in rational()) {
        let n = 10;
        let ta = euler_poly_table(n, Some(&c(a.clone())), Some(&c(x.clone())));
        let tb = euler_poly_table(n, Some(&c(b.clone())), Some(&c(y.clone())));
        let tab = euler_poly_table(n, Some(&c(&a + &b)), Some(&c(&x + &y)));
        for m in 0..=n {
            let rhs: BiPoly = (0..=m)
                .map(|k| (&ta.rows()[k] * &tb.rows()[m - k]).scale(&binomial(m as u64, k as u64)))
                .sum();
            prop_assert_eq!(&tab.rows()[m], &rhs);
        }
    }
}

#[test]
fn three_term_recurrence_is_polynomial_identity() {
    let n = 8;
    let one = BiPoly::one();
    let (x, a) = (BiPoly::x(), BiPoly::alpha());
    let up = euler_poly_table(n, None, Some(&(&x + &one)));
    let plain = euler_poly_table(n, None, None);
    let lower = euler_poly_table(n, Some(&(&a - &one)), None);
    for m in 0..=n {
        assert_eq!(&up.rows()[m] + &plain.rows()[m], lower.rows()[m].scale(&Rational::from(2)), "n = {m}");
    }
}

#[test]
fn translation_with_two_formal_arguments() {
    // The second argument rides in the alpha slot at a fixed rational order.
    let n = 8;
    let order = c(Rational::new(3, 7));
    let y = BiPoly::alpha();
    let base = euler_poly_table(n, Some(&order), None);
    for m in 0..=n {
        let lhs = base.rows()[m].shift_x(&y).unwrap();
        let rhs: BiPoly = (0..=m)
            .map(|k| {
                let e_y = base.rows()[k].compose(&y, &BiPoly::alpha());
                (&e_y * &BiPoly::x().pow((m - k) as u32)).scale(&binomial(m as u64, k as u64))
            })
            .sum();
        assert_eq!(lhs, rhs, "n = {m}");
    }
}

#[test]
fn epsilon_is_scaled_value_at_half() {
    let n = 14;
    let eps = classical_euler_numbers(n);
    let half = euler_poly_table(n, Some(&BiPoly::one()), Some(&c(Rational::new(1, 2))));
    for (m, e) in eps.iter().enumerate() {
        assert_eq!(c(e.clone()), half.rows()[m].scale(&Rational::pow2(m as i64)), "n = {m}");
    }
}

#[test]
fn reflection_in_x_is_polynomial_identity() {
    let n = 8;
    let reflected = euler_poly_table(n, None, Some(&(&BiPoly::alpha() - &BiPoly::x())));
    let plain = euler_poly_table(n, None, None);
    for m in 0..=n {
        assert_eq!(reflected.rows()[m], plain.rows()[m].scale(&Rational::sign_pow(m as i64)), "n = {m}");
    }
}

#[test]
fn euler_numbers_parity_and_odd_connection() {
    let eps = classical_euler_numbers(14);
    for m in 2..=14usize {
        if m % 2 == 0 {
            assert!(euler_number(m).is_zero(), "E_{m}");
        } else {
            let sum: Rational = (0..=m).map(|k| &binomial(m as u64, k as u64) * &eps[m - k]).sum();
            assert_eq!(euler_number(m), -(&sum * &Rational::pow2(-(m as i64))), "E_{m}");
        }
    }
}

#[test]
fn second_kind_connection_reproduces_euler_polynomials() {
    for m in 0..=12 {
        assert_eq!(euler_poly_via_stirling_second(m as u64), gen_euler_poly(m, &BiPoly::one()), "n = {m}");
    }
}

#[test]
fn first_kind_connection_as_stated_fails_beyond_degree_one() {
    // The stated first-kind formula agrees only for n <= 1; the smallest
    // disagreement is E^(1)_2(x) = x^2 - x against x^2 - x + 1/2.
    for m in 1..=5u64 {
        for n in 0..=10u64 {
            let truth = gen_euler_poly(n as usize, &BiPoly::constant(m as i64));
            let stated = euler_poly_via_stirling_first(n, m);
            assert_eq!(stated == truth, n <= 1, "n = {n}, m = {m}");
        }
    }
    let x = BiPoly::x();
    let expected = &(&x.pow(2) - &x) + &c(Rational::new(1, 2));
    assert_eq!(euler_poly_via_stirling_first(2, 1), expected);
}

#[test]
fn composite_stirling_connection_reproduces_integer_orders() {
    for m in 1..=5u64 {
        for n in 0..=10u64 {
            let truth = gen_euler_poly(n as usize, &BiPoly::constant(m as i64));
            assert_eq!(euler_poly_via_stirling_composite(n, m), truth, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn symbolic_order_interpolates_integer_orders() {
    // deg_alpha E_n <= n, so agreement at alpha = 0..=n pins the polynomial.
    for n in 0..=8usize {
        let formal = gen_euler_poly(n, &BiPoly::alpha());
        assert!(formal.degree_alpha().unwrap_or(0) as usize <= n);
        for m in 0..=n as u64 {
            let at_m = formal.eval(None, Some(&Rational::from(m)));
            assert_eq!(at_m, euler_poly_via_stirling_composite(n as u64, m), "n = {n}, m = {m}");
        }
    }
}
