use euler_matrix::exact::{binomial, binomial_poly};
use euler_matrix::{BiPoly, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

/// Polynomials of total degree at most 6.
fn poly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((rational(), 0u32..=6, 0u32..=6), 0..8).prop_map(|terms| {
        terms
            .into_iter()
            .filter(|(_, x, a)| x + a <= 6)
            .map(|(c, x, a)| BiPoly::monomial(c, x, a))
            .sum()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_associates(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
    }

    #[test]
    fn multiplication_commutes(p in poly(), q in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn subtraction_inverts_addition(p in poly(), q in poly()) {
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn eval_is_ring_homomorphism(p in poly(), q in poly(), x in rational(), a in rational()) {
        let ev = |f: &BiPoly| f.eval(Some(&x), Some(&a));
        prop_assert_eq!(ev(&(&p * &q)), &ev(&p) * &ev(&q));
        prop_assert_eq!(ev(&(&p + &q)), &ev(&p) + &ev(&q));
    }

    #[test]
    fn partial_eval_composes(p in poly(), x in rational(), a in rational()) {
        let both = p.eval(Some(&x), Some(&a));
        prop_assert_eq!(p.eval(Some(&x), None).eval(None, Some(&a)), both.clone());
        prop_assert_eq!(p.eval(None, Some(&a)).eval(Some(&x), None), both);
    }

    #[test]
    fn shifts_compose(p in poly(), a in rational(), b in rational()) {
        let (ca, cb) = (BiPoly::constant(a.clone()), BiPoly::constant(b.clone()));
        let twice = p.shift_x(&ca).unwrap().shift_x(&cb).unwrap();
        prop_assert_eq!(twice, p.shift_x(&BiPoly::constant(&a + &b)).unwrap());
    }

    #[test]
    fn shift_by_alpha_composes(p in poly(), a in rational()) {
        let al = BiPoly::alpha();
        let twice = p.shift_x(&al).unwrap().shift_x(&BiPoly::constant(a.clone())).unwrap();
        prop_assert_eq!(twice, p.shift_x(&(&al + &BiPoly::constant(a))).unwrap());
    }

    #[test]
    fn derivative_obeys_leibniz(p in poly(), q in poly()) {
        let lhs = (&p * &q).derivative_x();
        let rhs = &(&p.derivative_x() * &q) + &(&p * &q.derivative_x());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(p in poly()) {
        prop_assert_eq!(p.to_string().parse::<BiPoly>().unwrap(), p);
    }

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }
}

#[test]
fn shift_rejects_x_dependent_offset() {
    assert!(BiPoly::x().shift_x(&BiPoly::x()).is_err());
}

#[test]
fn binomial_poly_matches_integer_binomial() {
    for n in 0..=12u64 {
        for k in 0..=n {
            let got = binomial_poly(&BiPoly::constant(n as i64), k as u32);
            assert_eq!(got, BiPoly::constant(binomial(n, k)), "C({n},{k})");
        }
    }
}

#[test]
fn binomial_poly_is_falling_factorial_over_factorial() {
    // C(x, 3) = x (x-1) (x-2) / 6
    let x = BiPoly::x();
    let expected = (&(&x * &(&x - &BiPoly::one())) * &(&x - &BiPoly::constant(2))).scale(&Rational::new(1, 6));
    assert_eq!(binomial_poly(&x, 3), expected);
}
