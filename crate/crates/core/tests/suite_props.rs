use euler_matrix::catalog::families;
use euler_matrix::matrix::{inverse_unit_lower, mat_pow};
use euler_matrix::suite::{run_check, run_suite, CheckId, CheckParams, Role};
use euler_matrix::{build, BiPoly, MatrixKind, MatrixSpec, Rational};

/// The two checks whose stated identities are false (see the README).
const KNOWN_FALSE: [CheckId; 2] = [CheckId::StirlingFirstConnection, CheckId::StirlingMatrixFactorization];

#[test]
fn symbolic_pass_implies_rational_pass() {
    for n in [3usize, 6] {
        let symbolic = run_suite(&CheckParams { n, ..CheckParams::default() }.symbolic(true), None);
        for seed in [1u64, 42] {
            let rational = run_suite(&CheckParams { n, seed, ..CheckParams::default() }, None);
            for (s, r) in symbolic.iter().zip(&rational) {
                assert_eq!(s.id, r.id);
                if s.passed {
                    assert!(r.passed, "{} passes symbolically but fails at seed {seed}: {:?}", s.id, r.counterexample);
                }
            }
        }
    }
}

#[test]
fn default_run_fails_exactly_the_known_false_identities() {
    let results = run_suite(&CheckParams::default(), None);
    assert_eq!(results.len(), 35);
    for r in &results {
        assert_eq!(r.passed, !KNOWN_FALSE.contains(&r.id), "{}: {:?}", r.id, r.counterexample);
        assert!(r.error.is_none());
    }
}

#[test]
fn corrected_stirling_forms_pass_where_stated_ones_fail() {
    let p = CheckParams::default();
    for id in KNOWN_FALSE {
        let r = run_check(id, &p).unwrap();
        assert!(!r.passed);
        let failing_primary: Vec<_> = r.subs.iter().filter(|s| s.role == Role::Primary && !s.passed).collect();
        assert!(!failing_primary.is_empty());
        // Every primary that fails is a stated Stirling first-kind claim.
        for s in failing_primary {
            assert!(s.label.contains("s(n-k,j)") || s.label.contains("st^("), "{}", s.label);
        }
        let corrected = r.subs.iter().find(|s| s.label.contains("(-m)_j")).expect("composite form present");
        assert!(corrected.passed, "{}", corrected.label);
    }
}

#[test]
fn powers_match_scaled_generalized_matrix() {
    for n in 0..=6 {
        let x = BiPoly::constant(Rational::new(-2, 3));
        let e = build(&MatrixSpec::new(MatrixKind::EulerPoly, n).x(x.clone())).unwrap();
        for k in 0..=4u32 {
            let kk = BiPoly::constant(k as i64);
            let scaled = build(&MatrixSpec::new(MatrixKind::GenEuler, n).alpha(kk.clone()).x(&x * &kk)).unwrap();
            assert_eq!(mat_pow(&e, k), scaled, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn specialized_inverse_matches_d_matrix() {
    for n in 0..=8 {
        let hat = build(&MatrixSpec::new(MatrixKind::SpecializedEuler, n)).unwrap();
        let d = build(&MatrixSpec::new(MatrixKind::DMatrix, n)).unwrap();
        assert_eq!(inverse_unit_lower(&hat).unwrap(), d);
        for k in 1..=3u32 {
            let ek = families::gen_euler(n, &BiPoly::constant(k as i64), &BiPoly::constant(Rational::new(k as i64, 2)));
            assert_eq!(inverse_unit_lower(&ek).unwrap(), mat_pow(&d, k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn m_matrix_entries_equal_fibonacci_quotient() {
    let (x, a) = (BiPoly::x(), BiPoly::alpha());
    for n in 0..=8 {
        let f_inv = inverse_unit_lower(&families::fibonacci_matrix(n)).unwrap();
        let quotient = &f_inv * &families::gen_euler(n, &a, &x);
        assert_eq!(families::m_mat(n, &a, &x), quotient, "n = {n}");
    }
}

#[test]
fn lucas_number_identities_to_fifteen() {
    let r = run_check(CheckId::EulerLucasNumeric, &CheckParams { n: 2, ..CheckParams::default() }).unwrap();
    assert!(r.passed);
    let primaries: Vec<_> = r.subs.iter().filter(|s| s.role == Role::Primary).collect();
    assert_eq!(primaries.len(), 4);
    // n = 2..=15 for the first pair, 3..=15 for the second.
    assert_eq!(primaries.iter().map(|s| s.evaluations).collect::<Vec<_>>(), vec![14, 14, 13, 13]);
}

#[test]
fn alternating_counts_match_even_epsilon() {
    let r = run_check(CheckId::EpsilonCombinatorial, &CheckParams { n: 8, ..CheckParams::default() }).unwrap();
    assert!(r.passed);
    assert_eq!(r.subs[0].evaluations, 5);
}

#[test]
fn shifted_euler_factors_through_vandermonde_symbolically() {
    let x = BiPoly::x();
    for n in 0..=6 {
        let lhs = families::shifted_euler(n, &x);
        let rhs = &families::euler(n) * &families::vandermonde(n, &x);
        assert_eq!(lhs, rhs, "n = {n}");
    }
    let r = run_check(CheckId::VandermondeFactorization, &CheckParams::default().symbolic(true)).unwrap();
    assert!(r.passed);
}
