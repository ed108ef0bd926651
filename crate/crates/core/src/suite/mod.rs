//! Registry of executable identity checks.
//!
//! Each check builds both sides of one or more displayed identities and
//! compares them exactly. Sub-identities marked [`Role::Informational`]
//! are reported but do not affect the verdict; they carry the literal
//! form of a display whose primary reading was corrected.

mod ctx;
mod matrix_checks;
mod scalar_checks;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::CheckError;
use crate::exact::Rational;
use crate::par::Exec;

macro_rules! checks {
    ($($variant:ident => $name:literal, $statement:literal, $domain:literal;)*) => {
        /// One check per identity or group of related identities.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            /// Kebab-case name used on the command line and in reports.
            pub fn name(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name,)*
                }
            }

            /// The claim being checked, in plain notation.
            pub fn statement(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $statement,)*
                }
            }

            /// What parameters are exercised.
            pub fn domain(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $domain,)*
                }
            }
        }
    };
}

checks! {
    ScalarAddition => "scalar-addition",
        "E^(a+b)_n(x+y) = sum_k C(n,k) E^(a)_k(x) E^(b)_{n-k}(y)", "orders 0..=n; x, y, a, b";
    ScalarTranslation => "scalar-translation",
        "E^(a)_n(x+y) = sum_k C(n,k) E^(a)_k(y) x^{n-k}", "orders 0..=n; x, y, a";
    ScalarThreeTerm => "scalar-three-term",
        "E^(a)_n(x+1) + E^(a)_n(x) = 2 E^(a-1)_n(x)", "orders 0..=n; x, a";
    EpsilonConnection => "epsilon-connection",
        "eps_n = 2^n E_n(1/2)", "orders 0..=n";
    EulerNumberParity => "euler-number-parity",
        "E_n = -2^{-n} sum_k C(n,k) eps_{n-k} for odd n, 0 for even n >= 2", "orders 1..=n";
    PascalInverse => "pascal-inverse",
        "P[x]^{-1} = P[-x], P[0] = I", "orders 0..=n; x";
    PascalAddition => "pascal-addition",
        "P[x+y] = P[x] P[y]", "orders 0..=n; x, y";
    PascalDifferential => "pascal-differential",
        "D_x P[x] = L P[x] = P[x] L", "orders 0..=n; formal x";
    PascalSummationFactorization => "pascal-summation-factorization",
        "P[x] = G_n[x] G_{n-1}[x] ... G_1[x]", "orders 0..=n; x";
    LucasPascalBridge => "lucas-pascal-bridge",
        "P[x] = L G[x] = H[x] L", "orders 0..=n; x != 0";
    MatrixProductFormula => "matrix-product-formula",
        "E^(a+b)(x+y) = E^(a)(x) E^(b)(y) = E^(b)(x) E^(a)(y) = E^(a)(y) E^(b)(x)", "orders 0..=n; x, y, a, b";
    MultiProduct => "multi-product",
        "E^(a1+a2+a3)(x1+x2+x3) = E^(a1)(x1) E^(a2)(x2) E^(a3)(x3)", "orders 0..=n; three (x, a) pairs";
    MatrixPower => "matrix-power",
        "(E^(a)(x))^k = E^(ka)(kx), E(x)^k = E^(k)(kx), E^k = E^(k)", "orders 0..=n; k = 0..=4; x, a";
    MatrixThreeTerm => "matrix-three-term",
        "E^(a)(x+1) + E^(a)(x) = 2 E^(a-1)(x), E(x+1) + E(x) = 2 P[x], E(1) + E = 2 I, E + E(-1) = 2 P[-1]", "orders 0..=n; x, a";
    SpecializedInverse => "specialized-inverse",
        "E^-1 (specialized) = D, [E^(k)(k/2)]^{-1} = D^k", "orders 0..=n; k = 1..=3";
    PascalTranslationFamily => "pascal-translation-family",
        "E^(a)(x+y) = E^(a)(x) P[y] = P[x] E^(a)(y) = E^(a)(y) P[x] and its specializations", "orders 0..=n; x, y, a";
    ShiftedInverse => "shifted-inverse",
        "[E(x+1/2)]^{-1} = D P[-x], E^{-1} = D P[1/2]", "orders 0..=n; x";
    SummationFactorizationEuler => "summation-factorization-euler",
        "E(x+1/2) = G_n[x]...G_1[x] E^, [E(x+1/2)]^{-1} = D G_n[-x]...G_1[-x]", "orders 0..=n; x";
    LucasFactorizationEuler => "lucas-factorization-euler",
        "E(x+1/2) = L G[x] E^ = H[x] L E^ and the inverse forms", "orders 0..=n; x != 0";
    DerivativeIdentities => "derivative-identities",
        "D_x E(x+y) = L P[x] E(y), D_x E(x) = L P[x] E, D_x E(x+1/2) = L P[x] E^, D_x [E(x+1/2)]^{-1} = -D L P[-x]", "orders 0..=n; formal x, y";
    FibonacciFactorization => "fibonacci-factorization",
        "E^(a)(x) = F M^(a)(x) = N^(a)(x) F and specializations; M^(a)(x) = F^{-1} N^(a)(x) F", "orders 0..=n; x, a";
    MnInverses => "mn-inverses",
        "[M(x+1/2)]^{-1} = D P[-x] F, [N(x+1/2)]^{-1} = F D P[-x] and specializations", "orders 0..=n; x";
    LucasFactorizationGeneral => "lucas-factorization-general",
        "E^(a)(x) = L L1^(a)(x) = L2^(a)(x) L and specializations; L1^(a)(x) = L^{-1} L2^(a)(x) L", "orders 0..=n; x, a";
    L1l2Inverses => "l1l2-inverses",
        "[L1(x+1/2)]^{-1} = D P[-x] L, [L2(x+1/2)]^{-1} = L D P[-x] and specializations", "orders 0..=n; x";
    FibonacciScalar => "fibonacci-scalar",
        "C(n,r) E^(a)_{n-r}(x) expanded against Fibonacci numbers, both forms", "0 <= r <= n; formal x, a";
    FibonacciScalarReflected => "fibonacci-scalar-reflected",
        "(-1)^n C(n,r) E^(a)_{n-r}(x) expanded against Fibonacci numbers, both forms", "0 <= r <= n; formal x, a";
    LucasScalar => "lucas-scalar",
        "E^(a)_n(x) and n E^(a)_{n-1}(x) expanded against Lucas numbers", "n >= 2 and n >= 3; formal x, a";
    LucasScalarReflected => "lucas-scalar-reflected",
        "(-1)^n E^(a)_n(x) and (-1)^{n-1} n E^(a)_{n-1}(x) expanded against Lucas numbers", "n >= 2 and n >= 3; formal x, a";
    EulerLucasNumeric => "euler-lucas-numeric",
        "four identities between Euler numbers E_n and Lucas numbers", "2 <= n <= max(n, 15) and 3 <= n <= max(n, 15)";
    StirlingSecondConnection => "stirling-second-connection",
        "E_n(x) = sum_k (-1)^{n-k} C(n,k) [sum_l (-1)^{l-1} (l-1)!/2^{l-1} S(n-k+1,l)] x^k", "orders 0..=n";
    StirlingFirstConnection => "stirling-first-connection",
        "E^(m)_n(x) = 2^{-n} sum_k C(n,k) [sum_j s(n-k,j) (-m)^j] (2x)^k", "orders 0..=n; m = 1..=5";
    StirlingMatrixFactorization => "stirling-matrix-factorization",
        "E^(m)(x) = st^(m) P[x], E(x) = (C~ + D~) P[x], st^(1) = C~ + D~", "orders 0..=n; m = 1..=5; x";
    ClosedFormInverses => "closed-form-inverses",
        "F^{-1} and L^{-1} equal their banded closed forms", "orders 0..=n";
    VandermondeFactorization => "vandermonde-factorization",
        "E~(x) = E V(x), V(x) = ([1] (+) S~_n) Delta(x) P[1]^T, E~(x) = E ([1] (+) S~_n) Delta(x) P[1]^T", "orders 0..=n; x";
    EpsilonCombinatorial => "epsilon-combinatorial",
        "|eps_2k| = number of alternating permutations of 2k elements (one class)", "2k <= n <= 10";
}

impl CheckId {
    pub fn index(self) -> usize {
        CheckId::ALL.iter().position(|&c| c == self).expect("registered")
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = CheckError;

    /// Accepts the kebab-case name or its snake_case spelling.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('_', "-");
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == norm)
            .ok_or_else(|| CheckError::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckParams {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub symbolic_alpha: bool,
    pub symbolic_x: bool,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams { n: 8, trials: 3, seed: 42, symbolic_alpha: false, symbolic_x: false }
    }
}

impl CheckParams {
    pub fn symbolic(mut self, on: bool) -> Self {
        self.symbolic_alpha = on;
        self.symbolic_x = on;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Decides the verdict.
    Primary,
    /// Reported only, e.g. the literal form of a corrected display.
    Informational,
}

/// A witness that two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Counterexample {
    /// Parameter names and values in text form; formal symbols read `sym`.
    pub params: Vec<(String, String)>,
    /// Matrix entry, or `(n, r)`-style indices for scalar families.
    pub entry: Option<(usize, usize)>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "at {}", params.join(", "))?;
        if let Some((i, j)) = self.entry {
            write!(f, ", entry ({i}, {j})")?;
        }
        write!(f, ": lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubResult {
    pub label: String,
    pub role: Role,
    pub passed: bool,
    /// Number of comparisons performed (stops at the first failure).
    pub evaluations: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CheckResult {
    pub id: CheckId,
    pub passed: bool,
    /// Label of the first failing primary sub-identity.
    pub sub_identity: Option<String>,
    pub subs: Vec<SubResult>,
    pub counterexample: Option<Counterexample>,
    pub error: Option<String>,
}

impl CheckResult {
    pub fn primary_count(&self) -> usize {
        self.subs.iter().filter(|s| s.role == Role::Primary).count()
    }

    fn from_subs(id: CheckId, subs: Vec<SubResult>) -> Self {
        let failing = subs.iter().find(|s| s.role == Role::Primary && !s.passed);
        CheckResult {
            id,
            passed: failing.is_none(),
            sub_identity: failing.map(|s| s.label.clone()),
            counterexample: failing.and_then(|s| s.counterexample.clone()),
            subs,
            error: None,
        }
    }

    fn from_error(id: CheckId, err: &CheckError) -> Self {
        CheckResult {
            id,
            passed: false,
            sub_identity: None,
            subs: Vec::new(),
            counterexample: Some(Counterexample { params: vec![], entry: None, lhs: "error".into(), rhs: err.to_string() }),
            error: Some(err.to_string()),
        }
    }
}

type StirlingFn = dyn Fn(u64, u64) -> Rational + Send + Sync;

/// Test hooks that replace building blocks inside checks.
#[derive(Clone, Default)]
pub struct Overrides {
    /// Replacement for the signed Stirling numbers of the first kind.
    pub stirling_first: Option<Arc<StirlingFn>>,
}

impl fmt::Debug for Overrides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Overrides").field("stirling_first", &self.stirling_first.is_some()).finish()
    }
}

impl Overrides {
    pub(crate) fn stirling_first(&self, n: u64, k: u64) -> Rational {
        match &self.stirling_first {
            Some(f) => f(n, k),
            None => crate::sequences::stirling_first(n, k),
        }
    }
}

/// Registered checks with their statements and parameter domains.
pub fn list_checks() -> Vec<(CheckId, &'static str, &'static str)> {
    CheckId::ALL.iter().map(|&c| (c, c.statement(), c.domain())).collect()
}

pub fn run_check(id: CheckId, params: &CheckParams) -> Result<CheckResult, CheckError> {
    run_check_with_overrides(id, params, &Overrides::default())
}

pub fn run_check_with_overrides(id: CheckId, params: &CheckParams, overrides: &Overrides) -> Result<CheckResult, CheckError> {
    if params.trials == 0 {
        return Err(CheckError::InvalidParams("trials must be at least 1".into()));
    }
    let mut ctx = ctx::Ctx::new(params, overrides, id.index() as u64);
    dispatch(id, &mut ctx)?;
    Ok(CheckResult::from_subs(id, ctx.finish()))
}

fn dispatch(id: CheckId, ctx: &mut ctx::Ctx) -> Result<(), CheckError> {
    use matrix_checks as m;
    use scalar_checks as s;
    use CheckId as C;
    match id {
        C::ScalarAddition => s::scalar_addition(ctx),
        C::ScalarTranslation => s::scalar_translation(ctx),
        C::ScalarThreeTerm => s::scalar_three_term(ctx),
        C::EpsilonConnection => s::epsilon_connection(ctx),
        C::EulerNumberParity => s::euler_number_parity(ctx),
        C::PascalInverse => m::pascal_inverse(ctx),
        C::PascalAddition => m::pascal_addition(ctx),
        C::PascalDifferential => m::pascal_differential(ctx),
        C::PascalSummationFactorization => m::pascal_summation_factorization(ctx),
        C::LucasPascalBridge => m::lucas_pascal_bridge(ctx),
        C::MatrixProductFormula => m::matrix_product_formula(ctx),
        C::MultiProduct => m::multi_product(ctx),
        C::MatrixPower => m::matrix_power(ctx),
        C::MatrixThreeTerm => m::matrix_three_term(ctx),
        C::SpecializedInverse => m::specialized_inverse(ctx),
        C::PascalTranslationFamily => m::pascal_translation_family(ctx),
        C::ShiftedInverse => m::shifted_inverse(ctx),
        C::SummationFactorizationEuler => m::summation_factorization_euler(ctx),
        C::LucasFactorizationEuler => m::lucas_factorization_euler(ctx),
        C::DerivativeIdentities => m::derivative_identities(ctx),
        C::FibonacciFactorization => m::fibonacci_factorization(ctx),
        C::MnInverses => m::mn_inverses(ctx),
        C::LucasFactorizationGeneral => m::lucas_factorization_general(ctx),
        C::L1l2Inverses => m::l1l2_inverses(ctx),
        C::FibonacciScalar => s::fibonacci_scalar(ctx),
        C::FibonacciScalarReflected => s::fibonacci_scalar_reflected(ctx),
        C::LucasScalar => s::lucas_scalar(ctx),
        C::LucasScalarReflected => s::lucas_scalar_reflected(ctx),
        C::EulerLucasNumeric => s::euler_lucas_numeric(ctx),
        C::StirlingSecondConnection => s::stirling_second_connection(ctx),
        C::StirlingFirstConnection => s::stirling_first_connection(ctx),
        C::StirlingMatrixFactorization => m::stirling_matrix_factorization(ctx),
        C::ClosedFormInverses => m::closed_form_inverses(ctx),
        C::VandermondeFactorization => m::vandermonde_factorization(ctx),
        C::EpsilonCombinatorial => s::epsilon_combinatorial(ctx),
    }
}

/// Runs the selected checks (all when `selection` is `None`) in registry
/// order. Errors become failed results carrying the error text.
pub fn run_suite(params: &CheckParams, selection: Option<&[CheckId]>) -> Vec<CheckResult> {
    run_suite_with(params, selection, Exec::default())
}

pub fn run_suite_with(params: &CheckParams, selection: Option<&[CheckId]>, exec: Exec) -> Vec<CheckResult> {
    let ids: Vec<CheckId> = match selection {
        Some(sel) => CheckId::ALL.iter().copied().filter(|c| sel.contains(c)).collect(),
        None => CheckId::ALL.to_vec(),
    };
    exec.map(ids.len(), |i| run_check(ids[i], params).unwrap_or_else(|e| CheckResult::from_error(ids[i], &e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        let list = list_checks();
        assert_eq!(list.len(), 35);
        assert!(list.iter().any(|(c, _, _)| *c == CheckId::MatrixProductFormula));
        assert!(list.iter().all(|(_, s, d)| !s.is_empty() && !d.is_empty()));
        assert_eq!(list, list_checks());
        for &c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
            assert_eq!(c.name().replace('-', "_").parse::<CheckId>().unwrap(), c);
        }
        assert!("no-such-check".parse::<CheckId>().is_err());
    }

    #[test]
    fn zero_trials_rejected() {
        let p = CheckParams { trials: 0, ..CheckParams::default() };
        assert!(matches!(run_check(CheckId::PascalAddition, &p), Err(CheckError::InvalidParams(_))));
    }

    #[test]
    fn documented_examples() {
        let p = CheckParams { n: 4, trials: 3, seed: 42, ..CheckParams::default() };
        assert!(run_check(CheckId::MatrixProductFormula, &p).unwrap().passed);
        let p = CheckParams { n: 6, trials: 1, seed: 1, ..CheckParams::default() };
        assert!(run_check(CheckId::SpecializedInverse, &p).unwrap().passed);
        let p = CheckParams { n: 0, ..CheckParams::default() };
        assert!(run_check(CheckId::ScalarAddition, &p).unwrap().passed);
    }

    #[test]
    fn selection_returns_single_result() {
        let r = run_suite(&CheckParams { n: 3, ..CheckParams::default() }, Some(&[CheckId::PascalAddition]));
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].id, CheckId::PascalAddition);
    }

    #[test]
    fn budget_error_becomes_failed_result() {
        let p = CheckParams { n: 11, ..CheckParams::default() };
        assert!(run_check(CheckId::EpsilonCombinatorial, &p).is_err());
        let r = run_suite(&p, Some(&[CheckId::EpsilonCombinatorial]));
        assert!(!r[0].passed && r[0].error.is_some() && r[0].counterexample.is_some());
    }

    fn corrupted_overrides() -> Overrides {
        Overrides {
            stirling_first: Some(Arc::new(|n, k| {
                if (n, k) == (2, 1) { Rational::from(5) } else { crate::sequences::stirling_first(n, k) }
            })),
        }
    }

    #[test]
    fn corrupted_stirling_table_is_caught() {
        let p = CheckParams { n: 5, ..CheckParams::default() };
        let clean = run_check(CheckId::StirlingFirstConnection, &p).unwrap();
        let composite = |r: &CheckResult| r.subs.iter().find(|s| s.role == Role::Informational).unwrap().clone();
        assert!(composite(&clean).passed);

        let bad = run_check_with_overrides(CheckId::StirlingFirstConnection, &p, &corrupted_overrides()).unwrap();
        assert!(!bad.passed);
        let sub = composite(&bad);
        assert!(!sub.passed);
        let c = sub.counterexample.unwrap();
        assert_eq!(c.entry, Some((2, 0)));
        assert!(c.params.contains(&("n".to_string(), "2".to_string())));
        assert!(c.params.contains(&("m".to_string(), "1".to_string())));
        // The printed form fails either way, but its right side changes.
        assert_ne!(bad.counterexample, clean.counterexample);
    }

    #[test]
    fn failure_carries_counterexample() {
        let p = CheckParams { n: 4, ..CheckParams::default() };
        for r in run_suite(&p, None) {
            assert_eq!(r.passed, r.counterexample.is_none(), "{}", r.id);
            assert_eq!(r.passed, r.sub_identity.is_none(), "{}", r.id);
        }
    }

    #[test]
    fn deterministic_across_runs_and_schedules() {
        let p = CheckParams { n: 4, trials: 2, seed: 7, ..CheckParams::default() };
        let a = run_suite_with(&p, None, Exec::Parallel);
        let b = run_suite_with(&p, None, Exec::Sequential);
        assert_eq!(a, b);
        assert_eq!(a, run_suite(&p, None));
        assert_eq!(a.iter().map(|r| r.id).collect::<Vec<_>>(), CheckId::ALL.to_vec());
    }

    #[test]
    fn seeds_change_draws() {
        let run = |seed| {
            let p = CheckParams { n: 3, trials: 1, seed, ..CheckParams::default() };
            run_check(CheckId::StirlingMatrixFactorization, &p).unwrap().counterexample
        };
        assert_ne!(run(1), run(2));
    }
}
