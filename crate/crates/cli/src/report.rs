//! JSON report for `verify --report`. Carries parameters and results only,
//! never timings, so identical flags give identical bytes.

use euler_matrix::suite::{CheckId, CheckParams, CheckResult, Counterexample, Role};
use serde::Serialize;

#[derive(Serialize)]
struct Params<'a> {
    n_max: usize,
    trials: usize,
    seed: u64,
    symbolic: bool,
    checks: Vec<&'a str>,
}

#[derive(Serialize)]
struct Witness<'a> {
    params: Vec<[&'a str; 2]>,
    entry: Option<[usize; 2]>,
    lhs: &'a str,
    rhs: &'a str,
}

impl<'a> From<&'a Counterexample> for Witness<'a> {
    fn from(c: &'a Counterexample) -> Self {
        Witness {
            params: c.params.iter().map(|(k, v)| [k.as_str(), v.as_str()]).collect(),
            entry: c.entry.map(|(i, j)| [i, j]),
            lhs: &c.lhs,
            rhs: &c.rhs,
        }
    }
}

#[derive(Serialize)]
struct Sub<'a> {
    label: &'a str,
    role: &'static str,
    passed: bool,
    evaluations: usize,
    counterexample: Option<Witness<'a>>,
}

#[derive(Serialize)]
struct Check<'a> {
    check: &'static str,
    passed: bool,
    sub_identity: Option<&'a str>,
    error: Option<&'a str>,
    counterexample: Option<Witness<'a>>,
    subs: Vec<Sub<'a>>,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    params: Params<'a>,
    summary: Summary,
    results: Vec<Check<'a>>,
}

pub fn to_json(params: &CheckParams, selection: Option<&[CheckId]>, results: &[CheckResult]) -> String {
    let checks = match selection {
        None => vec!["all"],
        Some(sel) => CheckId::ALL.iter().filter(|c| sel.contains(c)).map(|c| c.name()).collect(),
    };
    let passed = results.iter().filter(|r| r.passed).count();
    let report = Report {
        params: Params { n_max: params.n, trials: params.trials, seed: params.seed, symbolic: params.symbolic_x, checks },
        summary: Summary { total: results.len(), passed, failed: results.len() - passed },
        results: results
            .iter()
            .map(|r| Check {
                check: r.id.name(),
                passed: r.passed,
                sub_identity: r.sub_identity.as_deref(),
                error: r.error.as_deref(),
                counterexample: r.counterexample.as_ref().map(Witness::from),
                subs: r
                    .subs
                    .iter()
                    .map(|s| Sub {
                        label: &s.label,
                        role: match s.role {
                            Role::Primary => "primary",
                            Role::Informational => "informational",
                        },
                        passed: s.passed,
                        evaluations: s.evaluations,
                        counterexample: s.counterexample.as_ref().map(Witness::from),
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&report).expect("plain data serializes");
    s.push('\n');
    s
}
