//! CLI behaviour. Named to sort before `acceptance`, whose expected
//! failures would otherwise stop `cargo test` before this target runs.

use std::process::{Command, Output};

use euler_matrix::exact::Monomial;
use euler_matrix::{build, BiPoly, Mat, MatrixKind, MatrixSpec, Rational};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulermat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// In-process run; returns (status, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("eulermat").chain(args.iter().copied());
    let code = eulermat::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn csv_rows(s: &str) -> Vec<Vec<String>> {
    s.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

/// Flags that build `kind` at order `n`; formal values where `formal` is set.
fn flags(kind: MatrixKind, n: usize, formal: bool) -> (Vec<String>, MatrixSpec) {
    let mut args = vec!["--kind".to_string(), kind.name().to_string(), "--n".into(), n.to_string()];
    let mut spec = MatrixSpec::new(kind, n);
    let (xs, x) = if formal { ("sym", BiPoly::x()) } else { ("-2/3", BiPoly::constant(Rational::new(-2, 3))) };
    let (as_, a) = if formal { ("sym", BiPoly::alpha()) } else { ("5/2", BiPoly::constant(Rational::new(5, 2))) };
    for p in kind.params() {
        match p.name() {
            "x" => {
                args.extend(["--x".into(), xs.into()]);
                spec = spec.x(x.clone());
            }
            "alpha" => {
                args.extend(["--alpha".into(), as_.into()]);
                spec = spec.alpha(a.clone());
            }
            "m" => {
                args.extend(["--m".into(), "2".into()]);
                spec = spec.m(2);
            }
            "k" => {
                args.extend(["--k".into(), n.to_string()]);
                spec = spec.k(n);
            }
            other => panic!("no catalog kind takes {other}"),
        }
    }
    (args, spec)
}

fn parse_json(text: &str) -> (Value, Mat) {
    let doc: Value = serde_json::from_str(text).unwrap();
    let poly = doc["ring"] == "poly";
    let rows = doc["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|e| {
                    if poly {
                        BiPoly::from_terms(e.as_array().unwrap().iter().map(|t| {
                            let c: Rational = t["coeff"].as_str().unwrap().parse().unwrap();
                            (Monomial::new(t["x"].as_u64().unwrap() as u32, t["alpha"].as_u64().unwrap() as u32), c)
                        }))
                    } else {
                        BiPoly::constant(e.as_str().unwrap().parse::<Rational>().unwrap())
                    }
                })
                .collect()
        })
        .collect();
    (doc, Mat::from_rows(rows).unwrap())
}

fn parse_latex_rational(cell: &str) -> Rational {
    let (neg, body) = match cell.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, cell),
    };
    let r: Rational = match body.strip_prefix("\\frac{") {
        Some(rest) => {
            let (p, q) = rest.trim_end_matches('}').split_once("}{").unwrap();
            format!("{p}/{q}").parse().unwrap()
        }
        None => body.parse().unwrap(),
    };
    if neg {
        -r
    } else {
        r
    }
}

fn parse_latex(text: &str) -> Vec<Vec<Rational>> {
    let body = text.trim().strip_prefix("\\begin{bmatrix}").unwrap().strip_suffix("\\end{bmatrix}").unwrap();
    body.trim().split(" \\\\\n").map(|row| row.split(" & ").map(parse_latex_rational).collect()).collect()
}

#[test]
fn documented_gen_examples() {
    let o = bin(&["gen", "--kind", "specialized-euler", "--n", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[2].join(","), "-1/4,0,1,0");

    let o = bin(&["gen", "--kind", "pascal", "--n", "2", "--x", "1/2", "--format", "csv"]);
    assert_eq!(stdout(&o), "1,0,0\n1/2,1,0\n1/4,1,1\n");

    let o = bin(&["gen", "--kind", "g-mat", "--n", "4", "--x", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("nonzero x"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn documented_invert_examples() {
    let o = bin(&["invert", "--kind", "euler", "--n", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("1/2,3/2,3/2,1"));

    let inv = run(&["invert", "--kind", "pascal", "--n", "3", "--x", "1", "--format", "csv"]);
    let neg = run(&["gen", "--kind", "pascal", "--n", "3", "--x", "-1", "--format", "csv"]);
    assert_eq!(inv, neg);

    let o = bin(&["invert", "--kind", "vandermonde", "--n", "2", "--x", "1/3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not unit lower triangular"));
}

#[test]
fn json_round_trip_for_every_kind() {
    for &kind in MatrixKind::ALL {
        for formal in [false, true] {
            let (args, spec) = flags(kind, 4, formal);
            let mut argv = vec!["gen"];
            argv.extend(args.iter().map(String::as_str));
            argv.extend(["--format", "json"]);
            let (code, out, err) = run(&argv);
            assert_eq!(code, 0, "{kind}: {err}");
            let (doc, m) = parse_json(&out);
            assert_eq!(m, build(&spec).unwrap(), "{kind} formal={formal}");
            assert_eq!(doc["kind"], kind.name());
            assert_eq!(doc["n"], 4);
            let expect_ring = if m.is_rational() { "rational" } else { "poly" };
            assert_eq!(doc["ring"], expect_ring);
        }
    }
}

#[test]
fn formats_agree_entry_for_entry() {
    for &kind in MatrixKind::ALL {
        let (args, spec) = flags(kind, 5, false);
        let gen = |format: &str| {
            let mut argv = vec!["gen"];
            argv.extend(args.iter().map(String::as_str));
            argv.extend(["--format", format]);
            let (code, out, err) = run(&argv);
            assert_eq!(code, 0, "{kind}: {err}");
            out
        };
        let truth = build(&spec).unwrap();
        let from_json = parse_json(&gen("json")).1;
        let from_csv: Vec<Vec<Rational>> =
            csv_rows(&gen("csv")).iter().map(|r| r.iter().map(|c| c.parse().unwrap()).collect()).collect();
        let from_latex = parse_latex(&gen("latex"));
        let pretty: Vec<Vec<Rational>> =
            gen("pretty").lines().map(|l| l.split_whitespace().map(|c| c.parse().unwrap()).collect()).collect();
        assert_eq!(from_json, truth, "{kind}");
        for (i, row) in truth.rows().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let v = e.as_constant().unwrap();
                assert_eq!(from_csv[i][j], v, "{kind} csv ({i}, {j})");
                assert_eq!(from_latex[i][j], v, "{kind} latex ({i}, {j})");
                assert_eq!(pretty[i][j], v, "{kind} pretty ({i}, {j})");
            }
        }
    }
}

#[test]
fn latex_uses_fractions() {
    let (_, out, _) = run(&["gen", "--kind", "d-matrix", "--n", "3", "--format", "latex"]);
    assert!(out.contains("\\frac{1}{4} & 0 & 1 & 0"), "{out}");
    assert!(!out.contains('/'));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["gen", "--kind", "gen-euler", "--n", "6", "--x", "sym", "--alpha", "sym", "--format", "json"][..],
        &["invert", "--kind", "lucas", "--n", "7", "--format", "latex"][..],
        &["gen", "--kind", "st-m", "--n", "5", "--m", "3", "--format", "pretty"][..],
    ] {
        let a = bin(args);
        let b = bin(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn as_printed_reading_changes_the_entries() {
    let resolved = run(&["gen", "--kind", "g-mat", "--n", "4", "--x", "3", "--format", "csv"]);
    let printed = run(&["gen", "--kind", "g-mat", "--n", "4", "--x", "3", "--format", "csv", "--as-printed"]);
    assert_eq!((resolved.0, printed.0), (0, 0));
    assert_ne!(resolved.1, printed.1);
}

#[test]
fn bad_flags_exit_two_and_name_the_flag() {
    for (args, flag) in [
        (&["gen", "--kind", "pascal", "--n", "2", "--x", "1/0"][..], "--x"),
        (&["gen", "--kind", "pascal", "--n", "-1", "--x", "1"][..], "--n"),
        (&["gen", "--kind", "no-such-kind", "--n", "2"][..], "--kind"),
        (&["gen", "--kind", "pascal", "--n", "2", "--format", "xml"][..], "--format"),
        (&["verify", "--trials", "0"][..], "--trials"),
        (&["verify", "--seed", "abc"][..], "--seed"),
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains(flag), "{args:?}: {err}");
    }
}

#[test]
fn constructor_errors_exit_one() {
    for args in [
        &["gen", "--kind", "pascal", "--n", "2"][..],
        &["gen", "--kind", "euler", "--n", "2", "--x", "1"][..],
        &["gen", "--kind", "summation-g", "--n", "2", "--k", "3", "--x", "1"][..],
        &["gen", "--kind", "st-m", "--n", "2", "--m", "0"][..],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(err.starts_with("error: "), "{err}");
    }
}

#[test]
fn unknown_check_lists_valid_names() {
    let o = bin(&["verify", "--check", "no-such-check"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("pascal-addition") && err.contains("epsilon-combinatorial"), "{err}");
}

#[test]
fn verify_single_check_symbolic() {
    let o = bin(&["verify", "--check", "pascal-addition", "--symbolic", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS pascal-addition 1\n");
}

#[test]
fn verify_selection_and_snake_case_names() {
    let (code, out, _) = run(&["verify", "--check", "pascal_inverse", "--check", "closed-form-inverses", "--n-max", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "PASS pascal-inverse 2\nPASS closed-form-inverses 2\n");
}

#[test]
fn failing_verify_prints_first_counterexample() {
    let (code, out, err) = run(&["verify", "--check", "stirling-first-connection", "--n-max", "4"]);
    assert_eq!(code, 1);
    assert_eq!(out, "FAIL stirling-first-connection 1\n");
    assert!(err.contains("check: stirling-first-connection"), "{err}");
    assert!(err.contains("lhs: ") && err.contains("rhs: ") && err.contains("entry: "), "{err}");
}

#[test]
fn report_is_written_and_deterministic() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let (a, b) = (dir.join("cli-report-a.json"), dir.join("cli-report-b.json"));
    for path in [&a, &b] {
        let (code, _, _) = run(&["verify", "--check", "matrix-power", "--check", "epsilon-connection", "--n-max", "5", "--report", path.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let doc: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(doc["params"]["n_max"], 5);
    assert_eq!(doc["params"]["checks"], serde_json::json!(["epsilon-connection", "matrix-power"]));
    assert_eq!(doc["summary"]["passed"], 2);
    assert_eq!(doc["results"].as_array().unwrap().len(), 2);
}
