//! The `eulermat` command line: `gen`, `invert` and `verify`.
//!
//! Everything goes through [`run`], which writes to the given streams and
//! returns the exit status, so tests can drive the CLI in-process.

mod render;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use euler_matrix::matrix::inverse_unit_lower;
use euler_matrix::suite::{run_suite, CheckId, CheckParams};
use euler_matrix::{build, BiPoly, MatrixKind, MatrixSpec, Rational, Reading};

pub use render::{render, Format};

#[derive(Parser, Debug)]
#[command(name = "eulermat", version, about = "Exact generalized Euler, Pascal, Fibonacci, Lucas and Stirling matrices")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a matrix and print it.
    Gen(MatrixArgs),
    /// Build a unit lower triangular matrix and print its inverse.
    Invert(MatrixArgs),
    /// Run identity checks and report PASS/FAIL per check.
    Verify(VerifyArgs),
}

/// A parameter value: a rational constant or the formal variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Sym,
    Const(Rational),
}

impl FromStr for Value {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "sym" {
            return Ok(Value::Sym);
        }
        s.parse::<Rational>().map(Value::Const).map_err(|e| format!("{e}; expected a rational like -3/4 or `sym`"))
    }
}

impl Value {
    fn text(&self) -> String {
        match self {
            Value::Sym => "sym".into(),
            Value::Const(r) => r.to_string(),
        }
    }
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = MatrixKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown kind; valid kinds: {}", names.join(", "))
    })
}

fn parse_check(s: &str) -> Result<String, String> {
    if s == "all" || s.parse::<CheckId>().is_ok() {
        return Ok(s.to_string());
    }
    let names: Vec<&str> = CheckId::ALL.iter().map(|c| c.name()).collect();
    Err(format!("unknown check; valid names: all, {}", names.join(", ")))
}

#[derive(Args, Debug)]
struct MatrixArgs {
    /// Matrix family, kebab-case (e.g. specialized-euler, st-m).
    #[arg(long, value_parser = parse_kind)]
    kind: MatrixKind,
    /// Order parameter.
    #[arg(long)]
    n: usize,
    /// Rational value or `sym`.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<Value>,
    /// Rational value or `sym` (formal y is the variable x).
    #[arg(long, allow_hyphen_values = true)]
    y: Option<Value>,
    /// Rational value or `sym`.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Value>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Use the entry formula exactly as printed instead of the corrected one.
    #[arg(long)]
    as_printed: bool,
}

impl MatrixArgs {
    fn spec(&self) -> MatrixSpec {
        let var = |v: &Value, formal: BiPoly| match v {
            Value::Sym => formal,
            Value::Const(r) => BiPoly::constant(r.clone()),
        };
        MatrixSpec {
            kind: self.kind,
            n: self.n,
            x: self.x.as_ref().map(|v| var(v, BiPoly::x())),
            y: self.y.as_ref().map(|v| var(v, BiPoly::x())),
            alpha: self.alpha.as_ref().map(|v| var(v, BiPoly::alpha())),
            m: self.m,
            k: self.k,
            reading: if self.as_printed { Reading::AsPrinted } else { Reading::Resolved },
        }
    }

    fn params(&self) -> Vec<(&'static str, serde_json::Value)> {
        let mut out = Vec::new();
        for (name, v) in [("x", &self.x), ("y", &self.y), ("alpha", &self.alpha)] {
            if let Some(v) = v {
                out.push((name, v.text().into()));
            }
        }
        if let Some(m) = self.m {
            out.push(("m", m.into()));
        }
        if let Some(k) = self.k {
            out.push(("k", k.into()));
        }
        if self.as_printed {
            out.push(("reading", "as-printed".into()));
        }
        out
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check name, or `all`. May be repeated.
    #[arg(long, value_parser = parse_check)]
    check: Vec<String>,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Treat x and alpha as formal variables.
    #[arg(long)]
    symbolic: bool,
    /// Write a JSON report to this path.
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit status: 0 success, 1 failure, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.cmd {
        Command::Gen(a) => cmd_matrix(a, false, out, err),
        Command::Invert(a) => cmd_matrix(a, true, out, err),
        Command::Verify(a) => cmd_verify(a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: writing output: {e}");
        1
    })
}

fn cmd_matrix(a: &MatrixArgs, invert: bool, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let mut m = match build(&a.spec()) {
        Ok(m) => m,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(1);
        }
    };
    if invert {
        m = match inverse_unit_lower(&m) {
            Ok(inv) => inv,
            Err(e) => {
                writeln!(err, "error: cannot invert {}: {e}", a.kind)?;
                return Ok(1);
            }
        };
    }
    out.write_all(render(&m, a.kind, a.n, &a.params(), a.format).as_bytes())?;
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let selection: Option<Vec<CheckId>> = if a.check.is_empty() || a.check.iter().any(|c| c == "all") {
        None
    } else {
        Some(a.check.iter().map(|c| c.parse().expect("validated by clap")).collect())
    };
    let params = CheckParams { n: a.n_max, trials: a.trials as usize, seed: a.seed, symbolic_alpha: a.symbolic, symbolic_x: a.symbolic };
    let results = run_suite(&params, selection.as_deref());

    for r in &results {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} {} {}", r.id, r.primary_count())?;
    }
    if let Some(path) = &a.report {
        let body = report::to_json(&params, selection.as_deref(), &results);
        if let Err(e) = std::fs::write(path, body) {
            writeln!(err, "error: writing report {}: {e}", path.display())?;
            return Ok(1);
        }
    }
    match results.iter().find(|r| !r.passed) {
        None => Ok(0),
        Some(r) => {
            let failed = results.iter().filter(|r| !r.passed).count();
            writeln!(err, "{failed} of {} checks failed; first failure:", results.len())?;
            writeln!(err, "  check: {}", r.id)?;
            writeln!(err, "  statement: {}", r.id.statement())?;
            if let Some(sub) = &r.sub_identity {
                writeln!(err, "  sub-identity: {sub}")?;
            }
            if let Some(c) = &r.counterexample {
                for (k, v) in &c.params {
                    writeln!(err, "  {k} = {v}")?;
                }
                if let Some((i, j)) = c.entry {
                    writeln!(err, "  entry: ({i}, {j})")?;
                }
                writeln!(err, "  lhs: {}", c.lhs)?;
                writeln!(err, "  rhs: {}", c.rhs)?;
            }
            Ok(1)
        }
    }
}
