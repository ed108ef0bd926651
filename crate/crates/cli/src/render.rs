//! Matrix output formats.

use clap::ValueEnum;
use euler_matrix::exact::Monomial;
use euler_matrix::{BiPoly, Mat, MatrixKind, Rational};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
    Latex,
}

#[derive(Serialize)]
struct Term {
    coeff: String,
    x: u32,
    alpha: u32,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Entry {
    Rational(String),
    Poly(Vec<Term>),
}

#[derive(Serialize)]
struct Doc<'a> {
    kind: &'a str,
    n: usize,
    params: serde_json::Map<String, serde_json::Value>,
    ring: &'static str,
    entries: Vec<Vec<Entry>>,
}

pub fn render(m: &Mat, kind: MatrixKind, n: usize, params: &[(&str, serde_json::Value)], format: Format) -> String {
    match format {
        Format::Pretty => pretty(m),
        Format::Csv => csv(m),
        Format::Latex => latex(m),
        Format::Json => json(m, kind, n, params),
    }
}

fn pretty(m: &Mat) -> String {
    let cells: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    let widths: Vec<usize> = (0..m.order()).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for row in &cells {
        let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        s.push_str(padded.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn csv(m: &Mat) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn json(m: &Mat, kind: MatrixKind, n: usize, params: &[(&str, serde_json::Value)]) -> String {
    let poly = !m.is_rational();
    let entry = |e: &BiPoly| {
        if poly {
            Entry::Poly(e.graded_terms().into_iter().map(|(mono, c)| Term { coeff: c.to_string(), x: mono.x, alpha: mono.alpha }).collect())
        } else {
            Entry::Rational(e.to_string())
        }
    };
    let doc = Doc {
        kind: kind.name(),
        n,
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        ring: if poly { "poly" } else { "rational" },
        entries: m.rows().map(|r| r.iter().map(entry).collect()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn latex(m: &Mat) -> String {
    let mut s = String::from("\\begin{bmatrix}\n");
    let rows: Vec<String> = m.rows().map(|r| r.iter().map(latex_poly).collect::<Vec<_>>().join(" & ")).collect();
    s.push_str(&rows.join(" \\\\\n"));
    s.push_str("\n\\end{bmatrix}\n");
    s
}

fn latex_rational(r: &Rational) -> String {
    let mag = r.abs();
    let sign = if r.is_negative() { "-" } else { "" };
    if mag.is_integer() {
        format!("{sign}{mag}")
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let var = |name: &str, e: u32| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{{{e}}}"),
    };
    let a = var("\\alpha", m.alpha);
    let x = var("x", m.x);
    match (x.is_empty(), a.is_empty()) {
        (false, false) => format!("{x} {a}"),
        _ => format!("{x}{a}"),
    }
}

/// Terms in graded-lex order; coefficients as `\frac{p}{q}`.
pub fn latex_poly(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (m, c)) in p.graded_terms().iter().enumerate() {
        match (i, c.is_negative()) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let mag = c.abs();
        if m == &Monomial::ONE {
            s.push_str(&latex_rational(&mag));
        } else {
            if !mag.is_one() {
                s.push_str(&latex_rational(&mag));
                s.push(' ');
            }
            s.push_str(&latex_monomial(m));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_rationals() {
        assert_eq!(latex_poly(&BiPoly::constant(Rational::new(-3, 4))), "-\\frac{3}{4}");
        assert_eq!(latex_poly(&BiPoly::constant(5)), "5");
        assert_eq!(latex_poly(&BiPoly::zero()), "0");
    }

    #[test]
    fn latex_polynomials() {
        let p = BiPoly::x().pow(2) - BiPoly::monomial(Rational::new(1, 2), 1, 1) + BiPoly::alpha() - BiPoly::constant(1);
        assert_eq!(latex_poly(&p), "x^{2} - \\frac{1}{2} x \\alpha + \\alpha - 1");
    }

    #[test]
    fn pretty_aligns_columns() {
        let m = Mat::from_rows(vec![vec![BiPoly::constant(1), BiPoly::zero()], vec![BiPoly::constant(Rational::new(-1, 2)), BiPoly::constant(1)]]).unwrap();
        assert_eq!(pretty(&m), "   1  0\n-1/2  1\n");
    }
}
