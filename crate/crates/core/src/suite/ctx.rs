//! Sampling of parameter values and bookkeeping of sub-identity outcomes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{BiPoly, Rational};
use crate::matrix::Mat;

use super::{CheckParams, Counterexample, Overrides, Role, SubResult};

/// Symbols a check may ask for.
///
/// In symbolic mode `X` and `Alpha` are the formal variables, `Y` and `Beta`
/// sweep the integer grid `0..=n` (every identity has degree at most `n` in
/// them, so the grid is determining), and `X3`/`Alpha3` are always drawn at
/// random.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Sym {
    X,
    Y,
    Alpha,
    Beta,
    X3,
    Alpha3,
}

impl Sym {
    fn name(self) -> &'static str {
        match self {
            Sym::X => "x",
            Sym::Y => "y",
            Sym::Alpha => "alpha",
            Sym::Beta => "beta",
            Sym::X3 => "x3",
            Sym::Alpha3 => "alpha3",
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Sample {
    vals: Vec<(Sym, BiPoly)>,
}

impl Sample {
    pub fn get(&self, s: Sym) -> &BiPoly {
        &self.vals.iter().find(|(k, _)| *k == s).expect("symbol was requested").1
    }

    pub fn describe(&self, n: usize) -> Vec<(String, String)> {
        let mut out = vec![("n".to_string(), n.to_string())];
        for (s, v) in &self.vals {
            let text = if *v == BiPoly::x() || *v == BiPoly::alpha() { "sym".to_string() } else { v.to_string() };
            out.push((s.name().to_string(), text));
        }
        out
    }
}

pub(crate) struct Ctx<'a> {
    pub params: &'a CheckParams,
    pub overrides: &'a Overrides,
    rng: ChaCha8Rng,
    subs: Vec<SubResult>,
}

/// Draws a rational with numerator in `[-9, 9]` and denominator in `[1, 9]`.
fn draw(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=9);
    Rational::new(num, den)
}

impl<'a> Ctx<'a> {
    pub fn new(params: &'a CheckParams, overrides: &'a Overrides, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(stream);
        Ctx { params, overrides, rng, subs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    fn draw_for(&mut self, nonzero_x: bool, s: Sym) -> BiPoly {
        loop {
            let r = draw(&mut self.rng);
            if !(nonzero_x && s == Sym::X && r.is_zero()) {
                return BiPoly::constant(r);
            }
        }
    }

    /// Parameter assignments to evaluate a check on.
    pub fn samples(&mut self, syms: &[Sym]) -> Vec<Sample> {
        self.samples_with(syms, false)
    }

    /// As [`Ctx::samples`], but a drawn `x` is never zero.
    pub fn samples_nonzero_x(&mut self, syms: &[Sym]) -> Vec<Sample> {
        self.samples_with(syms, true)
    }

    fn samples_with(&mut self, syms: &[Sym], nonzero_x: bool) -> Vec<Sample> {
        let p = self.params;
        let grid = |s: Sym| match s {
            Sym::Y => p.symbolic_x,
            Sym::Beta => p.symbolic_alpha,
            _ => false,
        };
        let gridded: Vec<Sym> = syms.iter().copied().filter(|&s| grid(s)).collect();
        let count = if gridded.is_empty() {
            let any_random = syms.iter().any(|&s| match s {
                Sym::X => !p.symbolic_x,
                Sym::Alpha => !p.symbolic_alpha,
                _ => true,
            });
            if any_random { p.trials } else { 1 }
        } else {
            (p.n + 1).pow(gridded.len() as u32)
        };
        let mut out = Vec::with_capacity(count);
        for idx in 0..count {
            let mut vals = Vec::with_capacity(syms.len());
            let mut rest = idx;
            for &s in syms {
                let v = match s {
                    Sym::X if p.symbolic_x => BiPoly::x(),
                    Sym::Alpha if p.symbolic_alpha => BiPoly::alpha(),
                    _ if grid(s) => {
                        let v = rest % (p.n + 1);
                        rest /= p.n + 1;
                        BiPoly::constant(v as i64)
                    }
                    _ => self.draw_for(nonzero_x, s),
                };
                vals.push((s, v));
            }
            out.push(Sample { vals });
        }
        out
    }

    /// Registers a sub-identity and returns its handle. Registration order
    /// is the reporting order.
    pub fn sub(&mut self, label: &str, role: Role) -> usize {
        self.subs.push(SubResult { label: label.to_string(), role, passed: true, evaluations: 0, counterexample: None });
        self.subs.len() - 1
    }

    /// False once the sub-identity has failed; later evaluations are skipped.
    pub fn active(&self, idx: usize) -> bool {
        self.subs[idx].passed
    }

    pub fn mat(&mut self, idx: usize, params: impl FnOnce() -> Vec<(String, String)>, f: impl FnOnce() -> (Mat, Mat)) {
        if !self.active(idx) {
            return;
        }
        let (lhs, rhs) = f();
        self.subs[idx].evaluations += 1;
        if let Some((i, j)) = lhs.first_difference(&rhs) {
            let (l, r) = if lhs.order() == rhs.order() {
                (lhs.get(i, j).to_string(), rhs.get(i, j).to_string())
            } else {
                (format!("order {}", lhs.order()), format!("order {}", rhs.order()))
            };
            self.fail(idx, Counterexample { params: params(), entry: Some((i, j)), lhs: l, rhs: r });
        }
    }

    /// Compares two scalars (polynomials). On failure the entry is
    /// `(index, k)` with `k` the lowest power of `x` whose coefficients differ.
    pub fn scalar(&mut self, idx: usize, params: impl FnOnce() -> Vec<(String, String)>, index: usize, lhs: &BiPoly, rhs: &BiPoly) {
        if !self.active(idx) {
            return;
        }
        self.subs[idx].evaluations += 1;
        if lhs != rhs {
            let k = (lhs - rhs).terms().map(|(m, _)| m.x).min().unwrap_or(0) as usize;
            self.fail(idx, Counterexample { params: params(), entry: Some((index, k)), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    fn fail(&mut self, idx: usize, c: Counterexample) {
        let sub = &mut self.subs[idx];
        sub.passed = false;
        sub.counterexample = Some(c);
    }

    pub fn finish(self) -> Vec<SubResult> {
        self.subs
    }
}
