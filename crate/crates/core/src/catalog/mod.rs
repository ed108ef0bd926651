//! Every matrix family, addressed by a single descriptor.

pub mod families;
mod kind;

pub use families::{euler_inverse, Reading};
pub use kind::{MatrixKind, Param};

use crate::error::SpecError;
use crate::exact::BiPoly;
use crate::matrix::Mat;

/// A family plus its parameters. `x`, `y` and `alpha` are polynomials so
/// that a parameter can be a rational constant, a formal variable, or a
/// shifted expression such as `x + 1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpec {
    pub kind: MatrixKind,
    pub n: usize,
    pub x: Option<BiPoly>,
    pub y: Option<BiPoly>,
    pub alpha: Option<BiPoly>,
    pub m: Option<u64>,
    pub k: Option<usize>,
    pub reading: Reading,
}

impl MatrixSpec {
    pub fn new(kind: MatrixKind, n: usize) -> Self {
        MatrixSpec { kind, n, x: None, y: None, alpha: None, m: None, k: None, reading: Reading::Resolved }
    }

    pub fn x(mut self, x: impl Into<BiPoly>) -> Self {
        self.x = Some(x.into());
        self
    }

    pub fn y(mut self, y: impl Into<BiPoly>) -> Self {
        self.y = Some(y.into());
        self
    }

    pub fn alpha(mut self, alpha: impl Into<BiPoly>) -> Self {
        self.alpha = Some(alpha.into());
        self
    }

    pub fn m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn reading(mut self, reading: Reading) -> Self {
        self.reading = reading;
        self
    }

    /// Number of rows of the built matrix.
    pub fn order(&self) -> usize {
        match self.kind {
            MatrixKind::SummationS => self.k.unwrap_or(0) + 1,
            MatrixKind::FactorialStirling => self.n,
            _ => self.n + 1,
        }
    }

    fn present(&self, p: Param) -> bool {
        match p {
            Param::X => self.x.is_some(),
            Param::Y => self.y.is_some(),
            Param::Alpha => self.alpha.is_some(),
            Param::M => self.m.is_some(),
            Param::K => self.k.is_some(),
        }
    }

    /// Checks parameter presence and ranges without building anything.
    pub fn validate(&self) -> Result<(), SpecError> {
        let kind = self.kind.name();
        for p in [Param::X, Param::Y, Param::Alpha, Param::M, Param::K] {
            match (self.kind.requires(p), self.present(p)) {
                (true, false) => return Err(SpecError::MissingParam { kind, param: p.name() }),
                (false, true) => return Err(SpecError::UnexpectedParam { kind, param: p.name() }),
                _ => {}
            }
        }
        if matches!(self.kind, MatrixKind::GMat | MatrixKind::HMat) && self.x.as_ref().is_some_and(BiPoly::is_zero) {
            return Err(SpecError::ZeroX { kind });
        }
        if let Some(k) = self.k {
            if k < 1 || k > self.n {
                return Err(SpecError::OutOfRange { kind, param: "k", detail: format!("need 1 <= k <= n = {}, got {k}", self.n) });
            }
        }
        if self.m == Some(0) {
            return Err(SpecError::OutOfRange { kind, param: "m", detail: "m must be positive".into() });
        }
        if self.kind == MatrixKind::FactorialStirling && self.n == 0 {
            return Err(SpecError::OutOfRange { kind, param: "n", detail: "the factorial Stirling matrix needs n >= 1".into() });
        }
        Ok(())
    }
}

/// Builds the matrix described by `spec`.
pub fn build(spec: &MatrixSpec) -> Result<Mat, SpecError> {
    use families as f;
    use MatrixKind as K;
    spec.validate()?;
    let n = spec.n;
    let x = || spec.x.as_ref().expect("validated");
    let alpha = || spec.alpha.as_ref().expect("validated");
    let k = || spec.k.expect("validated");
    let r = spec.reading;
    Ok(match spec.kind {
        K::Identity => f::identity(n),
        K::Pascal => f::pascal(n, x()),
        K::SummationS => f::summation_s(k(), x()),
        K::SummationG => f::summation_g(n, k(), x()),
        K::PascalDerivation => f::pascal_derivation(n),
        K::GenEuler => f::gen_euler(n, alpha(), x()),
        K::EulerPoly => f::euler_poly(n, x()),
        K::Euler => f::euler(n),
        K::SpecializedEuler => f::specialized_euler(n),
        K::DMatrix => f::d_matrix(n),
        K::Fibonacci => f::fibonacci_matrix(n),
        K::FibonacciInverseClosed => f::fibonacci_inverse_closed(n),
        K::Lucas => f::lucas_matrix(n),
        K::LucasInverseClosed => f::lucas_inverse_closed(n),
        K::GMat => f::g_mat(n, x(), r),
        K::HMat => f::h_mat(n, x(), r),
        K::MMat => f::m_mat(n, alpha(), x()),
        K::NMat => f::n_mat(n, alpha(), x()),
        K::L1Mat => f::l1_mat(n, alpha(), x(), r),
        K::L2Mat => f::l2_mat(n, alpha(), x(), r),
        K::StirlingFirst => f::stirling_first_matrix(n),
        K::StirlingSecond => f::stirling_second_matrix(n),
        K::FactorialStirling => f::factorial_stirling(n),
        K::StM => f::st_m(n, spec.m.expect("validated")),
        K::CTilde => f::c_tilde(n, r),
        K::DTilde => f::d_tilde(n, r),
        K::ShiftedEuler => f::shifted_euler(n, x()),
        K::Vandermonde => f::vandermonde(n, x()),
        K::DeltaBinom => f::delta_binom(n, x()),
    })
}
