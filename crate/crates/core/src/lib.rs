//! Exact generalized Euler, Pascal, Fibonacci, Lucas, Stirling and
//! Vandermonde matrices over `Q[x, alpha]`, with a registry of identity
//! checks that compare both sides of each factorization entry by entry.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod matrix;
pub mod sequences;
pub mod suite;
mod par;

pub use catalog::{build, MatrixKind, MatrixSpec, Reading};
pub use exact::{BiPoly, Rational};
pub use matrix::Mat;
pub use par::Exec;
