use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("malformed rational {0:?}: expected [-]digits[/digits]")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("shift amount must not contain x")]
    ShiftContainsX,
    #[error("malformed polynomial term {0:?}")]
    MalformedTerm(String),
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("matrix is not unit lower triangular (entry ({row}, {col}) = {entry})")]
    NotUnitLowerTriangular { row: usize, col: usize, entry: String },
    #[error("matrix order must be at least 1")]
    EmptyMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("Lucas numbers start at L_1; index 0 is undefined")]
    LucasIndexZero,
    #[error("alternating permutation enumeration limited to n <= {max}, got {n}")]
    EnumerationBudget { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("{kind} requires parameter `{param}`")]
    MissingParam { kind: &'static str, param: &'static str },
    #[error("{kind} does not take parameter `{param}`")]
    UnexpectedParam { kind: &'static str, param: &'static str },
    #[error("{kind} requires a nonzero x")]
    ZeroX { kind: &'static str },
    #[error("{kind}: parameter `{param}` out of range ({detail})")]
    OutOfRange { kind: &'static str, param: &'static str, detail: String },
    #[error("unknown matrix kind {0:?}")]
    UnknownKind(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("invalid check parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}
