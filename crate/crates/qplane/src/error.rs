use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },
    #[error("series diverges: |x| = {x} outside radius {radius}")]
    Divergence { x: f64, radius: f64 },
    #[error("lattice sum not summable within index cap {cap}")]
    NonSummable { cap: i64 },
    #[error("lattice hole: sample {index} missing and not covered by the decay envelope")]
    LatticeHole { index: i64 },
    #[error("argument {x} outside supported range (max {max})")]
    OutOfRange { x: f64, max: f64 },
    #[error("truncation too small: need J >= {needed}, have {have}")]
    TruncationTooSmall { needed: i64, have: i64 },
    #[error("window violation: column {column} outside interior window [{lo}, {hi}]")]
    WindowViolation { column: i64, lo: i64, hi: i64 },
    #[error("bracketing failure: {0}")]
    Bracketing(String),
    #[error("resolution failure: {0}")]
    Resolution(String),
    #[error("non-finite moment: {0}")]
    NonFinite(String),
    #[error("not a quantum-plane element: monomial carries n^{0}")]
    NotPlaneElement(i64),
    #[error("polar monomial r^{n} e^({j} i o) is not a polynomial in z+, z-")]
    NotPolynomial { n: u32, j: i64 },
    #[error("non-normalizable state: {0}")]
    NonNormalizable(String),
}

pub type Result<T> = std::result::Result<T, QError>;
