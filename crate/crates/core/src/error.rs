use num_complex::Complex64;
use thiserror::Error;

use crate::parse::ParseDiagnostic;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the zero polynomial has no roots to solve for")]
    ZeroPolynomial,

    /// Degree outside what the requested solver handles. Degree five and
    /// above would need the quintic-to-sextic construction, which is not
    /// provided.
    #[error("unsupported degree {degree}: this solver handles degrees {min} to {max}")]
    UnsupportedDegree { degree: usize, min: usize, max: usize },

    #[error("numeric overflow: a non-finite value was produced in {context}")]
    NumericOverflow { context: &'static str },

    #[error("value is not a root of the polynomial (|P(x)| = {residual:e}, allowed {allowed:e})")]
    NotARoot { residual: f64, allowed: f64 },

    #[error("length mismatch: {left} computed values against {right} expected")]
    LengthMismatch { left: usize, right: usize },

    #[error("singular decomposition: every branch and shift leaves |1 - p^K| at or below {threshold:e}")]
    SingularDecomposition { threshold: f64 },

    #[error("no convergence after {iterations} iterations (best residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        best: Vec<Complex64>,
        residual: f64,
    },

    #[error("{0}")]
    Parse(#[from] ParseDiagnostic),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
