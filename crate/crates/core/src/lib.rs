//! Roots of polynomials of degree 2 to 4 by a single decomposition method,
//! with classical and iterative oracles to check it against.
//!
//! ```
//! use unisolve::{parse_polynomial, solve_unified};
//!
//! let poly = parse_polynomial("x^2 - 3x + 2").unwrap();
//! let report = solve_unified(&poly).unwrap();
//! let roots = report.sorted_roots();
//! assert!((roots[0].re - 1.0).abs() < 1e-12);
//! assert!((roots[1].re - 2.0).abs() < 1e-12);
//! ```

pub mod cli;
pub mod corpus;
pub mod error;
pub mod numeric;
pub mod parse;
pub mod polynomial;
pub mod reference;
pub mod render;
pub mod report;
pub mod rng;
pub mod unified;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{Complex64, ComplexValue, ToleranceConfig};
pub use parse::{format_polynomial, parse_polynomial, ParseDiagnostic};
pub use polynomial::{ComplexPolynomial, Polynomial};
pub use reference::{solve_aberth, solve_classical, IterationSettings};
pub use report::{DecompositionPlan, DecompositionTrace, Factorization, Method, SolveReport, SpecialCase};
pub use unified::{
    decompose, plan_decomposition, solve_cubic_unified, solve_quadratic_unified, solve_quartic_unified,
    solve_unified, SolverOptions, UnifiedSolver,
};
pub use verify::{match_roots, residuals, vieta_check, MatchReport};
