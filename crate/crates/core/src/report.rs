//! Result types shared by the unified solver and the reference oracles.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::{ComplexPolynomial, Polynomial};

/// Degree split `N = K·M` used to rewrite a monic polynomial as
/// `(V^K - p^K W^K) / (1 - p^K)` with `V`, `W` monic of degree `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionPlan {
    pub n: usize,
    pub m: usize,
    pub k: usize,
}

/// Which branch of the solver produced the roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialCase {
    /// Main decomposition path.
    None,
    /// Cubic with `b0 = c0`: `V = W` and the representation collapses.
    LinearCube,
    /// Cubic with `a2² = 3a1`: `(x + a2/3)³ = (a2/3)³ - a0`.
    DepressedSpecial,
    /// Even polynomial solved as a quadratic in `x²` (or `x² = -a0` for quadratics).
    Biquadratic,
    /// `a0 = 0`: the root 0 is deflated first.
    ZeroConstant,
    /// Quartic with `p = 0`: the input is `V(x)²`.
    PerfectSquare,
    /// No usable decomposition; roots come from the iterative oracle.
    Fallback,
}

impl SpecialCase {
    pub fn as_str(self) -> &'static str {
        match self {
            SpecialCase::None => "none",
            SpecialCase::LinearCube => "linear-cube",
            SpecialCase::DepressedSpecial => "depressed-special",
            SpecialCase::Biquadratic => "biquadratic",
            SpecialCase::ZeroConstant => "zero-constant",
            SpecialCase::PerfectSquare => "perfect-square",
            SpecialCase::Fallback => "fallback",
        }
    }
}

impl fmt::Display for SpecialCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Unified,
    Classical,
    Aberth,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Unified => "unified",
            Method::Classical => "classical",
            Method::Aberth => "aberth",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every intermediate unknown of a unified solve.
///
/// `b` and `c` hold the constituent coefficients `b_0..b_{M-1}` and
/// `c_0..c_{M-1}`. Values the active path never determines are left at zero.
/// When a shift was applied, all values refer to the shifted polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionTrace {
    pub plan: DecompositionPlan,
    pub shift_applied: f64,
    pub b: Vec<Complex64>,
    pub c: Vec<Complex64>,
    pub p: Complex64,
    /// Cubic only: `b0 + c0` and `b0·c0`.
    pub f1: Option<Complex64>,
    pub f2: Option<Complex64>,
    /// Quartic only: the monic cubic whose root supplies `b1`.
    pub resolvent: Option<Polynomial>,
    pub resolvent_roots: Vec<Complex64>,
    pub branch_note: String,
    pub special_case: SpecialCase,
    /// Trace of a lower-degree unified solve this one delegated to
    /// (deflated cubic, quadratic in `x²`, or the quartic's resolvent).
    pub inner: Option<Box<DecompositionTrace>>,
}

impl DecompositionTrace {
    pub(crate) fn new(plan: DecompositionPlan, special_case: SpecialCase) -> Self {
        let zeros = vec![Complex64::new(0.0, 0.0); plan.m];
        Self {
            plan,
            shift_applied: 0.0,
            b: zeros.clone(),
            c: zeros,
            p: Complex64::new(0.0, 0.0),
            f1: None,
            f2: None,
            resolvent: None,
            resolvent_roots: Vec::new(),
            branch_note: String::new(),
            special_case,
            inner: None,
        }
    }
}

/// The two constituent factors of a decomposition together with how well
/// their product reproduces the monic input.
#[derive(Debug, Clone, PartialEq)]
pub struct Factorization {
    pub factor1: ComplexPolynomial,
    pub factor2: ComplexPolynomial,
    /// Largest coefficient deviation of `factor1 · factor2` from the monic input.
    pub identity_residual: f64,
}

impl Factorization {
    pub fn new(factor1: ComplexPolynomial, factor2: ComplexPolynomial, monic_input: &Polynomial) -> Result<Self> {
        let product = factor1.mul(&factor2);
        let identity_residual = product
            .max_deviation_from(monic_input)
            .ok_or(Error::LengthMismatch {
                left: product.coeffs().len(),
                right: monic_input.coeffs().len(),
            })?;
        Ok(Self {
            factor1,
            factor2,
            identity_residual,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    /// The monic polynomial that was actually solved.
    pub input: Polynomial,
    /// Roots with multiplicity, in the order the solver produced them.
    pub roots: Vec<Complex64>,
    pub method: Method,
    pub trace: Option<DecompositionTrace>,
    pub factorization: Option<Factorization>,
    /// `max |P(x)|` over the reported roots.
    pub max_residual: f64,
}

impl SolveReport {
    pub fn new(
        input: Polynomial,
        roots: Vec<Complex64>,
        method: Method,
        trace: Option<DecompositionTrace>,
        factorization: Option<Factorization>,
    ) -> Result<Self> {
        crate::numeric::ensure_all_finite(&roots, "roots")?;
        let max_residual = crate::verify::residuals(&input, &roots)?
            .into_iter()
            .fold(0.0, f64::max);
        Ok(Self {
            input,
            roots,
            method,
            trace,
            factorization,
            max_residual,
        })
    }

    pub fn degree(&self) -> usize {
        self.input.degree()
    }

    pub fn special_case(&self) -> SpecialCase {
        self.trace.as_ref().map_or(SpecialCase::None, |t| t.special_case)
    }

    /// Roots ordered by ascending real part, then ascending imaginary part.
    pub fn sorted_roots(&self) -> Vec<Complex64> {
        sort_roots(&self.roots)
    }
}

/// Display order: ascending real part (compared at 9 significant digits so a
/// conjugate pair is not split by rounding noise), then ascending imaginary part.
pub fn sort_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let key = |z: &Complex64| -> f64 { format!("{:.8e}", z.re).parse().unwrap_or(z.re) };
    let mut sorted = roots.to_vec();
    sorted.sort_by(|a, b| key(a).total_cmp(&key(b)).then(a.im.total_cmp(&b.im)));
    sorted
}
