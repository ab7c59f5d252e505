//! The unified decomposition method.
//!
//! A monic polynomial of degree `N` is matched against
//! `(V(x)^K - p^K W(x)^K) / (1 - p^K)` with monic constituents `V`, `W` of
//! degree `M`. Once the unknown coefficients of `V`, `W` and `p` are solved
//! for, the polynomial splits into `(V - pW)/(1 - p)` times a cofactor and the
//! roots follow from the lower-degree factors.
//!
//! [`UnifiedSolver`] drives the per-degree paths: it handles the degenerate
//! inputs each degree singles out, retries singular configurations on a
//! shifted polynomial, and finally falls back to Aberth iteration unless
//! strict mode is on.

mod cubic;
mod quadratic;
mod quartic;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::ToleranceConfig;
use crate::polynomial::{ComplexPolynomial, Polynomial};
use crate::reference::{self, IterationSettings};
use crate::report::{DecompositionPlan, DecompositionTrace, Factorization, Method, SolveReport, SpecialCase};

/// Shift constants tried, in order, when the direct path is blocked.
pub const SHIFT_SEQUENCE: [f64; 3] = [1.0, -1.0, 2.0];

/// Largest degree the unified method handles.
pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolverOptions {
    pub tol: ToleranceConfig,
    /// Report singular decompositions as errors instead of falling back.
    pub strict: bool,
    /// Settings for the Aberth fallback.
    pub iteration: IterationSettings,
}


/// Finds `(m, k)` with `k·m = n`, `k > 1`, and `2m + 1 = n` for odd `n` or
/// `2m + 1 = n + 1` for even `n`.
pub fn plan_decomposition(n: usize) -> Result<DecompositionPlan> {
    let unsupported = Error::UnsupportedDegree {
        degree: n,
        min: 2,
        max: MAX_DEGREE,
    };
    if !(2..=MAX_DEGREE).contains(&n) {
        return Err(unsupported);
    }
    let unknowns = if n % 2 == 1 { n } else { n + 1 };
    let m = (unknowns - 1) / 2;
    if m == 0 || !n.is_multiple_of(m) || n / m <= 1 {
        return Err(unsupported);
    }
    Ok(DecompositionPlan { n, m, k: n / m })
}

/// Result of one path through a per-degree solver, before validation.
pub(crate) struct Attempt {
    pub roots: Vec<Complex64>,
    pub trace: DecompositionTrace,
    pub factors: Option<(ComplexPolynomial, ComplexPolynomial)>,
}

/// Why a path could not produce roots for the polynomial as given.
pub(crate) enum Blocked {
    /// The path is defined only for a nonzero leading sub-coefficient.
    NeedsShift(&'static str),
    /// Every branch hit a vanishing divisor or failed validation.
    Singular(String),
    Failed(Error),
}

impl From<Error> for Blocked {
    fn from(e: Error) -> Self {
        Blocked::Failed(e)
    }
}

pub(crate) fn complex(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Compact rendering for branch notes: `-9.0109820e2`, or with `±...i` when complex.
pub(crate) fn note(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.7e}", z.re)
    } else {
        format!("{:.7e}{}{:.7e}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
    }
}

pub(crate) fn linear(constant: Complex64) -> ComplexPolynomial {
    ComplexPolynomial::new(vec![complex(1.0), constant]).expect("monic linear factor")
}

pub(crate) fn monic_quadratic(b: Complex64, c: Complex64) -> ComplexPolynomial {
    ComplexPolynomial::new(vec![complex(1.0), b, c]).expect("monic quadratic factor")
}

/// Roots of `x² + bx + c`, returned as `((-b + s)/2, (-b - s)/2)` with
/// `s = sqrt(b² - 4c)`. The larger-magnitude root is computed directly and
/// the other from the product `c`, which avoids cancellation.
pub(crate) fn quadratic_roots(b: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let s = crate::numeric::principal_sqrt(b * b - 4.0 * c);
    let aligned = (b.conj() * s).re >= 0.0;
    let q = if aligned { -(b + s) / 2.0 } else { (s - b) / 2.0 };
    let other = if q.norm() == 0.0 { complex(0.0) } else { c / q };
    if aligned {
        (other, q)
    } else {
        (q, other)
    }
}

/// Per-root residual allowance: `eps_residual · max(1, max_j |a_j| |x|^j)`.
/// For `|x| <= 1` this is `eps_residual · max(1, max |a_j|)`.
pub(crate) fn residual_allowance(poly: &Polynomial, x: Complex64, eps_residual: f64) -> f64 {
    let r = x.norm();
    let n = poly.coeffs().len() - 1;
    let largest = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| a.abs() * r.powi((n - i) as i32))
        .fold(1.0_f64, f64::max);
    eps_residual * largest
}

#[derive(Debug, Clone, Default)]
pub struct UnifiedSolver {
    options: SolverOptions,
}

impl UnifiedSolver {
    pub fn new(options: SolverOptions) -> Result<Self> {
        options.tol.validate()?;
        options.iteration.validate()?;
        Ok(Self { options })
    }

    pub fn options(&self) -> &SolverOptions {
        &self.options
    }

    fn tol(&self) -> &ToleranceConfig {
        &self.options.tol
    }

    /// Normalizes `poly` and solves it. Degree 1 is solved directly; degrees
    /// 2 to 4 go through the decomposition.
    pub fn solve(&self, poly: &Polynomial) -> Result<SolveReport> {
        let monic = poly.monic_normalize()?;
        self.solve_monic(&monic)
    }

    pub fn solve_quadratic(&self, a1: f64, a0: f64) -> Result<SolveReport> {
        self.solve_monic(&Polynomial::monic_from_tail(&[a1, a0])?)
    }

    pub fn solve_cubic(&self, a2: f64, a1: f64, a0: f64) -> Result<SolveReport> {
        self.solve_monic(&Polynomial::monic_from_tail(&[a2, a1, a0])?)
    }

    pub fn solve_quartic(&self, a3: f64, a2: f64, a1: f64, a0: f64) -> Result<SolveReport> {
        self.solve_monic(&Polynomial::monic_from_tail(&[a3, a2, a1, a0])?)
    }

    /// Splits a polynomial of degree 2 to 4 into its two constituent factors.
    pub fn decompose(&self, poly: &Polynomial) -> Result<Factorization> {
        let monic = poly.monic_normalize()?;
        plan_decomposition(monic.degree())?;
        let report = self.solve_monic(&monic)?;
        report.factorization.ok_or(Error::SingularDecomposition {
            threshold: self.tol().eps_singular,
        })
    }

    pub(crate) fn solve_monic(&self, poly: &Polynomial) -> Result<SolveReport> {
        let n = poly.degree();
        match n {
            0 => return Err(Error::UnsupportedDegree { degree: 0, min: 1, max: MAX_DEGREE }),
            1 => {
                let root = complex(-poly.coeffs()[1]);
                return SolveReport::new(poly.clone(), vec![root], Method::Unified, None, None);
            }
            2..=MAX_DEGREE => {}
            _ => return Err(Error::UnsupportedDegree { degree: n, min: 1, max: MAX_DEGREE }),
        }

        let mut notes = Vec::new();
        match self.attempt(poly) {
            Ok(a) => {
                if self.acceptable(poly, &a.roots)? {
                    return self.finish(poly, a, 0.0);
                }
                notes.push("direct path exceeded the residual bound".to_string());
            }
            Err(Blocked::NeedsShift(why)) => notes.push(why.to_string()),
            Err(Blocked::Singular(why)) => notes.push(why),
            Err(Blocked::Failed(e @ Error::NumericOverflow { .. })) => notes.push(e.to_string()),
            Err(Blocked::Failed(e)) => return Err(e),
        }

        for r in SHIFT_SEQUENCE {
            let shifted = poly.shift(r);
            match self.attempt(&shifted) {
                Ok(mut a) => {
                    a.roots.iter_mut().for_each(|x| *x += r);
                    if self.acceptable(poly, &a.roots)? {
                        a.trace.shift_applied = r;
                        let note = format!("{}; solved x -> x + {r}", notes.join("; "));
                        a.trace.branch_note = if a.trace.branch_note.is_empty() {
                            note
                        } else {
                            format!("{note}; {}", a.trace.branch_note)
                        };
                        return self.finish(poly, a, r);
                    }
                    notes.push(format!("shift {r}: residual bound exceeded"));
                }
                Err(Blocked::Failed(e @ Error::NumericOverflow { .. })) => notes.push(format!("shift {r}: {e}")),
                Err(Blocked::Failed(e)) => return Err(e),
                Err(Blocked::NeedsShift(why)) => notes.push(format!("shift {r}: {why}")),
                Err(Blocked::Singular(why)) => notes.push(format!("shift {r}: {why}")),
            }
        }

        if self.options.strict {
            return Err(Error::SingularDecomposition {
                threshold: self.tol().eps_singular,
            });
        }
        let mut oracle = reference::solve_aberth(poly, &self.options.iteration)?;
        self.snap_real(&mut oracle.roots);
        let mut trace = DecompositionTrace::new(plan_decomposition(n)?, SpecialCase::Fallback);
        trace.branch_note = format!("{}; roots from Aberth iteration", notes.join("; "));
        SolveReport::new(poly.clone(), oracle.roots, Method::Unified, Some(trace), None)
    }

    fn attempt(&self, poly: &Polynomial) -> std::result::Result<Attempt, Blocked> {
        match poly.degree() {
            2 => self.attempt_quadratic(poly),
            3 => self.attempt_cubic(poly),
            4 => self.attempt_quartic(poly),
            d => Err(Blocked::Failed(Error::UnsupportedDegree { degree: d, min: 2, max: MAX_DEGREE })),
        }
    }

    pub(crate) fn acceptable(&self, poly: &Polynomial, roots: &[Complex64]) -> Result<bool> {
        for &x in roots {
            if !(x.re.is_finite() && x.im.is_finite()) {
                return Ok(false);
            }
            let residual = poly.evaluate(x)?.norm();
            if residual > residual_allowance(poly, x, self.tol().eps_residual) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Clears imaginary parts that are rounding noise on an otherwise real root.
    fn snap_real(&self, roots: &mut [Complex64]) {
        for x in roots {
            if x.im != 0.0 && self.tol().is_effectively_real(*x, x.re.abs()) {
                x.im = 0.0;
            }
        }
    }

    fn finish(&self, poly: &Polynomial, mut attempt: Attempt, shift: f64) -> Result<SolveReport> {
        self.snap_real(&mut attempt.roots);
        // Factors of a shifted attempt belong to Q(x) = P(x + r); move them back.
        let factorization = match attempt.factors {
            Some((f1, f2)) if shift != 0.0 => Some(Factorization::new(f1.shift(-shift), f2.shift(-shift), poly)?),
            Some((f1, f2)) => Some(Factorization::new(f1, f2, poly)?),
            None => None,
        };
        SolveReport::new(poly.clone(), attempt.roots, Method::Unified, Some(attempt.trace), factorization)
    }
}

/// Solves a polynomial of degree 1 to 4 with default options.
pub fn solve_unified(poly: &Polynomial) -> Result<SolveReport> {
    UnifiedSolver::default().solve(poly)
}

/// `x² + a1 x + a0 = 0`.
pub fn solve_quadratic_unified(a1: f64, a0: f64) -> Result<SolveReport> {
    UnifiedSolver::default().solve_quadratic(a1, a0)
}

/// `x³ + a2 x² + a1 x + a0 = 0`.
pub fn solve_cubic_unified(a2: f64, a1: f64, a0: f64) -> Result<SolveReport> {
    UnifiedSolver::default().solve_cubic(a2, a1, a0)
}

/// `x⁴ + a3 x³ + a2 x² + a1 x + a0 = 0`.
pub fn solve_quartic_unified(a3: f64, a2: f64, a1: f64, a0: f64) -> Result<SolveReport> {
    UnifiedSolver::default().solve_quartic(a3, a2, a1, a0)
}

pub fn decompose(poly: &Polynomial) -> Result<Factorization> {
    UnifiedSolver::default().decompose(poly)
}
