//! Aberth–Ehrlich simultaneous iteration.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::IterationSettings;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::report::{Method, SolveReport};

/// Fixed irrational angular offset (the golden angle) for the starting circle.
const START_ROTATION: f64 = PI * 0.763_932_022_500_210_3;

/// Unit roundoff times a small constant: residuals under this multiple of the
/// Horner error bound cannot be improved in double precision.
const ROUNDING_LEVEL: f64 = 8.0 * f64::EPSILON;

/// Finds all roots of a polynomial of degree at least 1.
///
/// On non-convergence the iteration is restarted once from a circle of twice
/// the radius before giving up.
pub fn solve_aberth(poly: &Polynomial, settings: &IterationSettings) -> Result<SolveReport> {
    settings.validate()?;
    let monic = poly.monic_normalize()?;
    if monic.degree() == 0 {
        return Err(Error::UnsupportedDegree { degree: 0, min: 1, max: usize::MAX });
    }
    let roots = match iterate(&monic, settings, settings.initial_radius_factor) {
        Ok(roots) => roots,
        Err(_) => iterate(&monic, settings, 2.0 * settings.initial_radius_factor)?,
    };
    SolveReport::new(monic, roots, Method::Aberth, None, None)
}

/// `|P(z)|` together with the Horner rounding bound `Σ |a_j| |z|^j`.
fn value_and_bound(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let r = z.norm();
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut bound = 0.0;
    for &a in coeffs {
        dp = dp * z + p;
        p = p * z + a;
        bound = bound * r + a.abs();
    }
    (p, dp, bound)
}

fn iterate(poly: &Polynomial, settings: &IterationSettings, radius_factor: f64) -> Result<Vec<Complex64>> {
    let coeffs = poly.coeffs();
    let n = poly.degree();
    let radius = (1.0 + poly.tail().iter().fold(0.0_f64, |m, a| m.max(a.abs()))) * radius_factor;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, START_ROTATION + 2.0 * PI * k as f64 / n as f64))
        .collect();

    for _ in 0..settings.max_iterations {
        let mut converged = true;
        for i in 0..n {
            let (p, dp, bound) = value_and_bound(coeffs, z[i]);
            if p.norm() <= ROUNDING_LEVEL * bound {
                continue;
            }
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let w = (dp / p - repulsion).inv();
            if !(w.re.is_finite() && w.im.is_finite()) {
                return Err(Error::NumericOverflow { context: "Aberth correction" });
            }
            z[i] -= w;
            if w.norm() > settings.convergence_tol * (1.0 + z[i].norm()) {
                converged = false;
            }
        }
        if converged {
            return Ok(z);
        }
    }

    let residual = z
        .iter()
        .map(|&x| poly.evaluate(x).map(|v| v.norm()).unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    Err(Error::NoConvergence {
        iterations: settings.max_iterations,
        best: z,
        residual,
    })
}
