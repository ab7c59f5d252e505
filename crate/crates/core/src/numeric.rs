//! Complex arithmetic helpers with explicit branch conventions, plus the
//! tolerance policy shared by every solver path.

use std::f64::consts::PI;

pub use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the complex plane. All root arithmetic is carried out in this type.
pub type ComplexValue = Complex64;

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

/// Primitive cube root of unity `e^{2πi/3}`.
pub const OMEGA: Complex64 = Complex64::new(-0.5, HALF_SQRT3);
/// `e^{4πi/3}`, the conjugate of [`OMEGA`].
pub const OMEGA_SQ: Complex64 = Complex64::new(-0.5, -HALF_SQRT3);

/// Thresholds used by the solvers and checkers.
///
/// * `eps_residual` bounds `|P(x)|` at accepted roots (relative to coefficient scale).
/// * `eps_singular` is the cut-off below which a divisor counts as zero.
/// * `eps_match` is the distance at which two root sets agree.
/// * `eps_real` decides when an imaginary part is rounding noise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub eps_residual: f64,
    pub eps_singular: f64,
    pub eps_match: f64,
    pub eps_real: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            eps_residual: 1e-8,
            eps_singular: 1e-10,
            eps_match: 1e-6,
            eps_real: 1e-9,
        }
    }
}

impl ToleranceConfig {
    pub fn new(eps_residual: f64, eps_singular: f64, eps_match: f64, eps_real: f64) -> Result<Self> {
        let cfg = Self {
            eps_residual,
            eps_singular,
            eps_match,
            eps_real,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.eps_residual, self.eps_singular, self.eps_match, self.eps_real];
        if all.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(Error::InvalidConfig(
                "all tolerances must be finite and strictly positive".into(),
            ));
        }
        if self.eps_singular > self.eps_residual {
            return Err(Error::InvalidConfig(
                "eps_singular must not exceed eps_residual".into(),
            ));
        }
        Ok(())
    }

    pub fn is_effectively_real(&self, z: Complex64, scale: f64) -> bool {
        is_effectively_real(z, scale, self.eps_real)
    }
}

/// Returns `z` unchanged if both parts are finite, otherwise a numeric-overflow error.
pub fn ensure_finite(z: Complex64, context: &'static str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NumericOverflow { context })
    }
}

pub fn ensure_all_finite(zs: &[Complex64], context: &'static str) -> Result<()> {
    for z in zs {
        ensure_finite(*z, context)?;
    }
    Ok(())
}

/// Principal square root: `Re(w) >= 0`, and `Im(w) >= 0` whenever `Re(w) == 0`.
///
/// Uses the cancellation-free half-angle form, so the result squares back to
/// `z` to within a few ulps.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let modulus = z.re.hypot(z.im);
    let t = ((z.re.abs() + modulus) / 2.0).sqrt();
    if z.re >= 0.0 {
        Complex64::new(t, z.im / (2.0 * t))
    } else {
        // Re(w) is |b|/2t >= 0; the sign of Im(w) follows Im(z), with -0 treated as +0.
        let im = if z.im < 0.0 { -t } else { t };
        Complex64::new(z.im.abs() / (2.0 * t), im)
    }
}

/// Argument of `z` mapped into `[0, 2π)`.
fn argument_0_2pi(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// All `n` distinct `n`-th roots of `z`, ordered by argument in `[0, 2π)`.
///
/// For `z = 0` this returns `n` zeros. Real inputs with `n = 3` get an exactly
/// real root (via `cbrt`) and an exactly conjugate pair.
pub fn all_nth_roots(z: Complex64, n: usize) -> Vec<Complex64> {
    assert!(n >= 1, "root order must be positive");
    if z.re == 0.0 && z.im == 0.0 {
        return vec![Complex64::new(0.0, 0.0); n];
    }
    let mut roots = match n {
        1 => vec![z],
        2 => {
            let w = principal_sqrt(z);
            vec![w, -w]
        }
        3 => {
            let w = if z.im == 0.0 {
                Complex64::new(z.re.cbrt(), 0.0)
            } else {
                let r = z.norm().cbrt();
                Complex64::from_polar(r, z.arg() / 3.0)
            };
            vec![w, w * OMEGA, w * OMEGA_SQ]
        }
        _ => {
            let r = z.norm().powf(1.0 / n as f64);
            let theta = z.arg();
            (0..n)
                .map(|k| Complex64::from_polar(r, (theta + 2.0 * PI * k as f64) / n as f64))
                .collect()
        }
    };
    roots.sort_by(|a, b| argument_0_2pi(*a).total_cmp(&argument_0_2pi(*b)));
    roots
}

/// True iff `|Im(z)| <= eps_real * max(1, scale)`.
pub fn is_effectively_real(z: Complex64, scale: f64, eps_real: f64) -> bool {
    z.im.abs() <= eps_real * scale.max(1.0)
}

/// Largest absolute value in a coefficient slice, floored at 1.
pub(crate) fn unit_scale(values: &[f64]) -> f64 {
    values.iter().fold(1.0_f64, |m, v| m.max(v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(principal_sqrt(c(4.0, 0.0)), c(2.0, 0.0));
        assert_eq!(principal_sqrt(c(-1.0, 0.0)), c(0.0, 1.0));
        assert!(close(principal_sqrt(c(0.0, 2.0)), c(1.0, 1.0), 1e-15));
    }

    #[test]
    fn sqrt_branch_on_negative_zero_imaginary() {
        let w = principal_sqrt(c(-4.0, -0.0));
        assert_eq!(w, c(0.0, 2.0));
        let w = principal_sqrt(c(-4.0, -1e-300));
        assert!(w.re >= 0.0 && w.im < 0.0);
    }

    #[test]
    fn nth_root_examples() {
        let r = all_nth_roots(c(8.0, 0.0), 3);
        assert_eq!(r[0], c(2.0, 0.0));
        assert!(close(r[1], OMEGA * 2.0, 1e-15));
        assert!(close(r[2], OMEGA_SQ * 2.0, 1e-15));

        let r = all_nth_roots(c(-1.0, 0.0), 2);
        assert_eq!(r, vec![c(0.0, 1.0), c(0.0, -1.0)]);

        let r = all_nth_roots(c(1.0, 0.0), 3);
        assert_eq!(r, vec![c(1.0, 0.0), OMEGA, OMEGA_SQ]);
    }

    #[test]
    fn nth_roots_of_zero() {
        assert_eq!(all_nth_roots(c(0.0, 0.0), 3), vec![c(0.0, 0.0); 3]);
    }

    #[test]
    fn nth_roots_negative_real_cube() {
        let r = all_nth_roots(c(-8.0, 0.0), 3);
        assert!(close(r[0], c(1.0, 3f64.sqrt()), 1e-15));
        assert_eq!(r[1], c(-2.0, 0.0));
        assert!(close(r[2], c(1.0, -(3f64.sqrt())), 1e-15));
    }

    #[test]
    fn effectively_real() {
        assert!(is_effectively_real(c(3.0, 0.0), 1.0, 1e-9));
        assert!(is_effectively_real(c(3.0, 1e-12), 1.0, 1e-9));
        assert!(!is_effectively_real(c(3.0, 0.1), 1.0, 1e-9));
        assert!(is_effectively_real(c(3.0, 1e-8), 100.0, 1e-9));
    }

    #[test]
    fn tolerance_validation() {
        assert!(ToleranceConfig::default().validate().is_ok());
        assert!(ToleranceConfig::new(1e-8, 1e-6, 1e-6, 1e-9).is_err());
        assert!(ToleranceConfig::new(0.0, 0.0, 1e-6, 1e-9).is_err());
        assert!(ToleranceConfig::new(1e-8, 1e-10, f64::NAN, 1e-9).is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        assert!(ensure_finite(c(f64::INFINITY, 0.0), "test").is_err());
        assert!(ensure_finite(c(1.0, f64::NAN), "test").is_err());
        assert!(ensure_finite(c(1.0, 2.0), "test").is_ok());
    }
}
