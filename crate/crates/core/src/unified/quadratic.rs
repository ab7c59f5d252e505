//! Degree 2: `(x + b0)² - p²(x + c0)²` over `1 - p²`, with `c0` fixed at 0.

use super::{complex, linear, plan_decomposition, Attempt, Blocked, UnifiedSolver};
use crate::numeric::principal_sqrt;
use crate::polynomial::Polynomial;
use crate::report::{DecompositionTrace, SpecialCase};

impl UnifiedSolver {
    pub(crate) fn attempt_quadratic(&self, poly: &Polynomial) -> Result<Attempt, Blocked> {
        let (a1, a0) = (poly.coeffs()[1], poly.coeffs()[2]);
        let plan = plan_decomposition(2)?;

        if a0 == 0.0 {
            let mut trace = DecompositionTrace::new(plan, SpecialCase::ZeroConstant);
            trace.branch_note = "a0 = 0: x (x + a1)".into();
            return Ok(Attempt {
                roots: vec![complex(0.0), complex(-a1)],
                trace,
                factors: Some((linear(complex(0.0)), linear(complex(a1)))),
            });
        }
        if a1 == 0.0 {
            let w = principal_sqrt(complex(-a0));
            let mut trace = DecompositionTrace::new(plan, SpecialCase::Biquadratic);
            trace.branch_note = "a1 = 0: x = ±sqrt(-a0)".into();
            return Ok(Attempt {
                roots: vec![w, -w],
                trace,
                factors: Some((linear(-w), linear(w))),
            });
        }

        let b0 = 2.0 * a0 / a1;
        let p = principal_sqrt(complex(a1 * a1 - 4.0 * a0)) / a1;
        // 1 - p² is known in closed form, so the smaller of 1 ∓ p is recovered
        // from the larger without cancellation.
        let one_minus_p2 = complex(4.0 * a0 / (a1 * a1));
        if one_minus_p2.norm() <= self.tol().eps_singular {
            return Err(Blocked::Singular(format!(
                "|1 - p^2| = {:e} at or below eps_singular",
                one_minus_p2.norm()
            )));
        }
        let (mut minus, mut plus) = (1.0 - p, 1.0 + p);
        if minus.norm() < plus.norm() {
            minus = one_minus_p2 / plus;
        } else {
            plus = one_minus_p2 / minus;
        }
        let y1 = b0 / minus;
        let y2 = b0 / plus;

        let mut trace = DecompositionTrace::new(plan, SpecialCase::None);
        trace.b = vec![complex(b0)];
        trace.c = vec![complex(0.0)];
        trace.p = p;
        trace.branch_note = "c0 = 0; p = principal sqrt(a1^2 - 4a0) / a1".into();
        Ok(Attempt {
            roots: vec![-y1, -y2],
            trace,
            factors: Some((linear(y1), linear(y2))),
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::report::SpecialCase;
    use crate::unified::solve_quadratic_unified;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn distinct_real_roots_and_trace() {
        let r = solve_quadratic_unified(-3.0, 2.0).unwrap();
        let t = r.trace.as_ref().unwrap();
        assert_eq!(t.special_case, SpecialCase::None);
        assert!((t.b[0] - c(-4.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((t.p - c(-1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((r.roots[0] - c(1.0, 0.0)).norm() < 1e-15);
        assert!((r.roots[1] - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn double_root() {
        let r = solve_quadratic_unified(2.0, 1.0).unwrap();
        assert_eq!(r.special_case(), SpecialCase::None);
        for x in &r.roots {
            assert!((x - c(-1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn pure_imaginary_pair() {
        let r = solve_quadratic_unified(0.0, 1.0).unwrap();
        assert_eq!(r.special_case(), SpecialCase::Biquadratic);
        assert_eq!(r.roots, vec![c(0.0, 1.0), c(0.0, -1.0)]);
    }

    #[test]
    fn zero_constant() {
        let r = solve_quadratic_unified(5.0, 0.0).unwrap();
        assert_eq!(r.special_case(), SpecialCase::ZeroConstant);
        assert_eq!(r.roots, vec![c(0.0, 0.0), c(-5.0, 0.0)]);
    }

    #[test]
    fn tiny_constant_goes_through_shift() {
        // 4a0/a1² is below eps_singular, so p² ≈ 1 and the direct split is singular.
        let r = solve_quadratic_unified(10.0, 1e-12).unwrap();
        let t = r.trace.as_ref().unwrap();
        assert_eq!(t.special_case, SpecialCase::None);
        assert_eq!(t.shift_applied, 1.0);
        assert!(r.max_residual < 1e-13);
    }
}
