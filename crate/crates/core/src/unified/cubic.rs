//! Degree 3: `(x + b0)³ - p³(x + c0)³` over `1 - p³`.
//!
//! Matching coefficients gives the sum `f1 = b0 + c0` and product
//! `f2 = b0·c0` in closed form, so `b0`, `c0` are the roots of
//! `y² - f1 y + f2`. Then `p³ = (a2 - 3b0)/(a2 - 3c0)` and the cube splits
//! into a linear factor and a quadratic cofactor.

use num_complex::Complex64;

use super::{complex, linear, note, monic_quadratic, plan_decomposition, quadratic_roots, Attempt, Blocked, UnifiedSolver};
use crate::numeric::{all_nth_roots, principal_sqrt};
use crate::polynomial::{ComplexPolynomial, Polynomial};
use crate::report::{DecompositionPlan, DecompositionTrace, SpecialCase};

/// Cube-root branch of `p³` farthest from 1, which keeps `1 - p` well away
/// from zero in every later division.
pub(crate) fn select_cube_branch(p_cubed: Complex64) -> Complex64 {
    all_nth_roots(p_cubed, 3)
        .into_iter()
        .max_by(|a, b| (1.0 - a).norm().total_cmp(&(1.0 - b).norm()))
        .expect("three cube roots")
}

/// `f1 = (a1 a2 - 9 a0) / (a2² - 3 a1)` and `f2 = (a1² - 3 a0 a2) / (a2² - 3 a1)`.
pub fn sum_and_product(a2: f64, a1: f64, a0: f64) -> (f64, f64) {
    let d = a2 * a2 - 3.0 * a1;
    ((a1 * a2 - 9.0 * a0) / d, (a1 * a1 - 3.0 * a0 * a2) / d)
}

/// The linear-factor root `(p c0 - b0) / (1 - p)` for a given branch `p`.
pub fn linear_factor_root(b0: Complex64, c0: Complex64, p: Complex64) -> Complex64 {
    (p * c0 - b0) / (1.0 - p)
}

impl UnifiedSolver {
    pub(crate) fn attempt_cubic(&self, poly: &Polynomial) -> Result<Attempt, Blocked> {
        let (a2, a1, a0) = (poly.coeffs()[1], poly.coeffs()[2], poly.coeffs()[3]);
        let plan = plan_decomposition(3)?;
        let eps = self.tol().eps_singular;

        let d = a2 * a2 - 3.0 * a1;
        if d.abs() <= eps * (a2 * a2).max(3.0 * a1.abs()) {
            return Ok(depressed_special(plan, a2, a0, eps));
        }
        if a0 == 0.0 {
            let quadratic = Polynomial::monic_from_tail(&[a2, a1])?;
            let inner = self.solve_monic(&quadratic)?;
            let mut roots = vec![complex(0.0)];
            roots.extend(&inner.roots);
            let mut trace = DecompositionTrace::new(plan, SpecialCase::ZeroConstant);
            trace.branch_note = "a0 = 0: deflated the root 0, remaining quadratic solved".into();
            trace.inner = inner.trace.map(Box::new);
            return Ok(Attempt {
                roots,
                trace,
                factors: Some((linear(complex(0.0)), ComplexPolynomial::from_real(&quadratic))),
            });
        }
        if a2 == 0.0 {
            return Err(Blocked::NeedsShift("cubic with a2 = 0"));
        }

        let (f1, f2) = sum_and_product(a2, a1, a0);
        let disc = f1 * f1 - 4.0 * f2;
        if disc.abs() <= eps * (f1 * f1).max(4.0 * f2.abs()) {
            return Ok(double_root(plan, a2, f1, f2));
        }

        let s = principal_sqrt(complex(disc));
        // Larger of (f1 ± s)/2 directly, the other from the product f2.
        let (b0, c0) = {
            let plus = (f1 + s) / 2.0;
            let minus = (f1 - s) / 2.0;
            if plus.norm() >= minus.norm() {
                (plus, f2 / plus)
            } else {
                (f2 / minus, minus)
            }
        };

        let p_cubed = (a2 - 3.0 * b0) / (a2 - 3.0 * c0);
        if (1.0 - p_cubed).norm() <= eps {
            return Err(Blocked::Singular(format!(
                "|1 - p^3| = {:e} at or below eps_singular",
                (1.0 - p_cubed).norm()
            )));
        }
        let p = select_cube_branch(p_cubed);

        let x1 = linear_factor_root(b0, c0, p);
        let a = 1.0 + p + p * p;
        let b = (2.0 * b0 + p * f1 + 2.0 * p * p * c0) / a;
        let c = (b0 * b0 + p * f2 + p * p * c0 * c0) / a;
        let (x2, x3) = quadratic_roots(b, c);

        let mut trace = DecompositionTrace::new(plan, SpecialCase::None);
        trace.b = vec![b0];
        trace.c = vec![c0];
        trace.p = p;
        trace.f1 = Some(complex(f1));
        trace.f2 = Some(complex(f2));
        trace.branch_note = format!(
            "p^3 = {}; cube-root branch maximizing |1 - p| (|1 - p| = {:.7e})",
            note(p_cubed),
            (1.0 - p).norm()
        );
        Ok(Attempt {
            roots: vec![x1, x2, x3],
            trace,
            factors: Some((linear(-x1), monic_quadratic(b, c))),
        })
    }
}

/// `a2² = 3a1`: the cubic is `(x + a2/3)³ - ((a2/3)³ - a0)`.
fn depressed_special(plan: DecompositionPlan, a2: f64, a0: f64, eps: f64) -> Attempt {
    let h = a2 / 3.0;
    let mut rhs = h * h * h - a0;
    if rhs.abs() <= eps * (h * h * h).abs().max(a0.abs()) {
        rhs = 0.0;
    }
    let roots: Vec<Complex64> = all_nth_roots(complex(rhs), 3).into_iter().map(|w| w - h).collect();
    let mut trace = DecompositionTrace::new(plan, SpecialCase::DepressedSpecial);
    trace.branch_note = format!("a2^2 = 3 a1: (x + a2/3)^3 = {rhs:e}");
    let factors = (linear(-roots[0]), ComplexPolynomial::from_roots(&roots[1..]));
    Attempt {
        roots,
        trace,
        factors: Some(factors),
    }
}

/// `f1² = 4 f2` so `b0 = c0` and `V = W`. The constituent cube cannot match a
/// cubic with `a2² ≠ 3a1`; instead `-b0` is a double root and Vieta's sum
/// gives the simple root.
fn double_root(plan: DecompositionPlan, a2: f64, f1: f64, f2: f64) -> Attempt {
    let b0 = complex(f1 / 2.0);
    let simple = -a2 + 2.0 * b0;
    let mut trace = DecompositionTrace::new(plan, SpecialCase::LinearCube);
    trace.b = vec![b0];
    trace.c = vec![b0];
    trace.p = complex(1.0);
    trace.f1 = Some(complex(f1));
    trace.f2 = Some(complex(f2));
    trace.branch_note = "b0 = c0: double root -b0, simple root -a2 + 2 b0".into();
    Attempt {
        roots: vec![-b0, -b0, simple],
        trace,
        factors: Some((linear(b0), ComplexPolynomial::from_roots(&[-b0, simple]))),
    }
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use crate::unified::solve_cubic_unified;
    use crate::verify::match_roots;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: f64) -> f64 {
        (a - b).norm() / b.abs()
    }

    #[test]
    fn golden_cubic_trace() {
        let r = solve_cubic_unified(-2.049888, 3.1010205, 11.313708).unwrap();
        let t = r.trace.as_ref().unwrap();
        assert_eq!(t.special_case, SpecialCase::None);
        assert!(rel(t.f1.unwrap(), 21.20755) < 1e-4);
        assert!(rel(t.f2.unwrap(), -15.52471) < 1e-4);
        assert!(rel(t.b[0], 21.91592) < 1e-4);
        assert!(rel(t.c[0], -0.708376) < 1e-4);
        assert!(rel(t.p, -9.658787) < 1e-4);
        let expected = [c(-1.4142, 0.0), c(1.73205, 2.23607), c(1.73205, -2.23607)];
        assert!(match_roots(&r.roots, &expected, 1e-4).unwrap().matched);
    }

    #[test]
    fn p_agrees_with_closed_form_in_f1_f2() {
        // p³ from the solved b0, c0 equals the bracket written directly in f1, f2.
        for &(a2, a1, a0) in &[(-2.049888, 3.1010205, 11.313708), (-6.0, 11.0, -6.0), (1.5, -4.0, 2.25)] {
            let (f1, f2) = sum_and_product(a2, a1, a0);
            let s = principal_sqrt(complex(f1 * f1 - 4.0 * f2));
            let direct = (2.0 * a2 - 3.0 * f1 - 3.0 * s) / (2.0 * a2 - 3.0 * f1 + 3.0 * s);
            let r = solve_cubic_unified(a2, a1, a0).unwrap();
            let t = r.trace.unwrap();
            let p3 = t.p * t.p * t.p;
            assert!((p3 - direct).norm() <= 1e-12 * direct.norm().max(1.0), "{p3} vs {direct}");
        }
    }

    #[test]
    fn three_real_roots_through_complex_intermediates() {
        let r = solve_cubic_unified(-6.0, 11.0, -6.0).unwrap();
        let t = r.trace.as_ref().unwrap();
        assert!((t.f1.unwrap() - c(-4.0, 0.0)).norm() < 1e-14);
        assert!((t.f2.unwrap() - c(13.0 / 3.0, 0.0)).norm() < 1e-14);
        assert!(t.b[0].im.abs() > 0.1 && t.c[0].im.abs() > 0.1);
        let expected = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        assert!(match_roots(&r.roots, &expected, 1e-12).unwrap().matched);
    }

    #[test]
    fn perfect_cube_takes_special_path() {
        let r = solve_cubic_unified(3.0, 3.0, 1.0).unwrap();
        assert_eq!(r.special_case(), SpecialCase::DepressedSpecial);
        for x in &r.roots {
            assert!((x - c(-1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn depressed_special_with_distinct_roots() {
        // a2² = 3a1 with (a2/3)³ - a0 = 1 - 9 = -8: roots -1 + cbrt(-8).
        let r = solve_cubic_unified(3.0, 3.0, 9.0).unwrap();
        assert_eq!(r.special_case(), SpecialCase::DepressedSpecial);
        let expected = [c(-3.0, 0.0), c(0.0, 3f64.sqrt()), c(0.0, -(3f64.sqrt()))];
        assert!(match_roots(&r.roots, &expected, 1e-14).unwrap().matched);
    }

    #[test]
    fn double_root_is_not_a_triple_root() {
        // (x - 1)²(x - 2): f1 = -2, f2 = 1 so b0 = c0 = -1.
        let r = solve_cubic_unified(-4.0, 5.0, -2.0).unwrap();
        let t = r.trace.as_ref().unwrap();
        assert_eq!(t.special_case, SpecialCase::LinearCube);
        let expected = [c(1.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)];
        assert!(match_roots(&r.roots, &expected, 1e-12).unwrap().matched);
    }

    #[test]
    fn zero_a2_is_shifted() {
        // (x - 2)(x - 3)(x + 5) = x³ - 19x + 30
        let r = solve_cubic_unified(0.0, -19.0, 30.0).unwrap();
        let t = r.trace.as_ref().unwrap();
        assert_eq!(t.shift_applied, 1.0);
        assert_eq!(t.special_case, SpecialCase::None);
        let expected = [c(2.0, 0.0), c(3.0, 0.0), c(-5.0, 0.0)];
        assert!(match_roots(&r.roots, &expected, 1e-12).unwrap().matched);
        let f = r.factorization.unwrap();
        assert!(f.identity_residual < 1e-12);
    }

    #[test]
    fn zero_constant_deflates() {
        let r = solve_cubic_unified(-3.0, 2.0, 0.0).unwrap();
        assert_eq!(r.special_case(), SpecialCase::ZeroConstant);
        let expected = [c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)];
        assert!(match_roots(&r.roots, &expected, 1e-14).unwrap().matched);
    }

    #[test]
    fn branch_choice_maximizes_distance_from_one() {
        let p = select_cube_branch(c(8.0, 0.0));
        assert!((p - 2.0 * crate::numeric::OMEGA).norm() < 1e-15 || (p - 2.0 * crate::numeric::OMEGA_SQ).norm() < 1e-15);
        let p = select_cube_branch(c(-901.0, 0.0));
        assert!(p.re < 0.0 && p.im == 0.0);
    }
}
