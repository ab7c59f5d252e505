//! Degree 4: `(x² + b1 x + b0)² - p²(x² + c1 x + c0)²` over `1 - p²`, with
//! `c1` fixed at 0.
//!
//! With `a3 ≠ 0` the matching equations give `b0 = a1/a3` and
//! `p² = (a3 - 2 b1)/a3`. Eliminating `c0` leaves a cubic in `b1` (after
//! dropping the spurious root `b1 = 0`). Each admissible root of that
//! resolvent yields `c0` and the split into two quadratics.

use std::cmp::Ordering;

use num_complex::Complex64;

use super::{complex, monic_quadratic, note, plan_decomposition, quadratic_roots, Attempt, Blocked, UnifiedSolver};
use crate::numeric::{is_effectively_real, principal_sqrt};
use crate::polynomial::{ComplexPolynomial, Polynomial};
use crate::report::{DecompositionTrace, SpecialCase};

/// Monic resolvent cubic in `b1` for a quartic with `a3 ≠ 0`.
pub fn resolvent_cubic(a3: f64, a2: f64, a1: f64, a0: f64) -> crate::Result<Polynomial> {
    Polynomial::monic_from_tail(&[
        -4.0 * a2 / a3,
        4.0 * (a1 * a3 + a2 * a2 - 4.0 * a0) / (a3 * a3),
        8.0 * (a0 * a3 * a3 + a1 * a1 - a1 * a2 * a3) / (a3 * a3 * a3),
    ])
}

/// `c0 = 2(2 a0 a3 b1 - a1²) / (a3 (2 a2 b1 - 2 a1 - a3 b1²))`, returned as
/// (numerator, denominator).
pub fn c0_terms(a3: f64, a2: f64, a1: f64, a0: f64, b1: Complex64) -> (Complex64, Complex64) {
    let numerator = 2.0 * (2.0 * a0 * a3 * b1 - a1 * a1);
    let denominator = a3 * (2.0 * a2 * b1 - 2.0 * a1 - a3 * b1 * b1);
    (numerator, denominator)
}

/// Up to two Newton steps on the resolvent, each kept only if it lowers the
/// residual. The cubic solve's own accuracy is set by its branch formulas,
/// and every error in `b1` carries straight into both quadratic factors.
fn polish(resolvent: &Polynomial, b1: Complex64) -> crate::Result<Complex64> {
    let derivative = resolvent.derivative();
    let mut best = b1;
    let mut best_res = resolvent.evaluate(b1)?.norm();
    for _ in 0..2 {
        let slope = derivative.evaluate(best)?;
        if best_res == 0.0 || slope.norm() == 0.0 {
            break;
        }
        let next = best - resolvent.evaluate(best)? / slope;
        let res = resolvent.evaluate(next)?.norm();
        if res.is_nan() || res >= best_res {
            break;
        }
        best = next;
        best_res = res;
    }
    Ok(best)
}

/// A resolvent root that passed the singularity filters.
struct Candidate {
    b1: Complex64,
    real: bool,
    margin: f64,
}

impl Candidate {
    /// Effectively-real first, then larger margin, then larger real part,
    /// then larger imaginary part.
    fn rank(&self, other: &Self) -> Ordering {
        other
            .real
            .cmp(&self.real)
            .then(other.margin.total_cmp(&self.margin))
            .then(other.b1.re.total_cmp(&self.b1.re))
            .then(other.b1.im.total_cmp(&self.b1.im))
    }
}

/// The two quadratic factors and their four roots for one choice of `b1`.
struct Split {
    p: Complex64,
    c0: Complex64,
    factor1: (Complex64, Complex64),
    factor2: (Complex64, Complex64),
    roots: Vec<Complex64>,
}

/// `c0·p` for one choice of `b1`.
///
/// The quotient form loses accuracy as `p → 0`, where numerator and
/// denominator both shrink like `p²`. The constant-term identity
/// `(c0 p)² = b0² - a0 (1 - p²)` has no such division but loses accuracy when
/// `c0 p` itself is small. Whichever has the smaller error estimate is used;
/// the quotient form fixes the sign of the square root.
fn c0_times_p(coeffs: (f64, f64, f64, f64), b0: Complex64, b1: Complex64, p: Complex64) -> Complex64 {
    let (a3, a2, a1, a0) = coeffs;
    let (num, den) = c0_terms(a3, a2, a1, a0, b1);
    let direct = num / den * p;
    let p2 = p * p;
    let root = principal_sqrt(b0 * b0 - a0 * (1.0 - p2));
    if root.norm() == 0.0 {
        return direct;
    }
    let from_constant = if (root - direct).norm() <= (root + direct).norm() { root } else { -root };

    let num_scale = 2.0 * (2.0 * (a0 * a3 * b1).norm() + a1 * a1);
    let den_scale = a3.abs() * (2.0 * (a2 * b1).norm() + 2.0 * a1.abs() + (a3 * b1 * b1).norm());
    let direct_err = direct.norm() * (num_scale / num.norm() + den_scale / den.norm());
    let constant_err = (b0.norm_sqr() + a0.abs() * (1.0 + p2.norm())) / (2.0 * root.norm());
    if constant_err < direct_err {
        from_constant
    } else {
        direct
    }
}

fn split(coeffs: (f64, f64, f64, f64), b0: Complex64, b1: Complex64) -> Split {
    let a3 = coeffs.0;
    let p = principal_sqrt((a3 - 2.0 * b1) / a3);
    let cp = c0_times_p(coeffs, b0, b1, p);
    let c0 = if p.norm() == 0.0 {
        let (num, den) = c0_terms(coeffs.0, coeffs.1, coeffs.2, coeffs.3, b1);
        num / den
    } else {
        cp / p
    };
    // Re(p) >= 0, so |1 + p| >= |1 - p|; take 1 - p from 1 - p² = 2 b1 / a3.
    let plus = 1.0 + p;
    let minus = (2.0 * b1 / a3) / plus;
    let factor1 = (b1 / minus, (b0 - cp) / minus);
    let factor2 = (b1 / plus, (b0 + cp) / plus);
    let (x1, x2) = quadratic_roots(factor1.0, factor1.1);
    let (x3, x4) = quadratic_roots(factor2.0, factor2.1);
    Split {
        p,
        c0,
        factor1,
        factor2,
        roots: vec![x1, x2, x3, x4],
    }
}

impl UnifiedSolver {
    pub(crate) fn attempt_quartic(&self, poly: &Polynomial) -> Result<Attempt, Blocked> {
        let c = poly.coeffs();
        let (a3, a2, a1, a0) = (c[1], c[2], c[3], c[4]);
        let plan = plan_decomposition(4)?;
        let eps = self.tol().eps_singular;

        if a0 == 0.0 {
            let cubic = Polynomial::monic_from_tail(&[a3, a2, a1])?;
            let inner = self.solve_monic(&cubic)?;
            let mut roots = vec![complex(0.0)];
            roots.extend(&inner.roots);
            let mut trace = DecompositionTrace::new(plan, SpecialCase::ZeroConstant);
            trace.branch_note = "a0 = 0: deflated the root 0, remaining cubic solved".into();
            trace.inner = inner.trace.map(Box::new);
            let x = ComplexPolynomial::new(vec![complex(1.0), complex(0.0)])?;
            return Ok(Attempt {
                roots,
                trace,
                factors: Some((x, ComplexPolynomial::from_real(&cubic))),
            });
        }
        if a3 == 0.0 && a1 == 0.0 {
            let in_square = Polynomial::monic_from_tail(&[a2, a0])?;
            let inner = self.solve_monic(&in_square)?;
            let (y1, y2) = (inner.roots[0], inner.roots[1]);
            let (s1, s2) = (principal_sqrt(y1), principal_sqrt(y2));
            let mut trace = DecompositionTrace::new(plan, SpecialCase::Biquadratic);
            trace.branch_note = "a3 = a1 = 0: quadratic in x^2".into();
            trace.inner = inner.trace.map(Box::new);
            return Ok(Attempt {
                roots: vec![s1, -s1, s2, -s2],
                trace,
                factors: Some((monic_quadratic(complex(0.0), -y1), monic_quadratic(complex(0.0), -y2))),
            });
        }
        if a3 == 0.0 {
            return Err(Blocked::NeedsShift("quartic with a3 = 0 and a1 != 0"));
        }

        let b0 = complex(a1 / a3);
        let resolvent = resolvent_cubic(a3, a2, a1, a0)?;
        let inner = self.solve_monic(&resolvent)?;
        let resolvent_roots = inner
            .roots
            .iter()
            .map(|&b1| polish(&resolvent, b1))
            .collect::<crate::Result<Vec<_>>>()?;

        let mut trace = DecompositionTrace::new(plan, SpecialCase::None);
        trace.resolvent = Some(resolvent);
        trace.resolvent_roots = resolvent_roots.clone();
        trace.inner = inner.trace.map(Box::new);
        trace.c = vec![complex(0.0), complex(0.0)];

        let near_zero = eps * a3.abs().max(1.0);
        let mut candidates = Vec::new();
        let mut rejected = Vec::new();
        for &b1 in &resolvent_roots {
            let (_, den) = c0_terms(a3, a2, a1, a0, b1);
            let den_scale = a3.abs() * (2.0 * (a2 * b1).norm() + 2.0 * a1.abs() + (a3 * b1 * b1).norm());
            let gap = (2.0 * b1 - a3).norm();
            let one_minus_p2 = (2.0 * b1 / a3).norm();
            if b1.norm() <= near_zero {
                rejected.push(format!("b1 = {}: b1 = 0 makes p^2 = 1", note(b1)));
            } else if gap <= near_zero {
                rejected.push(format!("b1 = {}: 2 b1 = a3 makes p = 0", note(b1)));
            } else if den.norm() <= eps * den_scale {
                rejected.push(format!("b1 = {}: c0 denominator vanishes", note(b1)));
            } else {
                candidates.push(Candidate {
                    b1,
                    real: is_effectively_real(b1, b1.norm(), self.tol().eps_real),
                    margin: b1.norm().min(gap).min(one_minus_p2),
                });
            }
        }
        candidates.sort_by(|x, y| x.rank(y));

        for cand in &candidates {
            let s = split((a3, a2, a1, a0), b0, cand.b1);
            if !self.acceptable(poly, &s.roots)? {
                rejected.push(format!("b1 = {}: residual bound exceeded", note(cand.b1)));
                continue;
            }
            trace.b = vec![b0, cand.b1];
            trace.c = vec![s.c0, complex(0.0)];
            trace.p = s.p;
            trace.branch_note = format!(
                "b1 = {} chosen from {} admissible resolvent root(s){}{}",
                note(cand.b1),
                candidates.len(),
                if cand.real { "" } else { " (complex)" },
                if rejected.is_empty() { String::new() } else { format!("; skipped: {}", rejected.join(", ")) },
            );
            return Ok(Attempt {
                roots: s.roots,
                trace,
                factors: Some((monic_quadratic(s.factor1.0, s.factor1.1), monic_quadratic(s.factor2.0, s.factor2.1))),
            });
        }

        // p = 0: the quartic is V(x)² with V = x² + b1 x + b0.
        if let Some(&b1) = resolvent_roots.iter().find(|b1| (2.0 * *b1 - a3).norm() <= near_zero) {
            let (v1, v2) = quadratic_roots(b1, b0);
            let roots = vec![v1, v2, v1, v2];
            if self.acceptable(poly, &roots)? {
                trace.special_case = SpecialCase::PerfectSquare;
                trace.b = vec![b0, b1];
                trace.p = complex(0.0);
                trace.branch_note = format!("2 b1 = a3 (b1 = {}): p = 0, quartic is V(x)^2", note(b1));
                let v = monic_quadratic(b1, b0);
                return Ok(Attempt {
                    roots,
                    trace,
                    factors: Some((v.clone(), v)),
                });
            }
        }

        Err(Blocked::Singular(format!(
            "no admissible resolvent root ({})",
            rejected.join(", ")
        )))
    }
}
