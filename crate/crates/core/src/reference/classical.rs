//! Quadratic formula, Cardano and Ferrari.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{principal_sqrt, OMEGA, OMEGA_SQ};
use crate::polynomial::Polynomial;
use crate::report::{Method, SolveReport};
use crate::unified::quadratic_roots;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Solves a polynomial of degree 1 to 4 by the classical closed forms.
pub fn solve_classical(poly: &Polynomial) -> Result<SolveReport> {
    let monic = poly.monic_normalize()?;
    let t = monic.tail();
    let roots = match monic.degree() {
        1 => vec![c(-t[0])],
        2 => {
            let (x1, x2) = quadratic_roots(c(t[0]), c(t[1]));
            vec![x1, x2]
        }
        3 => cubic(t[0], t[1], t[2]),
        4 => quartic(t[0], t[1], t[2], t[3]),
        d => return Err(Error::UnsupportedDegree { degree: d, min: 1, max: 4 }),
    };
    SolveReport::new(monic, roots, Method::Classical, None, None)
}

/// Roots of `t³ + p t + q`.
///
/// `u³ = -q/2 ± sqrt((q/2)² + (p/3)³)`, taking the sign that makes `|u³|`
/// larger; the companion is `v = -p / (3u)`.
pub fn cardano_depressed(p: f64, q: f64) -> [Complex64; 3] {
    let half_q = c(q / 2.0);
    let s = principal_sqrt(half_q * half_q + c(p / 3.0).powi(3));
    let (plus, minus) = (-half_q + s, -half_q - s);
    let u3 = if plus.norm() >= minus.norm() { plus } else { minus };
    if u3.norm() == 0.0 {
        return [c(0.0); 3];
    }
    let u = if u3.im == 0.0 {
        c(u3.re.cbrt())
    } else {
        Complex64::from_polar(u3.norm().cbrt(), u3.arg() / 3.0)
    };
    let v = -p / (3.0 * u);
    [u + v, OMEGA * u + OMEGA_SQ * v, OMEGA_SQ * u + OMEGA * v]
}

fn cubic(a2: f64, a1: f64, a0: f64) -> Vec<Complex64> {
    let h = a2 / 3.0;
    let p = a1 - a2 * h;
    let q = 2.0 * h * h * h - h * a1 + a0;
    cardano_depressed(p, q).iter().map(|t| t - h).collect()
}

/// Largest real root `m` of the Ferrari resolvent
/// `8m³ + 8p m² + (2p² - 8r) m - q² = 0` for `y⁴ + p y² + q y + r`.
///
/// For `q ≠ 0` the cubic is negative at `m = 0`, so this root is positive
/// and `sqrt(2m)` is real.
pub fn ferrari_resolvent_root(p: f64, q: f64, r: f64) -> f64 {
    let (b, cc, d) = (p, (2.0 * p * p - 8.0 * r) / 8.0, -q * q / 8.0);
    let h = b / 3.0;
    let (dp, dq) = (cc - b * h, 2.0 * h * h * h - h * cc + d);
    let roots = cardano_depressed(dp, dq);
    if (dq / 2.0).powi(2) + (dp / 3.0).powi(3) > 0.0 {
        // One real root: the real cube root plus its real companion.
        return roots[0].re - h;
    }
    roots.iter().map(|t| t.re - h).fold(f64::NEG_INFINITY, f64::max)
}

fn quartic(a3: f64, a2: f64, a1: f64, a0: f64) -> Vec<Complex64> {
    let h = a3 / 4.0;
    let p = a2 - 6.0 * h * h;
    let q = a1 - 2.0 * a2 * h + 8.0 * h * h * h;
    let r = a0 - a1 * h + a2 * h * h - 3.0 * h * h * h * h;

    let ys = if q == 0.0 {
        let (z1, z2) = quadratic_roots(c(p), c(r));
        let (w1, w2) = (principal_sqrt(z1), principal_sqrt(z2));
        vec![w1, -w1, w2, -w2]
    } else {
        let m = ferrari_resolvent_root(p, q, r);
        let s = (2.0 * m).sqrt();
        let (y1, y2) = quadratic_roots(c(s), c(p / 2.0 + m - q / (2.0 * s)));
        let (y3, y4) = quadratic_roots(c(-s), c(p / 2.0 + m + q / (2.0 * s)));
        vec![y1, y2, y3, y4]
    };
    ys.into_iter().map(|y| y - h).collect()
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;
    use crate::verify::match_roots;

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn solve(coeffs: &[f64]) -> SolveReport {
        solve_classical(&Polynomial::new(coeffs.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn quadratic_formula() {
        let r = solve(&[1.0, -3.0, 2.0]);
        assert_eq!(r.method, Method::Classical);
        assert!(r.trace.is_none());
        assert!(match_roots(&r.roots, &[z(1.0, 0.0), z(2.0, 0.0)], 1e-15).unwrap().matched);
    }

    #[test]
    fn golden_cubic() {
        let r = solve(&[1.0, -2.049888, 3.1010205, 11.313708]);
        let expected = [z(-1.4142, 0.0), z(1.73205, 2.23607), z(1.73205, -2.23607)];
        assert!(match_roots(&r.roots, &expected, 1e-4).unwrap().matched);
    }

    #[test]
    fn golden_quartic() {
        let r = solve(&[1.0, 2.0533927, -2.8917903, 7.6758959, 29.5803989]);
        let expected = [z(-2.236067, 0.0), z(-2.645752, 0.0), z(1.414213, 1.732051), z(1.414213, -1.732051)];
        assert!(match_roots(&r.roots, &expected, 1e-5).unwrap().matched);
    }

    #[test]
    fn three_real_roots_in_casus_irreducibilis() {
        let r = solve(&[1.0, -6.0, 11.0, -6.0]);
        let expected = [z(1.0, 0.0), z(2.0, 0.0), z(3.0, 0.0)];
        assert!(match_roots(&r.roots, &expected, 1e-12).unwrap().matched);
    }

    #[test]
    fn triple_and_quadruple_roots() {
        let r = solve(&[1.0, 3.0, 3.0, 1.0]);
        assert!(r.roots.iter().all(|x| (x - z(-1.0, 0.0)).norm() < 1e-12));
        let r = solve(&[1.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(r.roots.iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn biquadratic_quartic() {
        let r = solve(&[1.0, 0.0, -5.0, 0.0, 4.0]);
        let expected = [z(1.0, 0.0), z(-1.0, 0.0), z(2.0, 0.0), z(-2.0, 0.0)];
        assert!(match_roots(&r.roots, &expected, 1e-14).unwrap().matched);
    }

    #[test]
    fn resolvent_root_is_positive() {
        // y⁴ + y + 1
        let m = ferrari_resolvent_root(0.0, 1.0, 1.0);
        assert!(m > 0.0);
        assert!((8.0 * m.powi(3) - 8.0 * m - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degree_gate() {
        let quintic = Polynomial::new(vec![1.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(matches!(solve_classical(&quintic), Err(Error::UnsupportedDegree { degree: 5, .. })));
    }
}
