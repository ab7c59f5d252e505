use proptest::prelude::*;
use unisolve::{Complex64, ComplexPolynomial, Polynomial};

fn poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    (1..=max_degree)
        .prop_flat_map(|d| proptest::collection::vec(-10.0..10.0f64, d + 1))
        .prop_filter_map("nonzero leading coefficient", |mut c| {
            if c[0] == 0.0 {
                c[0] = 1.0;
            }
            Polynomial::new(c).ok()
        })
}

proptest! {
    #[test]
    fn shift_round_trip_small_shift(p in poly(4), r in -1.0..1.0f64) {
        let back = p.shift(r).shift(-r);
        for (a, b) in back.coeffs().iter().zip(p.coeffs()) {
            prop_assert!((a - b).abs() <= 1e-12, "{a} vs {b} (r = {r})");
        }
    }

    /// For larger shifts the intermediate coefficients grow like
    /// `|a_j| (1 + |r|)^j`, and rounding them to f64 alone moves the round
    /// trip by a few ulps of that size.
    #[test]
    fn shift_round_trip(p in poly(4), r in -10.0..10.0f64) {
        let back = p.shift(r).shift(-r);
        let n = p.degree();
        let growth: f64 = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| a.abs() * (1.0 + 2.0 * r.abs()).powi((n - i) as i32))
            .sum();
        let bound = (8.0 * f64::EPSILON * growth).max(1e-12);
        for (a, b) in back.coeffs().iter().zip(p.coeffs()) {
            prop_assert!((a - b).abs() <= bound, "{a} vs {b} (r = {r}, bound {bound:e})");
        }
    }

    #[test]
    fn shift_then_evaluate(p in poly(4), r in -10.0..10.0f64, re in -3.0..3.0f64, im in -3.0..3.0f64) {
        let x = Complex64::new(re, im);
        let lhs = p.shift(r).evaluate(x).unwrap();
        let rhs = p.evaluate(x + r).unwrap();
        let n = p.degree() as i32;
        let scale = p.coeffs().iter().map(|a| a.abs()).sum::<f64>().max(1.0) * (x + r).norm().max(1.0).powi(n);
        prop_assert!((lhs - rhs).norm() <= 1e-10 * scale);
    }

    #[test]
    fn deflate_and_multiply_back(roots in proptest::collection::vec(-5.0..5.0f64, 1..=4)) {
        let zs: Vec<Complex64> = roots.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        let expanded = ComplexPolynomial::from_roots(&zs);
        let p = Polynomial::new(expanded.coeffs().iter().map(|c| c.re).collect()).unwrap();
        let quotient = p.deflate(zs[0], 1e-8).unwrap();
        let linear = ComplexPolynomial::new(vec![Complex64::new(1.0, 0.0), -zs[0]]).unwrap();
        let back = quotient.mul(&linear);
        let deviation = back.max_deviation_from(&p).unwrap();
        prop_assert!(deviation <= 1e-9 * p.coefficient_scale());
    }
}
