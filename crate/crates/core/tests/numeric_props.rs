use proptest::prelude::*;
use unisolve::numeric::{all_nth_roots, principal_sqrt};
use unisolve::Complex64;

fn finite_complex() -> impl Strategy<Value = Complex64> {
    let part = prop_oneof![-1e6..1e6f64, -1.0..1.0f64, Just(0.0), Just(-0.0)];
    (part.clone(), part).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #[test]
    fn sqrt_squares_back(z in finite_complex()) {
        let w = principal_sqrt(z);
        prop_assert!((w * w - z).norm() <= 4.0 * f64::EPSILON * z.norm(), "{z} -> {w}");
        prop_assert!(w.re >= 0.0);
        if w.re == 0.0 {
            prop_assert!(w.im >= 0.0);
        }
    }

    #[test]
    fn nth_roots_power_back(z in finite_complex(), n in 1usize..=6) {
        let roots = all_nth_roots(z, n);
        prop_assert_eq!(roots.len(), n);
        let bound = 1e-12 * z.norm().max(1.0);
        for w in &roots {
            prop_assert!((w.powi(n as i32) - z).norm() <= bound, "{w}^{n} vs {z}");
        }
    }

    #[test]
    fn nth_roots_product(z in finite_complex(), n in 1usize..=6) {
        let product: Complex64 = all_nth_roots(z, n).iter().product();
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        prop_assert!((product - sign * z).norm() <= 1e-12 * z.norm().max(1.0));
    }
}
