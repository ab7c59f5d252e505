//! Residuals, Vieta checks and tolerance-aware matching of root multisets.

use itertools::Itertools;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomial::{ComplexPolynomial, Polynomial};

/// Roots closer than this are treated as a cluster, and matching falls back to
/// [`MULTIPLE_ROOT_TOL`].
pub const CLUSTER_SEPARATION: f64 = 1e-3;

/// Agreement tolerance for clustered roots; a root of multiplicity `m` only
/// resolves to about `ε^(1/m)`.
pub const MULTIPLE_ROOT_TOL: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchReport {
    /// `(computed index, expected index, distance)`.
    pub pairs: Vec<(usize, usize, f64)>,
    pub max_distance: f64,
    pub matched: bool,
}

/// `|P(x_i)|` for each root, in input order.
pub fn residuals(poly: &Polynomial, roots: &[Complex64]) -> Result<Vec<f64>> {
    roots.iter().map(|&x| poly.evaluate(x).map(|v| v.norm())).collect()
}

/// Minimum-cost perfect matching under Euclidean distance, found by trying
/// every permutation. Cost is the largest paired distance, ties broken by the
/// total distance.
pub fn match_roots(computed: &[Complex64], expected: &[Complex64], tol: f64) -> Result<MatchReport> {
    if computed.len() != expected.len() {
        return Err(Error::LengthMismatch {
            left: computed.len(),
            right: expected.len(),
        });
    }
    let n = computed.len();
    let mut best: Option<(f64, f64, Vec<usize>)> = None;
    for perm in (0..n).permutations(n) {
        let dists = perm.iter().enumerate().map(|(i, &j)| (computed[i] - expected[j]).norm());
        let (max, sum) = dists.fold((0.0_f64, 0.0_f64), |(m, s), d| (m.max(d), s + d));
        let better = match &best {
            None => true,
            Some((bm, bs, _)) => max < *bm || (max == *bm && sum < *bs),
        };
        if better {
            best = Some((max, sum, perm));
        }
    }
    let (max_distance, _, perm) = best.unwrap_or((0.0, 0.0, Vec::new()));
    let pairs = perm
        .iter()
        .enumerate()
        .map(|(i, &j)| (i, j, (computed[i] - expected[j]).norm()))
        .collect();
    Ok(MatchReport {
        pairs,
        max_distance,
        matched: max_distance <= tol,
    })
}

/// Per-k deviation `|e_k(roots) - (-1)^k a_{N-k}|` for `k = 1..N`.
pub fn vieta_check(poly: &Polynomial, roots: &[Complex64]) -> Result<Vec<f64>> {
    if roots.len() != poly.degree() || poly.coeffs().len() != roots.len() + 1 {
        return Err(Error::LengthMismatch {
            left: roots.len(),
            right: poly.degree(),
        });
    }
    // Expanding prod (x - r) gives coefficient (-1)^k e_k at index k.
    let expanded = ComplexPolynomial::from_roots(roots);
    Ok(expanded
        .coeffs()
        .iter()
        .zip(poly.coeffs())
        .skip(1)
        .map(|(e, &a)| (e - a).norm())
        .collect())
}

/// Smallest pairwise distance, or infinity for fewer than two roots.
pub fn min_separation(roots: &[Complex64]) -> f64 {
    roots
        .iter()
        .array_combinations()
        .map(|[a, b]| (a - b).norm())
        .fold(f64::INFINITY, f64::min)
}

/// Matching tolerance for a reference root set: `eps_match`, relaxed to
/// [`MULTIPLE_ROOT_TOL`] when the reference contains a cluster.
pub fn match_tolerance_for(reference: &[Complex64], eps_match: f64) -> f64 {
    if min_separation(reference) <= CLUSTER_SEPARATION {
        eps_match.max(MULTIPLE_ROOT_TOL)
    } else {
        eps_match
    }
}

/// True when the multiset is closed under conjugation within `tol`.
pub fn conjugate_closed(roots: &[Complex64], tol: f64) -> bool {
    let conj: Vec<Complex64> = roots.iter().map(|z| z.conj()).collect();
    match_roots(roots, &conj, tol).is_ok_and(|m| m.matched)
}

#[cfg(test)]
#[allow(clippy::approx_constant)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(coeffs: &[f64]) -> Polynomial {
        Polynomial::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residuals(&p(&[1.0, -3.0, 2.0]), &[c(1.0, 0.0), c(2.0, 0.0)]).unwrap(), vec![0.0, 0.0]);
        assert_eq!(residuals(&p(&[1.0, 0.0, 1.0]), &[c(0.0, 1.0)]).unwrap(), vec![0.0]);
        // |1.414213562^2 - 2| evaluated by hand: 1.999999998944727844 - 2.
        let r = residuals(&p(&[1.0, 0.0, -2.0]), &[c(1.414213562, 0.0)]).unwrap()[0];
        assert!((r - 1.055272156e-9).abs() < 1e-15, "{r}");
    }

    #[test]
    fn match_examples() {
        let m = match_roots(&[c(1.0, 0.0), c(2.0, 0.0)], &[c(2.0, 0.0), c(1.0, 0.0)], 1e-9).unwrap();
        assert!(m.matched);
        assert_eq!(m.max_distance, 0.0);
        assert_eq!(m.pairs, vec![(0, 1, 0.0), (1, 0, 0.0)]);

        let m = match_roots(&[c(1.0, 1.0), c(1.0, -1.0)], &[c(1.0, -1.0), c(1.0, 1.0)], 1e-9).unwrap();
        assert!(m.matched);

        let m = match_roots(&[c(1.0, 0.0), c(2.0, 0.0)], &[c(1.0, 0.0), c(3.0, 0.0)], 0.5).unwrap();
        assert!(!m.matched);
        assert_eq!(m.max_distance, 1.0);
    }

    #[test]
    fn match_length_mismatch() {
        assert!(matches!(
            match_roots(&[c(1.0, 0.0)], &[], 1.0),
            Err(Error::LengthMismatch { left: 1, right: 0 })
        ));
    }

    #[test]
    fn vieta_examples() {
        assert_eq!(vieta_check(&p(&[1.0, -3.0, 2.0]), &[c(1.0, 0.0), c(2.0, 0.0)]).unwrap(), vec![0.0, 0.0]);
        assert_eq!(
            vieta_check(&p(&[1.0, -6.0, 11.0, -6.0]), &[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]).unwrap(),
            vec![0.0, 0.0, 0.0]
        );
        let cubic = p(&[1.0, -2.049888, 3.1010205, 11.313708]);
        let roots = [c(-1.4142, 0.0), c(1.73205, 2.23607), c(1.73205, -2.23607)];
        for d in vieta_check(&cubic, &roots).unwrap() {
            assert!(d <= 1e-4, "{d}");
        }
    }

    #[test]
    fn vieta_count_mismatch() {
        assert!(vieta_check(&p(&[1.0, -3.0, 2.0]), &[c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn cluster_relaxes_tolerance() {
        assert_eq!(match_tolerance_for(&[c(1.0, 0.0), c(2.0, 0.0)], 1e-6), 1e-6);
        assert_eq!(match_tolerance_for(&[c(1.0, 0.0), c(1.0, 1e-5)], 1e-6), 1e-4);
    }
}
