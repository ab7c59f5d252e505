//! Seeded random monic polynomials for batch runs and property campaigns.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::reference::{solve_aberth, IterationSettings};
use crate::rng::SplitMix64;
use crate::verify::{min_separation, CLUSTER_SEPARATION};

/// Coefficient interval used by the standard corpus.
pub const STANDARD_RANGE: (f64, f64) = (-10.0, 10.0);

/// Cap on draws per accepted sample when rejecting clustered roots.
const MAX_DRAWS_PER_SAMPLE: usize = 1000;

/// A monic polynomial of the given degree with lower coefficients uniform in
/// `[lo, hi)`, drawn highest-degree first.
pub fn random_monic(rng: &mut SplitMix64, degree: usize, (lo, hi): (f64, f64)) -> Polynomial {
    let tail: Vec<f64> = (0..degree).map(|_| rng.uniform(lo, hi)).collect();
    Polynomial::monic_from_tail(&tail).expect("finite coefficients")
}

/// A polynomial together with its Aberth roots.
#[derive(Debug, Clone)]
pub struct Sample {
    pub poly: Polynomial,
    pub reference: Vec<Complex64>,
}

/// `count` random monic polynomials whose Aberth roots are pairwise farther
/// apart than [`CLUSTER_SEPARATION`]. Clustered draws are discarded.
pub fn separated_corpus(seed: u64, degree: usize, count: usize) -> Result<Vec<Sample>> {
    let settings = IterationSettings::default();
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count {
        draws += 1;
        if draws > MAX_DRAWS_PER_SAMPLE * count.max(1) {
            return Err(Error::InvalidConfig(format!(
                "rejection sampling produced only {} of {count} separated polynomials",
                out.len()
            )));
        }
        let poly = random_monic(&mut rng, degree, STANDARD_RANGE);
        let Ok(report) = solve_aberth(&poly, &settings) else {
            continue;
        };
        if min_separation(&report.roots) > CLUSTER_SEPARATION {
            out.push(Sample {
                poly,
                reference: report.roots,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_separated() {
        let a = separated_corpus(11, 4, 20).unwrap();
        let b = separated_corpus(11, 4, 20).unwrap();
        assert_eq!(a.len(), 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.poly, y.poly);
            assert!(x.poly.is_monic());
            assert!(x.poly.tail().iter().all(|c| (-10.0..10.0).contains(c)));
            assert!(min_separation(&x.reference) > CLUSTER_SEPARATION);
        }
    }

    #[test]
    fn degenerate_range() {
        let mut rng = SplitMix64::new(5);
        let p = random_monic(&mut rng, 3, (0.0, 0.0));
        assert_eq!(p.coeffs(), &[1.0, 0.0, 0.0, 0.0]);
    }
}
