//! Independent oracles for checking the unified method: textbook closed forms
//! and Aberth–Ehrlich simultaneous iteration.

mod aberth;
mod classical;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use aberth::solve_aberth;
pub use classical::{cardano_depressed, ferrari_resolvent_root, solve_classical};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterationSettings {
    pub max_iterations: usize,
    pub convergence_tol: f64,
    /// Multiplier on the starting circle radius `1 + max|a_j|`.
    pub initial_radius_factor: f64,
}

impl Default for IterationSettings {
    fn default() -> Self {
        Self {
            max_iterations: 200,
            convergence_tol: 1e-13,
            initial_radius_factor: 1.0,
        }
    }
}

impl IterationSettings {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations < 1 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
        }
        if !(self.convergence_tol.is_finite() && self.convergence_tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "convergence_tol must be positive and finite, got {}",
                self.convergence_tol
            )));
        }
        if !(self.initial_radius_factor.is_finite() && self.initial_radius_factor > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "initial_radius_factor must be positive and finite, got {}",
                self.initial_radius_factor
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn settings_validation() {
        assert!(IterationSettings::default().validate().is_ok());
        let bad = [
            IterationSettings { max_iterations: 0, ..Default::default() },
            IterationSettings { convergence_tol: 0.0, ..Default::default() },
            IterationSettings { convergence_tol: f64::NAN, ..Default::default() },
            IterationSettings { initial_radius_factor: -1.0, ..Default::default() },
        ];
        for s in bad {
            assert!(matches!(s.validate(), Err(Error::InvalidConfig(_))), "{s:?}");
        }
    }
}
