//! Process parameters.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Parameters of the m-variate space-time fractional Poisson process:
/// intensities λ_1..λ_m and the fractional orders η (space) and ν (time),
/// both in (0, 1].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub lambda: Vec<f64>,
    pub eta: f64,
    pub nu: f64,
}

impl ModelParams {
    pub fn new(lambda: Vec<f64>, eta: f64, nu: f64) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::domain("ModelParams: dimension m must be >= 1"));
        }
        if lambda.iter().any(|&l| !(l > 0.0) || !l.is_finite()) {
            return Err(Error::domain(format!(
                "ModelParams: all intensities must be positive and finite, got {lambda:?}"
            )));
        }
        if !(eta > 0.0 && eta <= 1.0) {
            return Err(Error::domain(format!(
                "ModelParams: eta must be in (0,1], got {eta}"
            )));
        }
        if !(nu > 0.0 && nu <= 1.0) {
            return Err(Error::domain(format!(
                "ModelParams: nu must be in (0,1], got {nu}"
            )));
        }
        Ok(ModelParams { lambda, eta, nu })
    }

    /// Dimension m.
    pub fn m(&self) -> usize {
        self.lambda.len()
    }

    /// Total intensity s(λ) = Σ λ_i.
    pub fn s_lambda(&self) -> f64 {
        self.lambda.iter().sum()
    }

    /// Same intensities with different fractional orders.
    pub fn with_orders(&self, eta: f64, nu: f64) -> Result<Self> {
        ModelParams::new(self.lambda.clone(), eta, nu)
    }
}
