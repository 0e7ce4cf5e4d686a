//! Bernstein functions of subordinators: f(μ) = ∫ (1 − e^{−μr}) ρ_f(dr).
//!
//! Two parametric families are supported: the stable subordinator
//! (f(μ) = μ^η, ρ_f(dr) = η/Γ(1−η) r^{−η−1} dr) and the gamma subordinator
//! (f(μ) = a log(1 + μ/b), ρ_f(dr) = a e^{−br}/r dr).

use crate::error::{Error, Result};
use crate::specfun;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BernsteinFamily {
    Stable { eta: f64 },
    Gamma { a: f64, b: f64 },
}

impl BernsteinFamily {
    pub fn new_stable(eta: f64) -> Result<Self> {
        if !(eta > 0.0 && eta < 1.0) {
            return Err(Error::domain(format!(
                "stable Bernstein family requires eta in (0,1), got {eta}"
            )));
        }
        Ok(BernsteinFamily::Stable { eta })
    }

    pub fn new_gamma(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::domain(format!(
                "gamma Bernstein family requires a, b > 0, got a = {a}, b = {b}"
            )));
        }
        Ok(BernsteinFamily::Gamma { a, b })
    }

    /// f(μ) for μ >= 0.
    pub fn eval(&self, mu: f64) -> f64 {
        match *self {
            BernsteinFamily::Stable { eta } => mu.powf(eta),
            BernsteinFamily::Gamma { a, b } => a * (1.0 + mu / b).ln(),
        }
    }

    /// f(μ) for complex μ with Re μ >= 0, principal branches.
    pub fn eval_complex(&self, mu: Complex64) -> Complex64 {
        match *self {
            BernsteinFamily::Stable { eta } => mu.powf(eta),
            BernsteinFamily::Gamma { a, b } => (Complex64::new(1.0, 0.0) + mu / b).ln() * a,
        }
    }

    /// ∫_0^∞ r^n e^{−sr} ρ_f(dr) for n >= 1, s > 0 (the jump-rate moments of
    /// the governing equation for the generalized process).
    pub fn levy_moment_rate(&self, n: u32, s: f64) -> Result<f64> {
        if n == 0 {
            return Err(Error::domain(
                "levy_moment_rate: n = 0 diverges for the stable family",
            ));
        }
        if !(s > 0.0) {
            return Err(Error::domain(format!(
                "levy_moment_rate: s must be > 0, got {s}"
            )));
        }
        match *self {
            BernsteinFamily::Stable { eta } => {
                let c = eta / specfun::gamma(1.0 - eta)?;
                Ok(c * specfun::gamma(n as f64 - eta)? * s.powf(eta - n as f64))
            }
            BernsteinFamily::Gamma { a, b } => {
                Ok(a * specfun::gamma(n as f64)? * (s + b).powi(-(n as i32)))
            }
        }
    }
}
