//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the numerical and simulation layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation
    /// (pole of the Gamma function, invalid fractional order, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A series, quadrature or inversion did not reach its target accuracy.
    /// Carries the error bound that was actually achieved.
    #[error("numerical failure in {context}: achieved {achieved:.3e}, required {required:.3e}")]
    NonConvergence {
        context: String,
        achieved: f64,
        required: f64,
    },

    /// Malformed or inconsistent experiment configuration.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("config parse error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn non_convergence(context: impl Into<String>, achieved: f64, required: f64) -> Self {
        Error::NonConvergence {
            context: context.into(),
            achieved,
            required,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
