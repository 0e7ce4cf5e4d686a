//! Multivariate space-time fractional (compound) Poisson processes.
//!
//! The m-variate process N^{η,ν}(t) = N(A^η(L^ν(t))) subordinates a vector of
//! independent Poisson processes to a stable clock A^η run on the inverse
//! stable clock L^ν. This crate provides
//!
//! - exact fixed-t samplers for the plain, compound and general-subordinator
//!   versions of the process ([`stochastic`]),
//! - closed-form laws: state probabilities, probability generating
//!   functions, covariance, codifference and Lévy measures ([`analytics`]),
//! - fractional operators and residual evaluators that numerically certify
//!   the governing fractional differential equations ([`fracops`]),
//! - a Monte Carlo comparison engine and the `mfpp` command-line interface
//!   ([`harness`]),
//!
//! on top of a small special-function layer ([`specfun`]) and the shared
//! domain types ([`model`]).
//!
//! See the crate examples for one runnable program per capability.

pub mod analytics;
pub mod error;
pub mod fracops;
pub mod harness;
pub mod model;
pub mod specfun;
pub mod stochastic;

pub use error::{Error, Result};
