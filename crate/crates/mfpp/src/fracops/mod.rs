//! Fractional operators and equation-residual certification: termwise Caputo
//! calculus on t^ν-series, a quadrature Caputo oracle, integer-order
//! Riemann-Liouville differentiation, the exact multivariate fractional
//! difference operator, and residual evaluators for the governing equations.

mod caputo;
mod frac_diff;
mod lattice;
mod quad;
mod residuals;
mod rl;

pub use caputo::{caputo_quadrature, caputo_termwise};
pub use frac_diff::{frac_difference, frac_difference_with_terms};
pub use lattice::{compound_series, pmf_series, LatticeFunction, DEFAULT_SERIES_ORDER};
pub use quad::adaptive_simpson;
pub use residuals::{
    lambda_derivative_check, pgf_caputo_residual, residual_ot, residual_ot_table, residual_pa,
    residual_prop1, residual_prop2_space, residual_prop2_time, rl_exponential_pgf_residual,
    PaVariant,
};
pub use rl::rl_integer_derivative;
