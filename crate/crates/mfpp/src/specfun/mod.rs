//! Scalar special functions: Gamma, generalized binomial coefficients,
//! two- and three-parameter Mittag-Leffler functions and the Fox-Wright
//! function with convergence gating.
//!
//! Everything here is pure and re-entrant.

mod fox_wright;
mod gamma;
mod ml;

pub use fox_wright::{fox_wright, FoxWrightSpec};
pub use gamma::{gamma, gen_binomial, ln_abs_gamma};
pub use ml::{mittag_leffler, mittag_leffler_3, mittag_leffler_real};
