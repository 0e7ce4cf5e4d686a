//! Parameter and distribution families: process parameters, multi-indices,
//! jump-size distributions, Bernstein function families and power-series
//! representations in t^ν.

mod bernstein;
mod jumps;
mod multi_index;
mod params;
mod series;

pub use bernstein::BernsteinFamily;
pub use jumps::{implied_lambda, JumpDistribution, JumpFamily};
pub use multi_index::{iter_box, iter_simplex, BoxIter, MultiIndex};
pub use params::ModelParams;
pub use series::PowerSeriesTNu;
