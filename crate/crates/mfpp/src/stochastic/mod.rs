//! Random samplers: one-sided stable subordinator, inverse stable
//! subordinator, gamma subordinator, Poisson vectors and the composed
//! processes, all driven by addressable reproducible streams.

mod gamma_sampler;
mod poisson;
mod process;
mod rng;
mod stable;

pub use gamma_sampler::sample_gamma;
pub use poisson::sample_poisson;
pub use process::{sample_compound, sample_ot_process, sample_process};
pub use rng::RngStream;
pub use stable::{sample_inverse_stable, sample_stable};
