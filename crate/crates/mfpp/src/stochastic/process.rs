//! Fixed-t draws of the composed processes: the plain space-time fractional
//! vector N(A^η(L^ν(t))), its compound version, and the general-subordinator
//! version N(H^f(L^ν(t))). Coordinates are conditionally independent Poisson
//! counts given the composed clock.

use super::gamma_sampler::sample_gamma;
use super::poisson::sample_poisson;
use super::rng::RngStream;
use super::stable::{sample_inverse_stable, sample_stable};
use crate::error::{Error, Result};
use crate::model::{BernsteinFamily, JumpDistribution, JumpFamily, ModelParams, MultiIndex};

/// One draw of N^{η,ν}(t).
pub fn sample_process(params: &ModelParams, t: f64, rng: &mut RngStream) -> MultiIndex {
    let clock_inner = sample_inverse_stable(params.nu, t, rng);
    let clock = sample_stable(params.eta, clock_inner, rng);
    poisson_vector(params, clock, rng)
}

fn poisson_vector(params: &ModelParams, clock: f64, rng: &mut RngStream) -> MultiIndex {
    MultiIndex::new(
        params
            .lambda
            .iter()
            .map(|&l| sample_poisson(l * clock, rng))
            .collect(),
    )
}

fn sample_jump(jumps: &JumpDistribution, i: usize, rng: &mut RngStream) -> u64 {
    match jumps.families()[i] {
        JumpFamily::Unit => 1,
        JumpFamily::Geometric { alpha } => {
            if alpha == 1.0 {
                1
            } else {
                // inversion of the geometric cdf on {1, 2, ...}
                let u = rng.uniform_open();
                1 + (u.ln() / (1.0 - alpha).ln()).floor() as u64
            }
        }
        _ => {
            // walk the truncated pmf table
            let u = rng.uniform();
            let mut cum = 0.0;
            let jmax = jumps.jmax(i);
            for j in 1..=jmax {
                cum += jumps.pmf(i, j);
                if u < cum {
                    return j;
                }
            }
            jmax
        }
    }
}

/// One draw of the compound vector C^{η,ν}(t) = Σ_{j<=N_i} Y^i_j.
pub fn sample_compound(
    params: &ModelParams,
    jumps: &JumpDistribution,
    t: f64,
    rng: &mut RngStream,
) -> MultiIndex {
    let counts = sample_process(params, t, rng);
    let mut out = Vec::with_capacity(params.m());
    for i in 0..params.m() {
        let mut total = 0u64;
        for _ in 0..counts.get(i) {
            total += sample_jump(jumps, i, rng);
        }
        out.push(total);
    }
    MultiIndex::new(out)
}

/// One draw of N^{f,ν}(t) for a samplable Bernstein family.
pub fn sample_ot_process(
    params: &ModelParams,
    f: &BernsteinFamily,
    nu: f64,
    t: f64,
    rng: &mut RngStream,
) -> Result<MultiIndex> {
    if !(nu > 0.0 && nu <= 1.0) {
        return Err(Error::domain(format!(
            "sample_ot_process: nu must be in (0,1], got {nu}"
        )));
    }
    let clock_inner = sample_inverse_stable(nu, t, rng);
    let clock = match *f {
        BernsteinFamily::Stable { eta } => sample_stable(eta, clock_inner, rng),
        BernsteinFamily::Gamma { a, b } => {
            if !(a > 0.0 && b > 0.0) {
                return Err(Error::domain("sample_ot_process: gamma family needs a, b > 0"));
            }
            sample_gamma(a * clock_inner, b, rng)
        }
    };
    Ok(poisson_vector(params, clock, rng))
}
