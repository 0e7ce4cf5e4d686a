//! Poisson sampling: sequential inversion for small means, transformed
//! rejection with squeeze (Hörmann's PTRS) above. Conditional means λ_i A
//! can be arbitrarily large when the stable clock jumps, so the rejection
//! branch must stay O(1) in the mean.

use super::rng::RngStream;
use crate::specfun::ln_abs_gamma;

const INVERSION_CUTOFF: f64 = 30.0;

fn poisson_inversion(mean: f64, rng: &mut RngStream) -> u64 {
    let u = rng.uniform();
    let mut p = (-mean).exp();
    let mut cum = p;
    let mut k = 0u64;
    let k_cap = (mean + 20.0 * mean.sqrt() + 60.0) as u64;
    while u > cum && k < k_cap {
        k += 1;
        p *= mean / k as f64;
        cum += p;
    }
    k
}

fn poisson_ptrs(mean: f64, rng: &mut RngStream) -> u64 {
    let slam = mean.sqrt();
    let loglam = mean.ln();
    let b = 0.931 + 2.53 * slam;
    let a = -0.059 + 0.02483 * b;
    let inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    let v_r = 0.9277 - 3.6224 / (b - 2.0);
    loop {
        let u = rng.uniform() - 0.5;
        let v = rng.uniform();
        let us = 0.5 - u.abs();
        let k = ((2.0 * a / us + b) * u + mean + 0.43).floor();
        if us >= 0.07 && v <= v_r {
            return k as u64;
        }
        if k < 0.0 || (us < 0.013 && v > us) {
            continue;
        }
        if v.ln() + inv_alpha.ln() - (a / (us * us) + b).ln()
            <= -mean + k * loglam - ln_abs_gamma(k + 1.0).0
        {
            return k as u64;
        }
    }
}

/// One draw of Poisson(mean).
pub fn sample_poisson(mean: f64, rng: &mut RngStream) -> u64 {
    debug_assert!(mean >= 0.0 && mean.is_finite(), "mean = {mean}");
    if mean == 0.0 {
        0
    } else if mean < INVERSION_CUTOFF {
        poisson_inversion(mean, rng)
    } else {
        poisson_ptrs(mean, rng)
    }
}
