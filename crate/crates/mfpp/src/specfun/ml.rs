//! Two- and three-parameter Mittag-Leffler functions.
//!
//! E_{α,β}(z) = Σ_{r≥0} z^r / Γ(αr + β) is evaluated by the defining series
//! with compensated summation for |z| ≤ 10, and by the algebraic asymptotic
//! expansion −Σ_{k≥1} z^{−k}/Γ(β − αk) for real z < −10 (truncated at its
//! smallest term). α = β = 1 short-circuits to exp(z). Whatever path is
//! taken, a running error bound is kept; if it exceeds the 1e-10 target the
//! call fails with the achieved bound instead of returning a quietly wrong
//! value.

use super::gamma::{is_gamma_pole, ln_abs_gamma};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Series/asymptotic switch radius.
const Z_SWITCH: f64 = 10.0;
/// Target absolute error.
const ML_TOL: f64 = 1e-10;
const MAX_TERMS: usize = 2000;

fn validate(alpha: f64, beta: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(format!(
            "mittag_leffler: alpha must be in (0,1], got {alpha}"
        )));
    }
    if !(beta > 0.0) {
        return Err(Error::domain(format!(
            "mittag_leffler: beta must be > 0, got {beta}"
        )));
    }
    Ok(())
}

/// Plain series with Kahan compensation. Returns (value, error bound).
fn ml_series(alpha: f64, beta: f64, z: Complex64) -> (Complex64, f64) {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut z_pow = Complex64::new(1.0, 0.0);
    for r in 0..MAX_TERMS {
        let arg = alpha * r as f64 + beta;
        let (ln_g, sign) = ln_abs_gamma(arg);
        let term = if sign == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            z_pow * ((-ln_g).exp() * sign as f64)
        };
        // Kahan step
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        abs_sum += term.norm();

        z_pow *= z;
        if r > 4 && term.norm() < 1e-17 * (1.0 + abs_sum) {
            break;
        }
        if !z_pow.norm().is_finite() {
            return (sum, f64::INFINITY);
        }
    }
    (sum, f64::EPSILON * abs_sum)
}

/// Algebraic expansion for real z ≪ 0, truncated at the smallest term.
fn ml_asymptotic_neg_real(alpha: f64, beta: f64, x: f64) -> (f64, f64) {
    debug_assert!(x < 0.0);
    let mut sum = 0.0;
    let mut smallest = f64::INFINITY;
    for k in 1..=60 {
        let arg = beta - alpha * k as f64;
        let term = if is_gamma_pole(arg, 1e-12) {
            0.0
        } else {
            let (ln_g, sign) = ln_abs_gamma(arg);
            let mag = (-(k as f64) * x.abs().ln() - ln_g).exp();
            -sign as f64 * mag * if k % 2 == 0 { 1.0 } else { -1.0 }
        };
        // z^{-k} = (-1)^k |x|^{-k}; combined sign handled above.
        // Pole terms are exact zeros and say nothing about convergence.
        let t_abs = term.abs();
        if t_abs == 0.0 {
            continue;
        }
        if t_abs > smallest && k > 2 {
            // divergent tail reached: stop before the previous (smallest) term
            return (sum, smallest);
        }
        sum += term;
        smallest = t_abs;
        if t_abs < ML_TOL * 1e-3 {
            return (sum, t_abs);
        }
    }
    (sum, smallest)
}

/// E_{α,β}(z) for complex z, absolute error ≤ 1e-10 on the supported domain.
pub fn mittag_leffler(alpha: f64, beta: f64, z: Complex64) -> Result<Complex64> {
    validate(alpha, beta)?;
    if alpha == 1.0 && beta == 1.0 {
        return Ok(z.exp());
    }
    // target: absolute 1e-10, relaxing to relative 1e-10 where the value
    // itself is large (only relative accuracy exists in f64 there)
    let gate = |v: f64, err: f64| err <= ML_TOL * v.max(1.0);
    if z.norm() <= Z_SWITCH {
        let (v, err) = ml_series(alpha, beta, z);
        if gate(v.norm(), err) {
            return Ok(v);
        }
        return Err(Error::non_convergence("mittag_leffler series", err, ML_TOL));
    }
    if z.im == 0.0 && z.re < 0.0 {
        let (va, ea) = ml_asymptotic_neg_real(alpha, beta, z.re);
        if gate(va.abs(), ea) {
            return Ok(Complex64::new(va, 0.0));
        }
        // neither regime is reliable; report the better bound
        let (vs, es) = ml_series(alpha, beta, z);
        if gate(vs.norm(), es) {
            return Ok(vs);
        }
        let achieved = ea.min(es);
        return Err(Error::non_convergence(
            "mittag_leffler asymptotic",
            achieved,
            ML_TOL,
        ));
    }
    // |z| beyond the series radius and not real-negative: try the series and
    // keep the result only if the compensated bound clears the target.
    let (v, err) = ml_series(alpha, beta, z);
    if gate(v.norm(), err) {
        return Ok(v);
    }
    Err(Error::non_convergence(
        "mittag_leffler large |z|",
        err,
        ML_TOL,
    ))
}

/// E_{α,β}(x) for real x.
pub fn mittag_leffler_real(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    Ok(mittag_leffler(alpha, beta, Complex64::new(x, 0.0))?.re)
}

/// Three-parameter (Prabhakar) Mittag-Leffler function
/// E^γ_{α,β}(x) = Σ_{j≥0} (γ)^{(j)} x^j / (j! Γ(αj + β)).
pub fn mittag_leffler_3(alpha: f64, beta: f64, gamma: f64, x: f64) -> Result<f64> {
    validate(alpha, beta)?;
    if !(gamma > 0.0) {
        return Err(Error::domain(format!(
            "mittag_leffler_3: gamma must be > 0, got {gamma}"
        )));
    }
    if x.abs() > 50.0 {
        return Err(Error::domain(format!(
            "mittag_leffler_3: |x| = {} beyond evaluation domain",
            x.abs()
        )));
    }
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut abs_sum = 0.0;
    // poch_fact = (γ)^{(j)} x^j / j!, built incrementally
    let mut poch_fact = 1.0;
    for j in 0..MAX_TERMS {
        let arg = alpha * j as f64 + beta;
        let (ln_g, sign) = ln_abs_gamma(arg);
        let term = if sign == 0 {
            0.0
        } else {
            poch_fact * (-ln_g).exp() * sign as f64
        };
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        abs_sum += term.abs();

        poch_fact *= (gamma + j as f64) / (j as f64 + 1.0) * x;
        if j > 4 && term.abs() < 1e-17 * (1.0 + abs_sum) {
            break;
        }
        if !poch_fact.is_finite() {
            return Err(Error::non_convergence(
                "mittag_leffler_3 overflow",
                f64::INFINITY,
                ML_TOL,
            ));
        }
    }
    let err = f64::EPSILON * abs_sum;
    if err <= ML_TOL * sum.abs().max(1.0) {
        Ok(sum)
    } else {
        Err(Error::non_convergence("mittag_leffler_3", err, ML_TOL))
    }
}
