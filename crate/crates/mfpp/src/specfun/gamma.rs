//! Gamma function, signed log-Gamma and generalized binomial coefficients.
//!
//! The Gamma function is computed with the Lanczos approximation (g = 7,
//! n = 9 coefficients, Godfrey/Boost set) plus the reflection formula for
//! arguments below 1/2. Ratios Γ(a)/Γ(b) that appear in the state-probability
//! series are always assembled from [`ln_abs_gamma`] so that large arguments
//! never overflow and poles in a denominator yield exact zeros.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;

/// sin(πx) with argument reduction, accurate near integer x.
pub(crate) fn sinpi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// True if `x` is a nonpositive integer (a pole of Γ), up to `tol`.
pub(crate) fn is_gamma_pole(x: f64, tol: f64) -> bool {
    x < 0.5 && (x - x.round()).abs() <= tol
}

fn lanczos_sum(x: f64) -> f64 {
    // x >= 0.5 assumed; series A_g(x - 1)
    let z = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    a
}

fn gamma_positive(x: f64) -> f64 {
    // x >= 0.5
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    SQRT_2PI * t.powf(z + 0.5) * (-t).exp() * lanczos_sum(x)
}

fn ln_gamma_positive(x: f64) -> f64 {
    // x >= 0.5
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(x).ln()
}

/// Γ(x) for non-pole real x with |x| ≤ ~170.
///
/// Reflection formula below 1/2; poles at 0, −1, −2, ... are rejected.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("gamma: non-finite argument {x}")));
    }
    if is_gamma_pole(x, 0.0) {
        return Err(Error::domain(format!("gamma: pole at x = {x}")));
    }
    if x >= 0.5 {
        if x > 171.7 {
            return Err(Error::domain(format!("gamma: overflow for x = {x}")));
        }
        // positive integers: the running factorial is exact for n <= 18 and
        // correctly rounded well past that, and keeps identities like
        // Z(1) = 1/Γ(2) − 1/Γ(1)² = 0 exact
        if x == x.round() {
            let n = x as u64;
            let mut f = 1.0;
            for i in 2..n {
                f *= i as f64;
            }
            return Ok(f);
        }
        Ok(gamma_positive(x))
    } else {
        // Γ(x) = π / (sin(πx) Γ(1−x))
        let s = sinpi(x);
        if s == 0.0 {
            return Err(Error::domain(format!("gamma: pole at x = {x}")));
        }
        Ok(PI / (s * gamma_positive(1.0 - x)))
    }
}

/// (ln|Γ(x)|, sign of Γ(x)). Sign 0 marks a pole; 1/Γ is then an exact zero.
pub fn ln_abs_gamma(x: f64) -> (f64, i32) {
    if is_gamma_pole(x, 1e-9) {
        return (f64::INFINITY, 0);
    }
    if x >= 0.5 {
        (ln_gamma_positive(x), 1)
    } else {
        let s = sinpi(x);
        let ln = PI.ln() - s.abs().ln() - ln_gamma_positive(1.0 - x);
        (ln, if s > 0.0 { 1 } else { -1 })
    }
}

/// Generalized binomial coefficient C(η, j) = η(η−1)⋯(η−j+1)/j!.
///
/// Running product, never routed through Γ: no poles to dodge, and the
/// truncation of the Newton binomial series at integer η is exact
/// (C(1, j) = 0 for j ≥ 2 bit-for-bit).
pub fn gen_binomial(eta: f64, j: u32) -> f64 {
    let mut b = 1.0;
    for i in 0..j {
        b *= (eta - i as f64) / (i as f64 + 1.0);
    }
    b
}
