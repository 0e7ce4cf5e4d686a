//! Fox-Wright generalized hypergeometric function pΨq.
//!
//! pΨq[(a,α);(b,β)](z) = Σ_j Π Γ(a_h + α_h j) / Π Γ(b_k + β_k j) · z^j / j!,
//! defined under the convergence condition Σβ_k − Σα_h > −1 (strict). Terms
//! are assembled in log space with explicit sign tracking; a Γ-pole in the
//! denominator makes the whole term an exact zero.

use super::gamma::ln_abs_gamma;
use crate::error::{Error, Result};

const FW_TOL: f64 = 1e-10;
const MAX_TERMS: usize = 2000;

/// Parameter block of a Fox-Wright series.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxWrightSpec {
    /// Upper pairs (a_h, α_h).
    pub upper: Vec<(f64, f64)>,
    /// Lower pairs (b_k, β_k).
    pub lower: Vec<(f64, f64)>,
}

impl FoxWrightSpec {
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Self {
        FoxWrightSpec { upper, lower }
    }

    /// Σβ_k − Σα_h; must exceed −1 for the series to define an entire function.
    pub fn convergence_margin(&self) -> f64 {
        let sum_beta: f64 = self.lower.iter().map(|&(_, b)| b).sum();
        let sum_alpha: f64 = self.upper.iter().map(|&(_, a)| a).sum();
        sum_beta - sum_alpha
    }
}

/// Evaluate pΨq at real z.
pub fn fox_wright(spec: &FoxWrightSpec, z: f64) -> Result<f64> {
    for &(_, a) in &spec.upper {
        if a <= 0.0 {
            return Err(Error::domain(format!("fox_wright: alpha_h = {a} not > 0")));
        }
    }
    for &(_, b) in &spec.lower {
        if b <= 0.0 {
            return Err(Error::domain(format!("fox_wright: beta_k = {b} not > 0")));
        }
    }
    let margin = spec.convergence_margin();
    if margin <= -1.0 {
        return Err(Error::domain(format!(
            "fox_wright: convergence margin {margin} must exceed -1"
        )));
    }

    let ln_abs_z = if z == 0.0 { f64::NEG_INFINITY } else { z.abs().ln() };
    let z_neg = z < 0.0;

    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut abs_sum = 0.0;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        let mut ln_term = -ln_abs_gamma(jf + 1.0).0; // 1/j!
        let mut sign = 1i32;
        let mut pole_num = false;
        for &(a, alpha) in &spec.upper {
            let (ln_g, s) = ln_abs_gamma(a + alpha * jf);
            if s == 0 {
                pole_num = true;
                break;
            }
            ln_term += ln_g;
            sign *= s;
        }
        if pole_num {
            return Err(Error::domain(format!(
                "fox_wright: Gamma pole in the numerator at term j = {j}"
            )));
        }
        let mut zero_term = false;
        for &(b, beta) in &spec.lower {
            let (ln_g, s) = ln_abs_gamma(b + beta * jf);
            if s == 0 {
                zero_term = true; // 1/Γ(pole) = 0
                break;
            }
            ln_term -= ln_g;
            sign *= s;
        }
        let term = if zero_term {
            0.0
        } else {
            if j > 0 {
                ln_term += jf * ln_abs_z;
                if z_neg && j % 2 == 1 {
                    sign = -sign;
                }
            }
            if z == 0.0 && j > 0 {
                0.0
            } else {
                sign as f64 * ln_term.exp()
            }
        };
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        abs_sum += term.abs();

        if j > 8 && term.abs() < 1e-17 * (1.0 + abs_sum) {
            break;
        }
    }
    let err = f64::EPSILON * abs_sum;
    if err <= FW_TOL * sum.abs().max(1.0) {
        Ok(sum)
    } else {
        Err(Error::non_convergence("fox_wright", err, FW_TOL))
    }
}
