//! State probabilities of the plain and compound processes.
//!
//! p_k^{η,ν}(t) is the alternating series
//!
//!   (Πλ_i^{k_i}/s^{|k|}) ((−1)^{|k|}/Πk_i!) Σ_r (−s^η t^ν)^r/Γ(νr+1)
//!       · Γ(ηr+1)/Γ(ηr−|k|+1),
//!
//! equivalently a ₂Ψ₂ Fox-Wright value. Terms are assembled in log space;
//! a Γ-pole in the denominator zeroes the whole summand (for η = 1 that
//! kills every r < |k| exactly). Compensated summation plus a running
//! Σ|term| gives an honest absolute error bound; the call fails rather than
//! return a value whose cancellation error exceeds the 1e-10 target.

use crate::error::{Error, Result};
use crate::model::{iter_box, JumpDistribution, ModelParams, MultiIndex};
use crate::specfun::{fox_wright, ln_abs_gamma, mittag_leffler_3, FoxWrightSpec};

const PMF_TOL: f64 = 1e-10;
const MAX_TERMS: usize = 5000;

/// Which of the two equivalent closed forms evaluates p_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmfRoute {
    Series,
    FoxWright,
    Auto,
}

/// Prefactor Πλ_i^{k_i}/s^{|k|} · (−1)^{|k|}/Πk_i! as (ln|·|, sign).
fn ln_prefactor(params: &ModelParams, k: &MultiIndex) -> (f64, f64) {
    let s = params.s_lambda();
    let mut ln = -(k.total() as f64) * s.ln();
    for i in 0..params.m() {
        let ki = k.get(i) as f64;
        ln += ki * params.lambda[i].ln() - ln_abs_gamma(ki + 1.0).0;
    }
    let sign = if k.total() % 2 == 0 { 1.0 } else { -1.0 };
    (ln, sign)
}

fn series_sum(params: &ModelParams, k: &MultiIndex, t: f64) -> Result<(f64, f64)> {
    let s = params.s_lambda();
    let eta = params.eta;
    let nu = params.nu;
    let total = k.total() as f64;
    let x = s.powf(eta) * t.powf(nu);
    let ln_x = x.ln();

    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut abs_sum = 0.0;
    let mut small_streak = 0;
    let r_start = (total / eta).ceil() as usize + 2;
    for r in 0..MAX_TERMS {
        let rf = r as f64;
        let denom_arg = eta * rf - total + 1.0;
        let (ln_den, sign_den) = ln_abs_gamma(denom_arg);
        let term = if sign_den == 0 {
            0.0
        } else {
            let ln_term =
                rf * ln_x - ln_abs_gamma(nu * rf + 1.0).0 + ln_abs_gamma(eta * rf + 1.0).0
                    - ln_den;
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 } * sign_den as f64;
            sign * ln_term.exp()
        };
        let y = term - comp;
        let tt = sum + y;
        comp = (tt - sum) - y;
        sum = tt;
        abs_sum += term.abs();

        if r >= r_start {
            if term.abs() < 1e-14 * abs_sum.max(1e-280) {
                small_streak += 1;
                if small_streak >= 3 {
                    break;
                }
            } else {
                small_streak = 0;
            }
        }
    }
    Ok((sum, f64::EPSILON * abs_sum))
}

/// p_k^{η,ν}(t) = P(N^{η,ν}(t) = k).
pub fn pmf(params: &ModelParams, k: &MultiIndex, t: f64, route: PmfRoute) -> Result<f64> {
    if k.dim() != params.m() {
        return Err(Error::domain("pmf: k has wrong dimension"));
    }
    if t < 0.0 {
        return Err(Error::domain(format!("pmf: t must be >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(if k.is_zero() { 1.0 } else { 0.0 });
    }
    let (ln_pref, sign_pref) = ln_prefactor(params, k);
    let pref = sign_pref * ln_pref.exp();
    match route {
        PmfRoute::Series | PmfRoute::Auto => Ok(pref * series_sum(params, k, t)?),
        PmfRoute::FoxWright => {
            let total = k.total() as f64;
            let spec = FoxWrightSpec::new(
                vec![(1.0, params.eta), (1.0, 1.0)],
                vec![(1.0, params.nu), (1.0 - total, params.eta)],
            );
            let z = -params.s_lambda().powf(params.eta) * t.powf(params.nu);
            Ok(pref * fox_wright(&spec, z)?)
        }
    }
}

/// p_k^{1,ν}(t) through the three-parameter Mittag-Leffler closed form
/// multinomial(|k|; k) Πλ^{k_i} t^{ν|k|} E^{|k|+1}_{ν, ν|k|+1}(−s(λ) t^ν).
pub fn pmf_eta1(params: &ModelParams, k: &MultiIndex, t: f64) -> Result<f64> {
    if params.eta != 1.0 {
        return Err(Error::domain(format!(
            "pmf_eta1 requires eta = 1, got {}",
            params.eta
        )));
    }
    if k.dim() != params.m() {
        return Err(Error::domain("pmf_eta1: k has wrong dimension"));
    }
    if t == 0.0 {
        return Ok(if k.is_zero() { 1.0 } else { 0.0 });
    }
    let total = k.total() as f64;
    let nu = params.nu;
    let s = params.s_lambda();
    let ml = mittag_leffler_3(nu, nu * total + 1.0, total + 1.0, -s * t.powf(nu))?;
    let mut ln = ln_abs_gamma(total + 1.0).0;
    for i in 0..params.m() {
        let ki = k.get(i) as f64;
        ln += ki * params.lambda[i].ln() - ln_abs_gamma(ki + 1.0).0;
    }
    if k.total() > 0 {
        ln += nu * total * t.ln();
    }
    Ok(ln.exp() * ml)
}

/// q_k^{η,ν}(t) = P(C^{η,ν}(t) = k): law of total probability over the count
/// vector. Exactly finite because (q̃^i)^{*n}_j = 0 for j < n.
pub fn compound_pmf(
    params: &ModelParams,
    jumps: &JumpDistribution,
    k: &MultiIndex,
    t: f64,
    route: PmfRoute,
) -> Result<f64> {
    if jumps.dim() != params.m() {
        return Err(Error::domain("compound_pmf: jump dimension mismatch"));
    }
    let mut q = 0.0;
    for n in iter_box(k) {
        let mut w = 1.0;
        for i in 0..params.m() {
            w *= jumps.convolution_power(i, n.get(i) as u32, k.get(i));
            if w == 0.0 {
                break;
            }
        }
        if w == 0.0 {
            continue;
        }
        q += pmf(params, &n, t, route)? * w;
    }
    Ok(q)
}
