//! Time-series representations of the state probabilities on a lattice box.

use crate::error::{Error, Result};
use crate::model::{iter_box, JumpDistribution, ModelParams, MultiIndex, PowerSeriesTNu};
use crate::specfun::ln_abs_gamma;

/// Truncation order of the t^ν power series; with t <= 2 and s(λ)^η <= 4 the
/// Γ(νr+1) growth makes the discarded tail smaller than 1e-14.
pub const DEFAULT_SERIES_ORDER: usize = 120;

/// Coefficients of p_k^{η,ν} as a series in t^ν:
/// c_r = (Πλ^{k}/s^{|k|}) ((−1)^{|k|}/Πk_i!) (−s^η)^r Γ(ηr+1)/(Γ(νr+1) Γ(ηr−|k|+1)).
pub fn pmf_series(params: &ModelParams, k: &MultiIndex, order: usize) -> Result<PowerSeriesTNu> {
    if k.dim() != params.m() {
        return Err(Error::domain("pmf_series: k has wrong dimension"));
    }
    let s = params.s_lambda();
    let eta = params.eta;
    let nu = params.nu;
    let total = k.total() as f64;

    let mut ln_pref = -total * s.ln();
    for i in 0..params.m() {
        let ki = k.get(i) as f64;
        ln_pref += ki * params.lambda[i].ln() - ln_abs_gamma(ki + 1.0).0;
    }
    let sign_pref = if k.total() % 2 == 0 { 1.0 } else { -1.0 };

    let mut coeffs = Vec::with_capacity(order + 1);
    for r in 0..=order {
        let rf = r as f64;
        let denom_arg = eta * rf - total + 1.0;
        let (ln_den, sign_den) = ln_abs_gamma(denom_arg);
        if sign_den == 0 {
            coeffs.push(0.0);
            continue;
        }
        let ln_c = ln_pref + rf * eta * s.ln() - ln_abs_gamma(nu * rf + 1.0).0
            + ln_abs_gamma(eta * rf + 1.0).0
            - ln_den;
        let sign = sign_pref * if r % 2 == 0 { 1.0 } else { -1.0 } * sign_den as f64;
        coeffs.push(sign * ln_c.exp());
    }
    PowerSeriesTNu::new(nu, coeffs)
}

/// Coefficients of q_k^{η,ν}: the finite combination
/// Σ_{n<=k} [Π_i (q̃^i)^{*n_i}_{k_i}] · (series of p_n).
pub fn compound_series(
    params: &ModelParams,
    jumps: &JumpDistribution,
    k: &MultiIndex,
    order: usize,
) -> Result<PowerSeriesTNu> {
    let mut acc = PowerSeriesTNu::zero(params.nu, order);
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
        acc.add_scaled(w, &pmf_series(params, &n, order)?);
    }
    Ok(acc)
}

/// State probabilities as t^ν-series over the box {0 <= k <= kmax}; queries
/// below the nonnegative orthant evaluate to zero.
#[derive(Debug, Clone)]
pub struct LatticeFunction {
    kmax: MultiIndex,
    series: Vec<PowerSeriesTNu>,
}

impl LatticeFunction {
    pub fn pmf_lattice(params: &ModelParams, kmax: &MultiIndex, order: usize) -> Result<Self> {
        let mut series = Vec::new();
        for k in iter_box(kmax) {
            series.push(pmf_series(params, &k, order)?);
        }
        Ok(LatticeFunction {
            kmax: kmax.clone(),
            series,
        })
    }

    pub fn compound_lattice(
        params: &ModelParams,
        jumps: &JumpDistribution,
        kmax: &MultiIndex,
        order: usize,
    ) -> Result<Self> {
        let mut series = Vec::new();
        for k in iter_box(kmax) {
            series.push(compound_series(params, jumps, &k, order)?);
        }
        Ok(LatticeFunction {
            kmax: kmax.clone(),
            series,
        })
    }

    pub fn kmax(&self) -> &MultiIndex {
        &self.kmax
    }

    fn index(&self, k: &MultiIndex) -> usize {
        let mut idx = 0usize;
        for i in 0..k.dim() {
            idx = idx * (self.kmax.get(i) as usize + 1) + k.get(i) as usize;
        }
        idx
    }

    /// Series at a stored index (panics off the box: construction decides
    /// the extent, queries must stay inside).
    pub fn series_at(&self, k: &MultiIndex) -> &PowerSeriesTNu {
        assert!(
            k.le(&self.kmax),
            "lattice query {k} outside stored box {}",
            self.kmax
        );
        &self.series[self.index(k)]
    }

    /// Value at time t of entry k, or 0 when `k` is None (an off-orthant
    /// shift produced by `checked_sub`).
    pub fn eval_opt(&self, k: Option<&MultiIndex>, t: f64) -> f64 {
        match k {
            Some(k) => self.series_at(k).eval(t),
            None => 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::{pmf, PmfRoute};

    fn default_params() -> ModelParams {
        ModelParams::new(vec![1.0, 2.0], 0.7, 0.8).unwrap()
    }

    #[test]
    fn zero_state_coefficients() {
        // k = 0: c_r = (−s^η)^r / Γ(νr+1)
        let p = default_params();
        let s = pmf_series(&p, &MultiIndex::zeros(2), 10).unwrap();
        let se = 3.0f64.powf(0.7);
        let mut expect = 1.0;
        for r in 0..=10usize {
            let g = crate::specfun::gamma(0.8 * r as f64 + 1.0).unwrap();
            assert!(
                (s.coeff(r) - expect / g).abs() < 1e-12 * (expect / g).abs().max(1e-12),
                "r = {r}"
            );
            expect *= -se;
        }
    }

    #[test]
    fn eta1_low_order_coefficients_vanish() {
        let p = ModelParams::new(vec![1.0, 2.0], 1.0, 0.8).unwrap();
        let k = MultiIndex::new(vec![2, 1]);
        let s = pmf_series(&p, &k, 20).unwrap();
        for r in 0..3 {
            assert_eq!(s.coeff(r), 0.0, "r = {r} below |k| must vanish exactly");
        }
        assert!(s.coeff(3) != 0.0);
    }

    #[test]
    fn series_evaluation_matches_pmf() {
        let p = default_params();
        for k in iter_box(&MultiIndex::new(vec![3, 3])) {
            let series = pmf_series(&p, &k, DEFAULT_SERIES_ORDER).unwrap();
            for &t in &[0.25, 1.0, 2.0] {
                let direct = pmf(&p, &k, t, PmfRoute::Series).unwrap();
                let (v, tail) = series.eval_with_tail(t);
                assert!(tail < 1e-14, "tail {tail} at t={t}");
                assert!((v - direct).abs() < 1e-10, "k={k} t={t}: {v} vs {direct}");
            }
        }
    }

    #[test]
    fn compound_series_unit_jumps_reduce() {
        let p = default_params();
        let jumps = JumpDistribution::unit(2);
        let k = MultiIndex::new(vec![2, 1]);
        let a = pmf_series(&p, &k, 30).unwrap();
        let b = compound_series(&p, &jumps, &k, 30).unwrap();
        for r in 0..=30 {
            assert_eq!(a.coeff(r), b.coeff(r));
        }
    }

    #[test]
    fn lattice_orthant_semantics() {
        let p = default_params();
        let lat = LatticeFunction::pmf_lattice(&p, &MultiIndex::new(vec![2, 2]), 40).unwrap();
        let k = MultiIndex::new(vec![1, 0]);
        let shifted = k.checked_sub(&MultiIndex::new(vec![0, 1]));
        assert_eq!(lat.eval_opt(shifted.as_ref(), 1.0), 0.0);
        assert!(lat.eval_opt(Some(&k), 1.0) > 0.0);
    }
}
