//! Lévy measures of the space-fractional processes N^{η,1} and C^{η,1}.
//!
//! Both measures charge only multi-indices k ≻ 0. For η ∈ (0,1) the point
//! masses are finite sums of Γ(|n|−η)/s(λ)^{|n|−η} terms; the z-integral of
//! the compound case reduces termwise because convolution powers vanish for
//! n_i > k_i. The η = 1 branches are the classical compound-Poisson measures
//! and are implemented as separate exact code paths.

use crate::error::{Error, Result};
use crate::model::{iter_box, JumpDistribution, ModelParams, MultiIndex};
use crate::specfun::ln_abs_gamma;

/// A single atom of a Lévy measure.
#[derive(Debug, Clone, PartialEq)]
pub struct LevyPointMass {
    pub k: MultiIndex,
    pub mass: f64,
}

impl LevyPointMass {
    pub fn new(k: MultiIndex, mass: f64) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::domain("LevyPointMass: k must be ≻ 0"));
        }
        if !(mass >= 0.0) {
            return Err(Error::domain(format!(
                "LevyPointMass: mass must be >= 0, got {mass}"
            )));
        }
        Ok(LevyPointMass { k, mass })
    }
}

/// (η/Γ(1−η)) Γ(|n|−η)/s^{|n|−η} · Π λ_i^{n_i}/n_i!, assembled in log space.
fn stable_term(params: &ModelParams, n: &MultiIndex) -> f64 {
    let eta = params.eta;
    let s = params.s_lambda();
    let total = n.total() as f64;
    let mut ln = eta.ln() - ln_abs_gamma(1.0 - eta).0 + ln_abs_gamma(total - eta).0
        - (total - eta) * s.ln();
    for i in 0..params.m() {
        let ni = n.get(i) as f64;
        ln += ni * params.lambda[i].ln() - ln_abs_gamma(ni + 1.0).0;
    }
    ln.exp()
}

/// ρ_N^η({k}) for k ≻ 0. At η = 1 the measure sits on the unit vectors with
/// masses λ_i.
pub fn levy_measure_n(params: &ModelParams, k: &MultiIndex) -> Result<f64> {
    if k.dim() != params.m() {
        return Err(Error::domain("levy_measure_n: k has wrong dimension"));
    }
    if k.is_zero() {
        return Err(Error::domain("levy_measure_n: k must be ≻ 0"));
    }
    if params.eta == 1.0 {
        for i in 0..params.m() {
            if k == &MultiIndex::unit(params.m(), i) {
                return Ok(params.lambda[i]);
            }
        }
        return Ok(0.0);
    }
    Ok(stable_term(params, k))
}

/// ρ_C^η({k}) for k ≻ 0:
///   (η/Γ(1−η)) Σ_n [Π_i (q̃^i)^{*n_i}_{k_i} λ_i^{n_i}/n_i!] Γ(|n|−η)/s^{|n|−η},
/// the sum running over 1 <= n_i <= k_i on coordinates with k_i >= 1 and
/// n_i = 0 elsewhere. At η = 1 it is λ_i q̃^i_{k_i} on the axes, 0 off-axis.
pub fn levy_measure_c(
    params: &ModelParams,
    jumps: &JumpDistribution,
    k: &MultiIndex,
) -> Result<f64> {
    if k.dim() != params.m() {
        return Err(Error::domain("levy_measure_c: k has wrong dimension"));
    }
    if k.is_zero() {
        return Err(Error::domain("levy_measure_c: k must be ≻ 0"));
    }
    if params.eta == 1.0 {
        let positive: Vec<usize> = (0..params.m()).filter(|&i| k.get(i) > 0).collect();
        if positive.len() != 1 {
            return Ok(0.0);
        }
        let i = positive[0];
        return Ok(params.lambda[i] * jumps.pmf(i, k.get(i)));
    }
    let mut mass = 0.0;
    for n in iter_box(k) {
        // coordinates with k_i >= 1 need n_i >= 1; the weight below is zero
        // otherwise, but skipping keeps the sum tight
        if (0..params.m()).any(|i| (k.get(i) > 0) != (n.get(i) > 0)) {
            continue;
        }
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
        mass += w * stable_term(params, &n);
    }
    Ok(mass)
}

/// Exact partial-mass identity for the plain measure: summing ρ_N over
/// 1 <= |k| <= K leaves the tail s^η Γ(K+1−η)/(Γ(1−η) Γ(K+1)).
pub fn levy_n_partial_mass_closed_form(params: &ModelParams, kmax_total: u64) -> Result<f64> {
    if !(params.eta < 1.0) {
        return Err(Error::domain("partial mass identity needs eta in (0,1)"));
    }
    let s = params.s_lambda();
    let eta = params.eta;
    let kf = kmax_total as f64;
    let ln_tail =
        ln_abs_gamma(kf + 1.0 - eta).0 - ln_abs_gamma(1.0 - eta).0 - ln_abs_gamma(kf + 1.0).0;
    Ok(s.powf(eta) * (1.0 - ln_tail.exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{iter_simplex, JumpFamily};
    use crate::specfun::gamma;

    fn params_eta(eta: f64) -> ModelParams {
        ModelParams::new(vec![1.0, 2.0], eta, 1.0).unwrap()
    }

    #[test]
    fn eta_one_branches() {
        let p = params_eta(1.0);
        assert_eq!(
            levy_measure_n(&p, &MultiIndex::new(vec![1, 0])).unwrap(),
            1.0
        );
        assert_eq!(
            levy_measure_n(&p, &MultiIndex::new(vec![0, 1])).unwrap(),
            2.0
        );
        assert_eq!(
            levy_measure_n(&p, &MultiIndex::new(vec![1, 1])).unwrap(),
            0.0
        );
        assert_eq!(
            levy_measure_n(&p, &MultiIndex::new(vec![2, 0])).unwrap(),
            0.0
        );
        let jumps = JumpDistribution::new(
            vec![
                JumpFamily::Geometric { alpha: 0.4 },
                JumpFamily::Geometric { alpha: 0.6 },
            ],
            &p,
        )
        .unwrap();
        // axis points carry λ_i q̃^i_j, off-axis nothing
        let v = levy_measure_c(&p, &jumps, &MultiIndex::new(vec![3, 0])).unwrap();
        assert!((v - 1.0 * 0.4 * 0.36).abs() < 1e-15);
        assert_eq!(
            levy_measure_c(&p, &jumps, &MultiIndex::new(vec![1, 2])).unwrap(),
            0.0
        );
    }

    #[test]
    fn zero_index_rejected() {
        let p = params_eta(0.5);
        assert!(levy_measure_n(&p, &MultiIndex::zeros(2)).is_err());
        assert!(LevyPointMass::new(MultiIndex::zeros(2), 1.0).is_err());
    }

    #[test]
    fn stable_point_mass_direct_substitution() {
        // (m=2, λ=(1,2), η=0.5, k=(1,1)):
        //   (0.5/Γ(0.5)) Γ(1.5)/3^{1.5} · (1·2)/(1!·1!)
        let p = params_eta(0.5);
        let v = levy_measure_n(&p, &MultiIndex::new(vec![1, 1])).unwrap();
        let expect = 0.5 / gamma(0.5).unwrap() * gamma(1.5).unwrap() / 3.0f64.powf(1.5) * 2.0;
        assert!((v - expect).abs() < 1e-14);
        assert!((v - 0.096_225_044_864_937_62).abs() < 1e-13);
    }

    #[test]
    fn unit_jumps_reduce_to_plain_measure_bitwise() {
        let p = params_eta(0.5);
        let jumps = JumpDistribution::unit(2);
        for k in iter_simplex(2, 8) {
            if k.is_zero() {
                continue;
            }
            let a = levy_measure_n(&p, &k).unwrap();
            let b = levy_measure_c(&p, &jumps, &k).unwrap();
            assert_eq!(a.to_bits(), b.to_bits(), "k = {k}");
        }
    }

    #[test]
    fn compound_geometric_two_term_example() {
        // m=1, λ=1, geometric α̃=0.5, η=0.5, k=2:
        //   Σ_{n=1,2} (0.5/Γ(0.5)) (q̃)^{*n}_2 λ^n/n! Γ(n−0.5)/1^{n−0.5}
        //   = c·(0.25·Γ(0.5) + 0.25/2·Γ(1.5)·2/2)... assembled explicitly below
        let p = ModelParams::new(vec![1.0], 0.5, 1.0).unwrap();
        let jumps =
            JumpDistribution::new(vec![JumpFamily::Geometric { alpha: 0.5 }], &p).unwrap();
        let c = 0.5 / gamma(0.5).unwrap();
        let expect = c * (0.25 * gamma(0.5).unwrap() / 1.0 + 0.25 / 2.0 * gamma(1.5).unwrap());
        let v = levy_measure_c(&p, &jumps, &MultiIndex::new(vec![2])).unwrap();
        assert!((v - expect).abs() < 1e-14, "{v} vs {expect}");
        // c Γ(0.5) = 1/2 and c Γ(1.5) = 1/4, so the mass is 1/8 + 1/32
        assert!((v - 0.15625).abs() < 1e-13);
    }

    #[test]
    fn partial_mass_identity() {
        // Σ_{1<=|k|<=K} ρ_N(k) has a closed form; the direct sum must match it
        let p = params_eta(0.5);
        for &kk in &[5u64, 20, 40] {
            let direct: f64 = iter_simplex(2, kk)
                .filter(|k| !k.is_zero())
                .map(|k| levy_measure_n(&p, &k).unwrap())
                .sum();
            let closed = levy_n_partial_mass_closed_form(&p, kk).unwrap();
            assert!(
                ((direct - closed) / closed).abs() < 1e-10,
                "K={kk}: {direct} vs {closed}"
            );
        }
    }
}
