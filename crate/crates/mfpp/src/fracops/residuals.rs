//! Residual evaluators for the governing fractional differential equations.
//!
//! Each residual assembles the two sides of one proposition's equation by
//! independent routes (termwise fractional calculus on the series
//! representation on one side, lattice combinations of state probabilities
//! on the other) and returns the absolute mismatch at a given (k, t).

use crate::analytics::{pmf, pmf_ot, PmfRoute, PmfTable};
use crate::error::{Error, Result};
use crate::fracops::caputo::caputo_termwise;
use crate::fracops::frac_diff::frac_difference;
use crate::fracops::lattice::{LatticeFunction, DEFAULT_SERIES_ORDER};
use crate::model::{
    iter_box, BernsteinFamily, JumpDistribution, JumpFamily, ModelParams, MultiIndex,
};
use crate::fracops::rl::rl_integer_derivative;
use crate::specfun::{ln_abs_gamma, mittag_leffler_real};

/// 1/η as an integer order for the right-sided Riemann-Liouville branch.
fn integer_inverse_eta(eta: f64) -> Result<u32> {
    let inv = 1.0 / eta;
    let n = inv.round();
    if (inv - n).abs() > 1e-9 || !(1.0..=3.0).contains(&n) {
        return Err(Error::domain(format!(
            "space-fractional verification needs 1/eta integer in {{1,2,3}}, got eta = {eta}"
        )));
    }
    Ok(n as u32)
}

/// |^CD^ν p_k + s(λ)^η (I − Σλ_iB_i/s)^η p_k| at time t.
pub fn residual_prop1(params: &ModelParams, k: &MultiIndex, t: f64) -> Result<f64> {
    let lattice = LatticeFunction::pmf_lattice(params, k, DEFAULT_SERIES_ORDER)?;
    let lhs = caputo_termwise(lattice.series_at(k)).eval(t);
    let op = frac_difference(params, &lattice, k, t);
    Ok((lhs + params.s_lambda().powf(params.eta) * op).abs())
}

/// Time-fractional compound equation (η = 1):
/// |^CD^ν q_k + s(λ) q_k − Σ_i λ_i Σ_{j=1..k_i} q̃^i_j q_{..,k_i−j,..}|.
pub fn residual_prop2_time(
    params: &ModelParams,
    jumps: &JumpDistribution,
    k: &MultiIndex,
    t: f64,
) -> Result<f64> {
    if params.eta != 1.0 {
        return Err(Error::domain(format!(
            "residual_prop2_time requires eta = 1, got {}",
            params.eta
        )));
    }
    let lat = LatticeFunction::compound_lattice(params, jumps, k, DEFAULT_SERIES_ORDER)?;
    let lhs = caputo_termwise(lat.series_at(k)).eval(t);
    let qk = lat.series_at(k).eval(t);
    let mut rhs = -params.s_lambda() * qk;
    for i in 0..params.m() {
        let mut inner = 0.0;
        for j in 1..=k.get(i) {
            let shifted = k.shift_down(i, j).expect("j <= k_i");
            inner += jumps.pmf(i, j) * lat.series_at(&shifted).eval(t);
        }
        rhs += params.lambda[i] * inner;
    }
    Ok((lhs - rhs).abs())
}

/// Space-fractional compound equation (ν = 1, 1/η integer):
/// |d^{1/η}/d(−t)^{1/η} q_k − s(λ) q_k + Σ_i λ_i Σ_j q̃^i_j q_shift|.
pub fn residual_prop2_space(
    params: &ModelParams,
    jumps: &JumpDistribution,
    k: &MultiIndex,
    t: f64,
) -> Result<f64> {
    if params.nu != 1.0 {
        return Err(Error::domain(format!(
            "residual_prop2_space requires nu = 1, got {}",
            params.nu
        )));
    }
    let n = integer_inverse_eta(params.eta)?;
    let lat = LatticeFunction::compound_lattice(params, jumps, k, DEFAULT_SERIES_ORDER)?;
    let lhs = rl_integer_derivative(lat.series_at(k), n, t)?;
    let qk = lat.series_at(k).eval(t);
    let mut rhs = params.s_lambda() * qk;
    for i in 0..params.m() {
        let mut inner = 0.0;
        for j in 1..=k.get(i) {
            let shifted = k.shift_down(i, j).expect("j <= k_i");
            inner += jumps.pmf(i, j) * lat.series_at(&shifted).eval(t);
        }
        rhs -= params.lambda[i] * inner;
    }
    Ok((lhs - rhs).abs())
}

/// Governing equation of the general-subordinator process at ν = 1, checked
/// for every k <= kmax in one pass:
/// |d/dt p_k − Σ_{0≺j≤k} p_{k−j} Πλ^{j_i}/j_i! ∫r^{|j|}e^{−rs}ρ_f(dr)
///   + f(s) p_k|.
pub fn residual_ot_table(
    params: &ModelParams,
    f: &BernsteinFamily,
    kmax: &MultiIndex,
    t: f64,
) -> Result<PmfTable> {
    let h = 1e-4;
    if t <= h {
        return Err(Error::domain("residual_ot: t must exceed the step 1e-4"));
    }
    let p_minus = pmf_ot(params, f, 1.0, t - h, kmax)?;
    let p_mid = pmf_ot(params, f, 1.0, t, kmax)?;
    let p_plus = pmf_ot(params, f, 1.0, t + h, kmax)?;

    let s = params.s_lambda();
    let f_s = f.eval(s);
    let mut rates = vec![0.0; kmax.total() as usize + 1];
    for (n, rate) in rates.iter_mut().enumerate().skip(1) {
        *rate = f.levy_moment_rate(n as u32, s)?;
    }

    let values = iter_box(kmax)
        .map(|k| {
            let dpdt = (p_plus.get(&k) - p_minus.get(&k)) / (2.0 * h);
            let mut rhs = -f_s * p_mid.get(&k);
            for j in iter_box(&k) {
                if j.is_zero() {
                    continue;
                }
                let km = k.checked_sub(&j).expect("j <= k");
                let mut w = 1.0;
                for i in 0..params.m() {
                    let ji = j.get(i);
                    let mut fact = 1.0;
                    for v in 1..=ji {
                        fact *= v as f64;
                    }
                    w *= params.lambda[i].powi(ji as i32) / fact;
                }
                rhs += p_mid.get(&km) * w * rates[j.total() as usize];
            }
            (dpdt - rhs).abs()
        })
        .collect();
    Ok(PmfTable::new(kmax.clone(), values))
}

/// Single-k version of [`residual_ot_table`].
pub fn residual_ot(
    params: &ModelParams,
    f: &BernsteinFamily,
    k: &MultiIndex,
    t: f64,
) -> Result<f64> {
    Ok(residual_ot_table(params, f, k, t)?.get(k))
}

/// Which of the two Pólya-Aeppli systems to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaVariant {
    Time,
    Space,
}

/// Residual of the Pólya-Aeppli system with geometric jump parameters
/// `alphas`: the equation couples ^CD^ν (or the RL derivative) of q_k and of
/// its first shifts with (λ_iα̃_i + s(λ)(1−α̃_i)) transport terms.
pub fn residual_pa(
    params: &ModelParams,
    alphas: &[f64],
    k: &MultiIndex,
    t: f64,
    variant: PaVariant,
) -> Result<f64> {
    if alphas.len() != params.m() {
        return Err(Error::domain("residual_pa: alphas dimension mismatch"));
    }
    if alphas.iter().any(|&a| !(a > 0.0 && a <= 1.0)) {
        return Err(Error::domain(format!(
            "residual_pa: alphas must lie in (0,1], got {alphas:?}"
        )));
    }
    let jumps = JumpDistribution::new(
        alphas.iter().map(|&a| JumpFamily::Geometric { alpha: a }).collect(),
        params,
    )?;
    let s = params.s_lambda();
    let lat = LatticeFunction::compound_lattice(params, &jumps, k, DEFAULT_SERIES_ORDER)?;

    // the fractional-derivative route of the variant
    let deriv = |kk: &MultiIndex| -> Result<f64> {
        match variant {
            PaVariant::Time => {
                if params.eta != 1.0 {
                    return Err(Error::domain(format!(
                        "residual_pa(time) requires eta = 1, got {}",
                        params.eta
                    )));
                }
                Ok(caputo_termwise(lat.series_at(kk)).eval(t))
            }
            PaVariant::Space => {
                if params.nu != 1.0 {
                    return Err(Error::domain(format!(
                        "residual_pa(space) requires nu = 1, got {}",
                        params.nu
                    )));
                }
                let n = integer_inverse_eta(params.eta)?;
                rl_integer_derivative(lat.series_at(kk), n, t)
            }
        }
    };
    // the space system is the time system with flipped right-hand signs
    let rhs_sign = match variant {
        PaVariant::Time => 1.0,
        PaVariant::Space => -1.0,
    };

    let mut lhs = deriv(k)?;
    for i in 0..params.m() {
        let factor = 1.0 - alphas[i];
        if factor == 0.0 {
            continue;
        }
        if let Some(kk) = k.shift_down(i, 1) {
            lhs -= factor * deriv(&kk)?;
        }
    }

    let qk = lat.series_at(k).eval(t);
    let mut rhs = rhs_sign * -s * qk;
    for i in 0..params.m() {
        if let Some(kk) = k.shift_down(i, 1) {
            rhs += rhs_sign * (params.lambda[i] * alphas[i] + s * (1.0 - alphas[i]))
                * lat.series_at(&kk).eval(t);
        }
    }
    for i in 0..params.m() {
        let factor = 1.0 - alphas[i];
        if factor == 0.0 {
            continue;
        }
        for hh in 0..params.m() {
            if hh == i {
                continue;
            }
            let mut inner = 0.0;
            for j in 1..=k.get(hh) {
                let shifted = k.shift_down(hh, j).expect("j <= k_h");
                inner += (1.0 - alphas[hh]).powi(j as i32 - 1)
                    * alphas[hh]
                    * lat.series_at(&shifted).eval(t);
            }
            rhs -= rhs_sign * factor * params.lambda[hh] * inner;
        }
    }
    Ok((lhs - rhs).abs())
}

/// |p_k(t) − Π(−λ_i ∂_{λ_i})^{k_i} E_{ν,1}(−s(λ)^η t^ν)| with the derivative
/// representation evaluated by nested second-order central differences
/// (relative step 1e-3 per coordinate).
pub fn lambda_derivative_check(params: &ModelParams, k: &MultiIndex, t: f64) -> Result<f64> {
    if k.total() > 3 {
        return Err(Error::domain(
            "lambda_derivative_check: |k| <= 3 (nested finite differences lose accuracy beyond)",
        ));
    }
    let mut ops = Vec::new();
    for i in 0..params.m() {
        for _ in 0..k.get(i) {
            ops.push(i);
        }
    }
    let steps: Vec<f64> = params.lambda.iter().map(|&l| 1e-3 * l).collect();
    let eta = params.eta;
    let nu = params.nu;
    let tv = t.powf(nu);

    fn apply(
        ops: &[usize],
        lam: &mut Vec<f64>,
        steps: &[f64],
        eta: f64,
        nu: f64,
        tv: f64,
    ) -> Result<f64> {
        if ops.is_empty() {
            let s: f64 = lam.iter().sum();
            return mittag_leffler_real(nu, 1.0, -s.powf(eta) * tv);
        }
        let i = ops[0];
        let rest = &ops[1..];
        let center = lam[i];
        lam[i] = center + steps[i];
        let fp = apply(rest, lam, steps, eta, nu, tv)?;
        lam[i] = center - steps[i];
        let fm = apply(rest, lam, steps, eta, nu, tv)?;
        lam[i] = center;
        Ok(-center * (fp - fm) / (2.0 * steps[i]))
    }

    let mut lam = params.lambda.clone();
    let derived = apply(&ops, &mut lam, &steps, eta, nu, tv)?;
    let direct = pmf(params, k, t, PmfRoute::Series)?;
    Ok((direct - derived).abs())
}

/// pgf-level Caputo check: |^CD^ν G^{η,ν}(u;·)(t) + (Σλ_i(1−u_i))^η G(u;t)|,
/// with the left side differentiated termwise on the t^ν-series of G.
pub fn pgf_caputo_residual(params: &ModelParams, u: &[f64], t: f64) -> Result<f64> {
    if u.len() != params.m() || u.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
        return Err(Error::domain("pgf_caputo_residual: u must be in [0,1]^m"));
    }
    let c: f64 = params
        .lambda
        .iter()
        .zip(u)
        .map(|(&l, &ui)| l * (1.0 - ui))
        .sum::<f64>()
        .powf(params.eta);
    if c == 0.0 {
        return Ok(0.0);
    }
    let nu = params.nu;
    let mut coeffs = Vec::with_capacity(DEFAULT_SERIES_ORDER + 1);
    for r in 0..=DEFAULT_SERIES_ORDER {
        let rf = r as f64;
        let ln_c = rf * c.ln() - ln_abs_gamma(nu * rf + 1.0).0;
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        coeffs.push(sign * ln_c.exp());
    }
    let g = crate::model::PowerSeriesTNu::new(nu, coeffs)?;
    let lhs = caputo_termwise(&g).eval(t);
    Ok((lhs + c * g.eval(t)).abs())
}

/// Exponential-rule consistency of the space-fractional pgf equation for
/// arbitrary η: G^{η,1}(u;t) = e^{−ct} with c = (Σλ_i(1−u_i))^η, and
/// d^{1/η}/d(−t)^{1/η} e^{−ct} = c^{1/η} e^{−ct}, so the equation holds iff
/// c^{1/η} reproduces Σλ_i(1−u_i). Returns |c^{1/η} − Σλ_i(1−u_i)|·G.
pub fn rl_exponential_pgf_residual(params: &ModelParams, u: &[f64], t: f64) -> Result<f64> {
    if u.len() != params.m() || u.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
        return Err(Error::domain("rl_exponential_pgf_residual: u in [0,1]^m"));
    }
    let base: f64 = params
        .lambda
        .iter()
        .zip(u)
        .map(|(&l, &ui)| l * (1.0 - ui))
        .sum();
    let c = base.powf(params.eta);
    let g = (-c * t).exp();
    Ok((c.powf(1.0 / params.eta) - base).abs() * g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_params() -> ModelParams {
        ModelParams::new(vec![1.0, 2.0], 0.7, 0.8).unwrap()
    }

    #[test]
    fn prop1_classical_corner() {
        let p = ModelParams::new(vec![1.0], 1.0, 1.0).unwrap();
        let r = residual_prop1(&p, &MultiIndex::new(vec![1]), 1.0).unwrap();
        assert!(r < 1e-10, "classical Poisson ODE residual {r}");
    }

    #[test]
    fn prop1_zero_state_eigenfunction() {
        let p = default_params();
        let r = residual_prop1(&p, &MultiIndex::zeros(2), 1.0).unwrap();
        assert!(r < 1e-8, "{r}");
    }

    #[test]
    fn prop1_fractional_example() {
        let p = default_params();
        let r = residual_prop1(&p, &MultiIndex::new(vec![1, 1]), 1.0).unwrap();
        assert!(r < 1e-7, "{r}");
    }

    #[test]
    fn prop2_time_zero_state() {
        let p = ModelParams::new(vec![1.0, 2.0], 1.0, 0.8).unwrap();
        let jumps = JumpDistribution::new(
            vec![
                JumpFamily::Geometric { alpha: 0.4 },
                JumpFamily::Geometric { alpha: 0.6 },
            ],
            &p,
        )
        .unwrap();
        let r = residual_prop2_time(&p, &jumps, &MultiIndex::zeros(2), 1.0).unwrap();
        assert!(r < 1e-8, "{r}");
        let r = residual_prop2_time(&p, &jumps, &MultiIndex::new(vec![2, 1]), 1.0).unwrap();
        assert!(r < 1e-7, "{r}");
    }

    #[test]
    fn prop2_space_examples() {
        // η = 1/2, k = 0, m = 1, λ = 1, unit jumps
        let p = ModelParams::new(vec![1.0], 0.5, 1.0).unwrap();
        let jumps = JumpDistribution::unit(1);
        let r = residual_prop2_space(&p, &jumps, &MultiIndex::zeros(1), 1.0).unwrap();
        assert!(r < 1e-6, "{r}");
        // η = 1 reduces to the classical ODE with the (−1)^1 sign
        let p = ModelParams::new(vec![1.0, 2.0], 1.0, 1.0).unwrap();
        let jumps = JumpDistribution::unit(2);
        let r = residual_prop2_space(&p, &jumps, &MultiIndex::new(vec![1, 1]), 1.0).unwrap();
        assert!(r < 1e-10, "{r}");
        // η = 1/3
        let p = ModelParams::new(vec![1.0, 2.0], 1.0 / 3.0, 1.0).unwrap();
        let jumps = JumpDistribution::unit(2);
        let r = residual_prop2_space(&p, &jumps, &MultiIndex::new(vec![1, 0]), 0.5).unwrap();
        assert!(r < 1e-6, "{r}");
    }

    #[test]
    fn prop2_space_rejects_non_integer_inverse() {
        let p = ModelParams::new(vec![1.0], 0.7, 1.0).unwrap();
        let jumps = JumpDistribution::unit(1);
        assert!(residual_prop2_space(&p, &jumps, &MultiIndex::zeros(1), 1.0).is_err());
    }

    #[test]
    fn ot_zero_state_exponential() {
        // k = 0: |d/dt p_0 + f(s) p_0| with p_0 = e^{−tf(s)}
        let p = ModelParams::new(vec![1.0], 1.0, 1.0).unwrap();
        let f = BernsteinFamily::new_gamma(1.0, 1.0).unwrap();
        let r = residual_ot(&p, &f, &MultiIndex::zeros(1), 1.0).unwrap();
        assert!(r < 1e-6, "{r}");
    }

    #[test]
    fn ot_gamma_family() {
        let p = ModelParams::new(vec![1.0], 1.0, 1.0).unwrap();
        let f = BernsteinFamily::new_gamma(1.0, 1.0).unwrap();
        let r = residual_ot(&p, &f, &MultiIndex::new(vec![2]), 1.0).unwrap();
        assert!(r < 1e-5, "{r}");
    }

    #[test]
    fn ot_stable_agrees_with_prop1_at_nu_one() {
        let p = ModelParams::new(vec![1.0, 2.0], 0.7, 1.0).unwrap();
        let f = BernsteinFamily::new_stable(0.7).unwrap();
        let k = MultiIndex::new(vec![1, 1]);
        let r_ot = residual_ot(&p, &f, &k, 1.0).unwrap();
        let r_p1 = residual_prop1(&p, &k, 1.0).unwrap();
        assert!(r_ot < 1e-5 && r_p1 < 1e-7, "{r_ot} vs {r_p1}");
        assert!((r_ot - r_p1).abs() < 1e-5);
    }

    #[test]
    fn pa_time_residuals() {
        let p = ModelParams::new(vec![1.0, 2.0], 1.0, 0.8).unwrap();
        let k = MultiIndex::new(vec![2, 1]);
        let r = residual_pa(&p, &[0.4, 0.7], &k, 1.0, PaVariant::Time).unwrap();
        assert!(r < 1e-7, "{r}");
        let r0 = residual_pa(&p, &[0.4, 0.7], &MultiIndex::zeros(2), 1.0, PaVariant::Time)
            .unwrap();
        assert!(r0 < 1e-8, "{r0}");
    }

    #[test]
    fn pa_alpha_one_reduces_to_corollary_bitwise() {
        let p = ModelParams::new(vec![1.0, 2.0], 1.0, 0.8).unwrap();
        let jumps = JumpDistribution::unit(2);
        for k in iter_box(&MultiIndex::new(vec![2, 2])) {
            let pa = residual_pa(&p, &[1.0, 1.0], &k, 1.0, PaVariant::Time).unwrap();
            let cor = residual_prop2_time(&p, &jumps, &k, 1.0).unwrap();
            assert_eq!(pa.to_bits(), cor.to_bits(), "k = {k}");
        }
    }

    #[test]
    fn pa_space_variant() {
        let p = ModelParams::new(vec![1.0, 2.0], 0.5, 1.0).unwrap();
        let k = MultiIndex::new(vec![2, 1]);
        let r = residual_pa(&p, &[0.4, 0.7], &k, 1.0, PaVariant::Space).unwrap();
        assert!(r < 1e-6, "{r}");
    }

    #[test]
    fn lambda_derivative_exact_cases() {
        // k = 0: no differentiation at all
        let p = default_params();
        let r = lambda_derivative_check(&p, &MultiIndex::zeros(2), 1.0).unwrap();
        assert!(r < 1e-12, "{r}");
        // classical: (−λ∂_λ) e^{−λt} = λt e^{−λt} is the Poisson pmf at k=1
        let p = ModelParams::new(vec![1.0], 1.0, 1.0).unwrap();
        let r = lambda_derivative_check(&p, &MultiIndex::new(vec![1]), 1.0).unwrap();
        assert!(r < 1e-7, "{r}");
    }

    #[test]
    fn lambda_derivative_fractional() {
        let p = default_params();
        let r = lambda_derivative_check(&p, &MultiIndex::new(vec![1, 1]), 1.0).unwrap();
        assert!(r < 1e-4, "{r}");
        assert!(lambda_derivative_check(&p, &MultiIndex::new(vec![2, 2]), 1.0).is_err());
    }

    #[test]
    fn pgf_caputo_identity() {
        let p = default_params();
        let r = pgf_caputo_residual(&p, &[0.5, 0.5], 1.0).unwrap();
        assert!(r < 1e-7, "{r}");
    }

    #[test]
    fn exponential_rule_arbitrary_eta() {
        for &eta in &[0.3, 0.7] {
            let p = ModelParams::new(vec![1.0, 2.0], eta, 1.0).unwrap();
            let r = rl_exponential_pgf_residual(&p, &[0.5, 0.5], 1.0).unwrap();
            assert!(r < 1e-8, "eta = {eta}: {r}");
        }
    }
}
