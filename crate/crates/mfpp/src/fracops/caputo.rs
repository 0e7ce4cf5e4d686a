//! Caputo fractional derivative: termwise power rule on t^ν-series and an
//! independent quadrature route used as its oracle.

use crate::error::{Error, Result};
use crate::fracops::quad::adaptive_simpson;
use crate::model::PowerSeriesTNu;
use crate::specfun::gamma;

/// ^CD^ν Σ c_r t^{νr} = Σ_{r>=1} c_r Γ(νr+1)/Γ(ν(r−1)+1) t^{ν(r−1)}.
/// ν = 1 reduces to ordinary termwise d/dt.
pub fn caputo_termwise(series: &PowerSeriesTNu) -> PowerSeriesTNu {
    let nu = series.nu();
    let r_max = series.order();
    if r_max == 0 {
        return PowerSeriesTNu::zero(nu, 0);
    }
    let mut coeffs = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        let rf = r as f64;
        let hi = nu * rf + 1.0;
        let lo = nu * (rf - 1.0) + 1.0;
        let ratio = if hi <= 170.0 {
            gamma(hi).unwrap() / gamma(lo).unwrap()
        } else {
            (crate::specfun::ln_abs_gamma(hi).0 - crate::specfun::ln_abs_gamma(lo).0).exp()
        };
        coeffs.push(series.coeff(r) * ratio);
    }
    PowerSeriesTNu::new(nu, coeffs).unwrap()
}

/// ^CD^ν f(t) = (1/Γ(1−ν)) ∫_0^t (t−s)^{−ν} f'(s) ds for ν ∈ (0,1), by
/// quadrature with singularity-absorbing substitutions.
///
/// The integral is split at s = t/2. On [t/2, t] the kernel singularity is
/// removed by (t−s) = (t/2) w^{1/(1−ν)}. On [0, t/2] the *derivative* of a
/// t^ν-type function blows up like s^{ν−1}, which s = (t/2) v^{1/ν}
/// linearizes: f(s(v)) is then smooth in v and f'(s) ds = (df/dv) dv.
/// Derivatives are taken by second-order central differences (relative step
/// 1e-5), so `fn` must be evaluable slightly beyond t.
pub fn caputo_quadrature<F: Fn(f64) -> f64>(f: &F, nu: f64, t: f64) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::domain(format!(
            "caputo_quadrature: nu must be in (0,1), got {nu}"
        )));
    }
    if !(t > 0.0) {
        return Err(Error::domain(format!(
            "caputo_quadrature: t must be > 0, got {t}"
        )));
    }
    let tol = 1e-8;

    // left piece: s = (t/2) v^{1/ν}, integrand (t−s)^{−ν} df/dv
    let h_v = 1e-5;
    let s_of_v = move |v: f64| 0.5 * t * v.powf(1.0 / nu);
    let left_integrand = move |v: f64| {
        let df = if v < h_v {
            (f(s_of_v(v + h_v)) - f(s_of_v(v))) / h_v
        } else {
            (f(s_of_v(v + h_v)) - f(s_of_v(v - h_v))) / (2.0 * h_v)
        };
        (t - s_of_v(v)).powf(-nu) * df
    };
    let left = adaptive_simpson(&left_integrand, 0.0, 1.0, tol)?;

    // right piece: (t−s) = (t/2) w^{1/(1−ν)}, kernel absorbed exactly
    let h_s = 1e-5 * t;
    let right_scale = (0.5 * t).powf(1.0 - nu) / (1.0 - nu);
    let right_integrand = move |w: f64| {
        let s = t - 0.5 * t * w.powf(1.0 / (1.0 - nu));
        (f(s + h_s) - f(s - h_s)) / (2.0 * h_s) * right_scale
    };
    let right = adaptive_simpson(&right_integrand, 0.0, 1.0, tol)?;

    Ok((left + right) / gamma(1.0 - nu)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::mittag_leffler_real;

    #[test]
    fn termwise_constant_is_zero() {
        let s = PowerSeriesTNu::new(0.7, vec![4.2]).unwrap();
        let d = caputo_termwise(&s);
        assert_eq!(d.coeffs(), &[0.0]);
    }

    #[test]
    fn termwise_nu_one_is_ordinary_derivative() {
        // d/dt (1 + 2t + 3t² + 4t³) = 2 + 6t + 12t²
        let s = PowerSeriesTNu::new(1.0, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let d = caputo_termwise(&s);
        assert_eq!(d.coeffs(), &[2.0, 6.0, 12.0]);
    }

    #[test]
    fn quadrature_constant_and_power_rule() {
        let v = caputo_quadrature(&|_s: f64| 3.7, 0.5, 1.3).unwrap();
        assert!(v.abs() < 1e-8);
        // ^CD^{1/2} t = t^{1/2}/Γ(3/2)
        let t = 0.8f64;
        let v = caputo_quadrature(&|s: f64| s, 0.5, t).unwrap();
        let expect = t.sqrt() / gamma(1.5).unwrap();
        assert!((v - expect).abs() < 1e-6, "{v} vs {expect}");
    }

    #[test]
    fn mittag_leffler_eigenfunction() {
        // ^CD^ν E_ν(−a t^ν) = −a E_ν(−a t^ν)
        let a = 2.0;
        let nu = 0.7;
        let t = 1.0;
        let f = move |s: f64| mittag_leffler_real(nu, 1.0, -a * s.powf(nu)).unwrap();
        let lhs = caputo_quadrature(&f, nu, t).unwrap();
        let rhs = -a * f(t);
        assert!((lhs - rhs).abs() < 1e-5, "{lhs} vs {rhs}");
    }

    #[test]
    fn termwise_matches_quadrature_on_series() {
        // seeded pseudo-random series with decaying coefficients
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for trial in 0..20 {
            let nu = 0.35 + 0.6 * (trial as f64 / 19.0);
            let t = 0.4 + 0.05 * trial as f64;
            let coeffs: Vec<f64> = (0..40)
                .map(|r| next() / (1.0 + r as f64 * r as f64))
                .collect();
            let series = PowerSeriesTNu::new(nu, coeffs).unwrap();
            let termwise = caputo_termwise(&series).eval(t);
            let f = |s: f64| series.eval(s);
            let quad = caputo_quadrature(&f, nu, t).unwrap();
            assert!(
                (termwise - quad).abs() < 1e-5,
                "trial {trial} nu={nu} t={t}: {termwise} vs {quad}"
            );
        }
    }
}
