//! Covariance (η = 1) and codifference of the process coordinates.

use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::specfun::{gamma, mittag_leffler};
use num_complex::Complex64;

/// Z(ν) = (1/ν)(1/Γ(2ν) − 1/(νΓ²(ν))); nonnegative on (0,1], zero iff ν = 1.
pub fn z_factor(nu: f64) -> Result<f64> {
    if !(nu > 0.0 && nu <= 1.0) {
        return Err(Error::domain(format!("z_factor: nu must be in (0,1], got {nu}")));
    }
    let g2 = gamma(2.0 * nu)?;
    let g1 = gamma(nu)?;
    Ok((1.0 / g2 - 1.0 / (nu * g1 * g1)) / nu)
}

/// Cov(N_j^{1,ν}(t), N_h^{1,ν}(t)) =
///   1{j=h} λ_j t^ν/Γ(ν+1) + λ_j λ_h t^{2ν} Z(ν).
///
/// Finite only for η = 1; other η are rejected.
pub fn covariance(params: &ModelParams, j: usize, h: usize, t: f64) -> Result<f64> {
    if params.eta != 1.0 {
        return Err(Error::domain(format!(
            "covariance requires eta = 1 (infinite otherwise), got {}",
            params.eta
        )));
    }
    if j >= params.m() || h >= params.m() {
        return Err(Error::domain("covariance: coordinate out of range"));
    }
    let nu = params.nu;
    let tv = t.powf(nu);
    let diag = if j == h {
        params.lambda[j] * tv / gamma(nu + 1.0)?
    } else {
        0.0
    };
    Ok(diag + params.lambda[j] * params.lambda[h] * tv * tv * z_factor(nu)?)
}

/// Codifference τ(N_j^{η,ν}(t), N_h^{η,ν}(t)):
///   1{j≠h} log E_{ν,1}(−(λ_j(1−e^i) + λ_h(1−e^{−i}))^η t^ν)
///   − log E_{ν,1}(−(λ_j(1−e^i))^η t^ν) − log E_{ν,1}(−(λ_h(1−e^{−i}))^η t^ν),
/// principal branches throughout.
pub fn codifference(params: &ModelParams, j: usize, h: usize, t: f64) -> Result<Complex64> {
    if j >= params.m() || h >= params.m() {
        return Err(Error::domain("codifference: coordinate out of range"));
    }
    if t == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let eta = params.eta;
    let nu = params.nu;
    let tv = t.powf(nu);
    let e_i = Complex64::new(0.0, 1.0).exp();
    let e_mi = Complex64::new(0.0, -1.0).exp();
    let one = Complex64::new(1.0, 0.0);
    let a = (one - e_i) * params.lambda[j];
    let b = (one - e_mi) * params.lambda[h];

    let log_ml = |w: Complex64| -> Result<Complex64> {
        let powered = if eta == 1.0 { w } else { w.powf(eta) };
        Ok(mittag_leffler(nu, 1.0, -powered * tv)?.ln())
    };

    let cross = if j != h {
        log_ml(a + b)?
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(cross - log_ml(a)? - log_ml(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn z_vanishes_exactly_at_one() {
        assert_eq!(z_factor(1.0).unwrap(), 0.0);
    }

    #[test]
    fn z_half_closed_form() {
        // Z(1/2) = 2(1/Γ(1) − 2/Γ²(1/2)) = 2(1 − 2/π): Γ(1/2)² = π
        let expect = 2.0 * (1.0 - 2.0 / PI);
        assert!((z_factor(0.5).unwrap() - expect).abs() < 1e-14);
    }

    #[test]
    fn z_nonnegative_and_continuous_at_one() {
        for i in 1..=40 {
            let nu = i as f64 / 40.0;
            assert!(z_factor(nu).unwrap() >= 0.0, "nu = {nu}");
        }
        assert!(z_factor(0.999).unwrap() < 1e-2);
    }

    #[test]
    fn covariance_values() {
        // ν=1 off-diagonal vanishes; diagonal is the Poisson variance
        let p = ModelParams::new(vec![1.0, 2.0], 1.0, 1.0).unwrap();
        assert_eq!(covariance(&p, 0, 1, 1.7).unwrap(), 0.0);
        assert!((covariance(&p, 1, 1, 1.7).unwrap() - 2.0 * 1.7).abs() < 1e-14);
        // fractional clock: cross term λ_jλ_h Z(1/2)
        let p = ModelParams::new(vec![1.0, 2.0], 1.0, 0.5).unwrap();
        let expect = 2.0 * (2.0 * (1.0 - 2.0 / PI));
        assert!((covariance(&p, 0, 1, 1.0).unwrap() - expect).abs() < 1e-13);
    }

    #[test]
    fn covariance_needs_eta_one() {
        let p = ModelParams::new(vec![1.0, 2.0], 0.7, 0.8).unwrap();
        assert!(covariance(&p, 0, 1, 1.0).is_err());
    }

    #[test]
    fn codifference_at_zero_time() {
        let p = ModelParams::new(vec![1.0, 2.0], 0.7, 0.8).unwrap();
        let tau = codifference(&p, 0, 1, 0.0).unwrap();
        assert_eq!(tau, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn codifference_classical_oracle() {
        // η = ν = 1: log E_{1,1}(z) = z, so every term is linear in t and the
        // exponent algebra collapses. Independent reduction:
        //   j ≠ h: τ = 0; j = h: τ = λ_j t (2 − e^i − e^{−i}) = 2λ_j t (1 − cos 1).
        let p = ModelParams::new(vec![1.0, 1.0], 1.0, 1.0).unwrap();
        let t = 1.0;
        let tau = codifference(&p, 0, 1, t).unwrap();
        assert!(tau.norm() < 1e-10, "expected 0, got {tau}");
        let tau = codifference(&p, 0, 0, t).unwrap();
        let expect = 2.0 * (1.0 - 1.0f64.cos());
        assert!((tau.re - expect).abs() < 1e-10);
        assert!(tau.im.abs() < 1e-10);
    }

    #[test]
    fn codifference_same_coordinate_drops_cross_term() {
        let p = ModelParams::new(vec![1.3, 0.7], 0.7, 0.8).unwrap();
        let e_i = Complex64::new(0.0, 1.0).exp();
        let e_mi = Complex64::new(0.0, -1.0).exp();
        let one = Complex64::new(1.0, 0.0);
        let a = (one - e_i) * 1.3;
        let b = (one - e_mi) * 1.3;
        let t = 1.0f64;
        let lhs = codifference(&p, 0, 0, t).unwrap();
        let ml = |w: Complex64| {
            mittag_leffler(0.8, 1.0, -w.powf(0.7) * t.powf(0.8))
                .unwrap()
                .ln()
        };
        let rhs = -ml(a) - ml(b);
        assert!((lhs - rhs).norm() < 1e-13);
    }
}
