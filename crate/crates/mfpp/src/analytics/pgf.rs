//! Probability generating functions and the f̃_m functional.

use crate::error::{Error, Result};
use crate::model::{BernsteinFamily, JumpDistribution, ModelParams};
use crate::specfun::{mittag_leffler, mittag_leffler_real};
use num_complex::Complex64;

fn check_unit_cube(u: &[f64], m: usize, what: &str) -> Result<()> {
    if u.len() != m {
        return Err(Error::domain(format!("{what}: u has wrong dimension")));
    }
    if u.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
        return Err(Error::domain(format!(
            "{what}: u must lie in [0,1]^m, got {u:?}"
        )));
    }
    Ok(())
}

/// G^{η,ν}(u; t) = E_{ν,1}(−(Σλ_i(1−u_i))^η t^ν).
pub fn pgf(params: &ModelParams, u: &[f64], t: f64) -> Result<f64> {
    check_unit_cube(u, params.m(), "pgf")?;
    let arg: f64 = params
        .lambda
        .iter()
        .zip(u)
        .map(|(&l, &ui)| l * (1.0 - ui))
        .sum();
    mittag_leffler_real(params.nu, 1.0, -arg.powf(params.eta) * t.powf(params.nu))
}

/// G_C^{η,ν}(u; t) = E_{ν,1}(−(Σλ_i(1−G_i(u_i)))^η t^ν) for the compound
/// process, with G_i the jump-size pgfs.
pub fn compound_pgf(
    params: &ModelParams,
    jumps: &JumpDistribution,
    u: &[f64],
    t: f64,
) -> Result<f64> {
    check_unit_cube(u, params.m(), "compound_pgf")?;
    let arg: f64 = params
        .lambda
        .iter()
        .enumerate()
        .zip(u)
        .map(|((i, &l), &ui)| l * (1.0 - jumps.pgf(i, ui)))
        .sum();
    mittag_leffler_real(params.nu, 1.0, -arg.powf(params.eta) * t.powf(params.nu))
}

/// f̃_m(λ; u) = f(Σλ_i(1−u_i)).
///
/// The defining integral ∫(1 − e^{−s(λ)r} ΣΠ(λ_iu_ir)^{j_i}/j_i!) ρ_f(dr)
/// collapses because the inner sum is exactly e^{rΣλ_iu_i}.
pub fn f_tilde(params: &ModelParams, f: &BernsteinFamily, u: &[f64]) -> Result<f64> {
    check_unit_cube(u, params.m(), "f_tilde")?;
    let arg: f64 = params
        .lambda
        .iter()
        .zip(u)
        .map(|(&l, &ui)| l * (1.0 - ui))
        .sum();
    Ok(f.eval(arg))
}

/// G^{f,ν}(u; t) = E_{ν,1}(−t^ν f̃_m(λ; u)); exponential when ν = 1.
pub fn pgf_ot(
    params: &ModelParams,
    f: &BernsteinFamily,
    nu: f64,
    u: &[f64],
    t: f64,
) -> Result<f64> {
    check_unit_cube(u, params.m(), "pgf_ot")?;
    if !(nu > 0.0 && nu <= 1.0) {
        return Err(Error::domain(format!("pgf_ot: nu must be in (0,1], got {nu}")));
    }
    let ft = f_tilde(params, f, u)?;
    if nu == 1.0 {
        Ok((-t * ft).exp())
    } else {
        mittag_leffler_real(nu, 1.0, -t.powf(nu) * ft)
    }
}

/// Plain-process pgf at complex arguments (the Fourier side used by the
/// coefficient-inversion machinery). Principal branch for the η-power.
pub fn pgf_complex(params: &ModelParams, u: &[Complex64], t: f64) -> Result<Complex64> {
    let arg: Complex64 = params
        .lambda
        .iter()
        .zip(u)
        .map(|(&l, &ui)| (Complex64::new(1.0, 0.0) - ui) * l)
        .sum();
    let powered = if params.eta == 1.0 {
        arg
    } else {
        arg.powf(params.eta)
    };
    if params.nu == 1.0 {
        Ok((-t * powered).exp())
    } else {
        mittag_leffler(params.nu, 1.0, -t.powf(params.nu) * powered)
    }
}

/// General-subordinator pgf at complex arguments.
pub fn pgf_ot_complex(
    params: &ModelParams,
    f: &BernsteinFamily,
    nu: f64,
    u: &[Complex64],
    t: f64,
) -> Result<Complex64> {
    let arg: Complex64 = params
        .lambda
        .iter()
        .zip(u)
        .map(|(&l, &ui)| (Complex64::new(1.0, 0.0) - ui) * l)
        .sum();
    let ft = f.eval_complex(arg);
    if nu == 1.0 {
        Ok((-t * ft).exp())
    } else {
        mittag_leffler(nu, 1.0, -t.powf(nu) * ft)
    }
}

/// Characteristic function of one coordinate:
/// E[e^{iuN_j^{η,ν}(t)}] = E_{ν,1}(−(λ_j(1−e^{iu}))^η t^ν).
pub fn char_fn_coordinate(params: &ModelParams, j: usize, u: f64, t: f64) -> Result<Complex64> {
    if j >= params.m() {
        return Err(Error::domain("char_fn_coordinate: coordinate out of range"));
    }
    let arg = (Complex64::new(1.0, 0.0) - Complex64::new(0.0, u).exp()) * params.lambda[j];
    let powered = if params.eta == 1.0 {
        arg
    } else {
        arg.powf(params.eta)
    };
    mittag_leffler(params.nu, 1.0, -t.powf(params.nu) * powered)
}
