//! Adaptive Simpson quadrature.

use crate::error::{Error, Result};

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    worst: &mut f64,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || depth == 0 {
        if depth == 0 {
            *worst = worst.max(delta.abs() / 15.0);
        }
        return left + right + delta / 15.0;
    }
    recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, worst)
        + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, worst)
}

/// ∫_a^b f with absolute tolerance `tol`; fails if the recursion bottoms out
/// before the local error estimates clear the target.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(b > a) {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    let mut worst = 0.0;
    let v = recurse(f, a, b, fa, fm, fb, whole, tol, 48, &mut worst);
    if worst > tol {
        return Err(Error::non_convergence("adaptive_simpson", worst, tol));
    }
    Ok(v)
}
