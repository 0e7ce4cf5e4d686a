//! Coefficient extraction from probability generating functions.
//!
//! p_k is read off G(u) = Σ p_k u^k by a discrete Fourier inversion on a
//! damped polydisc: per coordinate, u_i runs over N_i-th roots of unity
//! scaled by a radius ρ < 1. The damping turns the aliasing sum
//! Σ_r p_{k+rN} into Σ_r p_{k+rN} ρ^{rN}, which is what makes the scheme
//! usable for the heavy-tailed laws here (with ρ = 1 the aliased tail mass
//! of a stable-subordinated process decays only polynomially in N). The
//! price is a ρ^{−|k|} amplification of roundoff, so ρ is tied to the grid
//! size; every table is computed on the base grid and on the doubled grid,
//! and the difference is reported as the residual estimate.

use super::table::PmfTable;
use crate::error::{Error, Result};
use crate::model::{iter_box, MultiIndex};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Smallest grid used per coordinate regardless of the requested box.
const MIN_GRID: usize = 64;

fn invert_once<F>(
    pgf: &F,
    kmax: &MultiIndex,
    grid: &[usize],
    rho: f64,
) -> Result<(Vec<f64>, f64)>
where
    F: Fn(&[Complex64]) -> Result<Complex64>,
{
    let m = kmax.dim();
    // evaluate G on the product grid, row-major with last axis fastest
    let total: usize = grid.iter().product();
    let mut data = Vec::with_capacity(total);
    let mut u = vec![Complex64::new(0.0, 0.0); m];
    let mut idx = vec![0usize; m];
    for _ in 0..total {
        for (a, &j) in idx.iter().enumerate() {
            let angle = TAU * j as f64 / grid[a] as f64;
            u[a] = Complex64::from_polar(rho, angle);
        }
        data.push(pgf(&u)?);
        // odometer increment, last axis fastest
        for a in (0..m).rev() {
            idx[a] += 1;
            if idx[a] < grid[a] {
                break;
            }
            idx[a] = 0;
        }
    }

    // transform one axis at a time: extent N_a -> kmax_a + 1
    let mut dims: Vec<usize> = grid.to_vec();
    for a in 0..m {
        let n = dims[a];
        let k_out = kmax.get(a) as usize + 1;
        let inner: usize = dims[a + 1..].iter().product();
        let outer: usize = dims[..a].iter().product();
        let mut next = vec![Complex64::new(0.0, 0.0); outer * k_out * inner];
        // twiddle factors e^{-2πi jk/N}
        let tw: Vec<Complex64> = (0..n)
            .map(|jk| Complex64::from_polar(1.0, -TAU * jk as f64 / n as f64))
            .collect();
        for o in 0..outer {
            for k in 0..k_out {
                for r in 0..inner {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for j in 0..n {
                        acc += data[(o * n + j) * inner + r] * tw[(j * k) % n];
                    }
                    next[(o * k_out + k) * inner + r] = acc / n as f64;
                }
            }
        }
        data = next;
        dims[a] = k_out;
    }

    // undo the radial damping and split real part / imaginary leakage
    let mut values = Vec::with_capacity(data.len());
    let mut max_im: f64 = 0.0;
    for (k, c) in iter_box(kmax).zip(&data) {
        let boost = rho.powi(-(k.total() as i32));
        values.push(c.re * boost);
        max_im = max_im.max((c.im * boost).abs());
    }
    Ok((values, max_im))
}

/// Invert a pgf into the table {p_k : k <= kmax}. Returns the table together
/// with a residual estimate (grid-doubling difference plus imaginary
/// leakage); `target` is the accuracy the caller needs.
pub fn invert_pgf<F>(pgf: &F, kmax: &MultiIndex, target: f64) -> Result<(PmfTable, f64)>
where
    F: Fn(&[Complex64]) -> Result<Complex64>,
{
    let base: Vec<usize> = kmax
        .as_slice()
        .iter()
        .map(|&k| (2 * (k as usize + 1)).max(MIN_GRID))
        .collect();
    let fine: Vec<usize> = base.iter().map(|&n| 2 * n).collect();
    let n_min = *base.iter().min().unwrap();
    // aliasing from beyond the base grid is suppressed to ~1e-12
    let rho = 10f64.powf(-12.0 / n_min as f64);

    let (coarse, im_c) = invert_once(pgf, kmax, &base, rho)?;
    let (finer, im_f) = invert_once(pgf, kmax, &fine, rho)?;
    let mut residual = im_c.max(im_f);
    for (a, b) in coarse.iter().zip(&finer) {
        residual = residual.max((a - b).abs());
    }
    if residual > target {
        return Err(Error::non_convergence("pgf inversion", residual, target));
    }
    Ok((PmfTable::new(kmax.clone(), finer), residual))
}
