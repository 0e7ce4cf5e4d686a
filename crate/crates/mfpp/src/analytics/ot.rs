//! State probabilities of the general-subordinator process N^{f,ν}.
//!
//! No series analogue of the stable case is available for a general
//! Bernstein function, so the table {p_k^{f,ν}(t) : k <= kmax} is extracted
//! from the pgf G^{f,ν}(u;t) = E_{ν,1}(−t^ν f̃_m(λ;u)) by damped Fourier
//! inversion (see [`super::invert`]).

use super::invert::invert_pgf;
use super::pgf::{pgf_complex, pgf_ot_complex};
use super::table::PmfTable;
use crate::error::{Error, Result};
use crate::model::{BernsteinFamily, ModelParams, MultiIndex};

/// Per-entry accuracy of the inverted tables.
pub const PMF_OT_TOL: f64 = 1e-8;
/// The table ops stay within |kmax| <= 12.
pub const KMAX_TOTAL_LIMIT: u64 = 12;

fn check_kmax(params: &ModelParams, kmax: &MultiIndex) -> Result<()> {
    if kmax.dim() != params.m() {
        return Err(Error::domain("pmf table: kmax has wrong dimension"));
    }
    if kmax.total() > KMAX_TOTAL_LIMIT {
        return Err(Error::domain(format!(
            "pmf table: |kmax| = {} exceeds the supported bound {}",
            kmax.total(),
            KMAX_TOTAL_LIMIT
        )));
    }
    Ok(())
}

fn indicator_table(kmax: &MultiIndex) -> PmfTable {
    PmfTable::from_fn(kmax, |k| if k.is_zero() { 1.0 } else { 0.0 })
}

/// p_k^{f,ν}(t) for all k <= kmax, each within [`PMF_OT_TOL`] of the true
/// probability.
pub fn pmf_ot(
    params: &ModelParams,
    f: &BernsteinFamily,
    nu: f64,
    t: f64,
    kmax: &MultiIndex,
) -> Result<PmfTable> {
    check_kmax(params, kmax)?;
    if !(nu > 0.0 && nu <= 1.0) {
        return Err(Error::domain(format!("pmf_ot: nu must be in (0,1], got {nu}")));
    }
    if t == 0.0 {
        return Ok(indicator_table(kmax));
    }
    let pgf = |u: &[num_complex::Complex64]| pgf_ot_complex(params, f, nu, u, t);
    let (table, _residual) = invert_pgf(&pgf, kmax, PMF_OT_TOL)?;
    Ok(table)
}

/// Same machinery for the plain process (η from `params`); used where the
/// alternating series of the direct route loses too many digits.
pub fn pmf_table_via_inversion(
    params: &ModelParams,
    t: f64,
    kmax: &MultiIndex,
    target: f64,
) -> Result<(PmfTable, f64)> {
    if kmax.dim() != params.m() {
        return Err(Error::domain("pmf table: kmax has wrong dimension"));
    }
    if t == 0.0 {
        return Ok((indicator_table(kmax), 0.0));
    }
    let pgf = |u: &[num_complex::Complex64]| pgf_complex(params, u, t);
    invert_pgf(&pgf, kmax, target)
}
