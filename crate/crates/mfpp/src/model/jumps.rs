//! Positive-integer jump-size distributions and their convolution powers.
//!
//! The three compound families are the geometric (Pólya-Aeppli process),
//! the Poisson-inverse-Gaussian sizes and the logarithmic sizes (negative
//! binomial process). PIG and logarithmic fix the Poisson intensity of
//! their coordinate; construction rejects any λ_i off the implied value.

use super::params::ModelParams;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

const TAIL_TOL: f64 = 1e-12;
const PIG_JMAX: usize = 400;
const PIG_TAIL_TOL: f64 = 1e-10;

/// Per-coordinate jump-size family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JumpFamily {
    /// Deterministic unit jumps: the compound process is the plain one.
    Unit,
    /// q̃_j = (1−α)^{j−1} α, j >= 1. λ unrestricted; α = 1 degenerates to unit.
    Geometric { alpha: f64 },
    /// Poisson inverse Gaussian sizes with shape β̃ and mean scale μ̃;
    /// requires λ = (μ̃/β̃)(√(1+2β̃) − 1).
    Pig { beta: f64, mu: f64 },
    /// q̃_j = −(1−α)^j / (j log α), j >= 1; requires λ = −log α.
    Logarithmic { alpha: f64 },
}

/// Jump-size distributions for all m coordinates, with truncated pmf tables
/// and a shared convolution-power cache.
#[derive(Debug)]
pub struct JumpDistribution {
    families: Vec<JumpFamily>,
    /// pmfs[i][j] = P(Y^i = j); index 0 is always 0.
    pmfs: Vec<Vec<f64>>,
    /// (coordinate, power) -> convolution pmf vector.
    cache: Arc<Mutex<HashMap<(usize, u32), Arc<Vec<f64>>>>>,
}

impl Clone for JumpDistribution {
    fn clone(&self) -> Self {
        JumpDistribution {
            families: self.families.clone(),
            pmfs: self.pmfs.clone(),
            cache: Arc::clone(&self.cache),
        }
    }
}

fn geometric_pmf(alpha: f64) -> Result<Vec<f64>> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(format!(
            "geometric jump parameter must be in (0,1], got {alpha}"
        )));
    }
    if alpha == 1.0 {
        return Ok(vec![0.0, 1.0]);
    }
    // tail after J terms is exactly (1−α)^J
    let jmax = ((TAIL_TOL.ln() / (1.0 - alpha).ln()).ceil() as usize).max(1);
    let mut pmf = vec![0.0; jmax + 1];
    let mut q = alpha;
    for j in 1..=jmax {
        pmf[j] = q;
        q *= 1.0 - alpha;
    }
    Ok(pmf)
}

fn logarithmic_pmf(alpha: f64) -> Result<Vec<f64>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "logarithmic jump parameter must be in (0,1), got {alpha}"
        )));
    }
    let log_alpha = alpha.ln();
    // tail bounded by the geometric series: Σ_{j>J} (1−α)^j/(j|log α|)
    //   <= (1−α)^{J+1} / ((J+1) |log α| α)
    let mut jmax = 1usize;
    loop {
        let bound = (1.0 - alpha).powi(jmax as i32 + 1)
            / ((jmax as f64 + 1.0) * log_alpha.abs() * alpha);
        if bound < TAIL_TOL || jmax > 100_000 {
            break;
        }
        jmax += 1;
    }
    let mut pmf = vec![0.0; jmax + 1];
    for (j, p) in pmf.iter_mut().enumerate().skip(1) {
        *p = -(1.0 - alpha).powi(j as i32) / (j as f64 * log_alpha);
    }
    Ok(pmf)
}

fn pig_pmf(beta: f64) -> Result<Vec<f64>> {
    if !(beta > 0.0) {
        return Err(Error::domain(format!(
            "PIG jump parameter beta must be > 0, got {beta}"
        )));
    }
    // q̃_j = C(j−3/2, j) x^j / ((1−x)^{1/2} − 1) with x = 2β/(2β+1).
    // Both C(j−3/2, j) and the denominator are negative, so the ratio is a
    // genuine pmf; the ratio q̃_{j+1}/q̃_j = x (j − 1/2)/(j + 1) keeps the
    // recursion in positive territory throughout.
    let x = 2.0 * beta / (2.0 * beta + 1.0);
    let denom = (1.0 - x).sqrt() - 1.0; // < 0
    let mut pmf = vec![0.0; PIG_JMAX + 1];
    let mut q = (-0.5) * x / denom; // j = 1
    let mut mass = 0.0;
    for j in 1..=PIG_JMAX {
        pmf[j] = q;
        mass += q;
        q *= x * (j as f64 - 0.5) / (j as f64 + 1.0);
    }
    if 1.0 - mass > PIG_TAIL_TOL {
        return Err(Error::domain(format!(
            "PIG jump pmf: tail mass {:.3e} at truncation {} exceeds {:.1e} (beta = {beta} too large)",
            1.0 - mass,
            PIG_JMAX,
            PIG_TAIL_TOL
        )));
    }
    Ok(pmf)
}

/// λ implied by a PIG or logarithmic family, if the family constrains it.
pub fn implied_lambda(family: &JumpFamily) -> Option<f64> {
    match *family {
        JumpFamily::Pig { beta, mu } => Some(mu / beta * ((1.0 + 2.0 * beta).sqrt() - 1.0)),
        JumpFamily::Logarithmic { alpha } => Some(-alpha.ln()),
        _ => None,
    }
}

impl JumpDistribution {
    /// All-unit jumps in dimension m.
    pub fn unit(m: usize) -> Self {
        JumpDistribution {
            families: vec![JumpFamily::Unit; m],
            pmfs: vec![vec![0.0, 1.0]; m],
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn new(families: Vec<JumpFamily>, params: &ModelParams) -> Result<Self> {
        if families.len() != params.m() {
            return Err(Error::domain(format!(
                "jump families: got {} families for dimension {}",
                families.len(),
                params.m()
            )));
        }
        let mut pmfs = Vec::with_capacity(families.len());
        for (i, fam) in families.iter().enumerate() {
            if let Some(implied) = implied_lambda(fam) {
                let given = params.lambda[i];
                if ((given - implied) / implied).abs() > 1e-12 {
                    return Err(Error::domain(format!(
                        "coordinate {i}: family {fam:?} implies lambda = {implied:.17}, got {given:.17}"
                    )));
                }
            }
            let pmf = match *fam {
                JumpFamily::Unit => vec![0.0, 1.0],
                JumpFamily::Geometric { alpha } => geometric_pmf(alpha)?,
                JumpFamily::Pig { beta, .. } => pig_pmf(beta)?,
                JumpFamily::Logarithmic { alpha } => logarithmic_pmf(alpha)?,
            };
            let mass: f64 = pmf.iter().sum();
            if (1.0 - mass).abs() > 1e-10 {
                return Err(Error::domain(format!(
                    "coordinate {i}: truncated jump pmf mass {mass} not within 1e-10 of 1"
                )));
            }
            pmfs.push(pmf);
        }
        Ok(JumpDistribution {
            families,
            pmfs,
            cache: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn dim(&self) -> usize {
        self.families.len()
    }

    pub fn families(&self) -> &[JumpFamily] {
        &self.families
    }

    /// True when every coordinate has deterministic unit jumps.
    pub fn is_unit(&self) -> bool {
        self.families
            .iter()
            .all(|f| matches!(f, JumpFamily::Unit) || matches!(f, JumpFamily::Geometric { alpha } if *alpha == 1.0))
    }

    /// P(Y^i = j) for j >= 1 (0 beyond the truncation).
    pub fn pmf(&self, i: usize, j: u64) -> f64 {
        let table = &self.pmfs[i];
        if j == 0 || j as usize >= table.len() {
            0.0
        } else {
            table[j as usize]
        }
    }

    /// Truncation bound: pmf(i, j) = 0 for j > jmax(i).
    pub fn jmax(&self, i: usize) -> u64 {
        (self.pmfs[i].len() - 1) as u64
    }

    /// G_i(u) = Σ_j u^j q̃_j.
    pub fn pgf(&self, i: usize, u: f64) -> f64 {
        // Horner from the top of the truncated table
        let table = &self.pmfs[i];
        let mut acc = 0.0;
        for &p in table.iter().rev() {
            acc = acc * u + p;
        }
        acc
    }

    /// Convolution-power vector of coordinate i: entry j is P(Y_1+...+Y_h = j).
    pub fn convolution_vector(&self, i: usize, h: u32) -> Arc<Vec<f64>> {
        if h == 0 {
            return Arc::new(vec![1.0]);
        }
        if h == 1 {
            if let Some(v) = self.cache.lock().unwrap().get(&(i, 1)) {
                return Arc::clone(v);
            }
            let v = Arc::new(self.pmfs[i].clone());
            self.cache.lock().unwrap().insert((i, 1), Arc::clone(&v));
            return v;
        }
        if let Some(v) = self.cache.lock().unwrap().get(&(i, h)) {
            return Arc::clone(v);
        }
        let prev = self.convolution_vector(i, h - 1);
        let base = &self.pmfs[i];
        let mut out = vec![0.0; prev.len() + base.len() - 1];
        for (a, &pa) in prev.iter().enumerate() {
            if pa == 0.0 {
                continue;
            }
            for (b, &pb) in base.iter().enumerate() {
                if pb != 0.0 {
                    out[a + b] += pa * pb;
                }
            }
        }
        let v = Arc::new(out);
        self.cache.lock().unwrap().insert((i, h), Arc::clone(&v));
        v
    }

    /// (q̃^i)_j^{*h} = P(Y^i_1 + ... + Y^i_h = j). Exact indicator for h = 0
    /// and exact zero for j < h.
    pub fn convolution_power(&self, i: usize, h: u32, j: u64) -> f64 {
        if h == 0 {
            return if j == 0 { 1.0 } else { 0.0 };
        }
        if j < h as u64 {
            return 0.0;
        }
        let v = self.convolution_vector(i, h);
        if (j as usize) < v.len() {
            v[j as usize]
        } else {
            0.0
        }
    }
}
