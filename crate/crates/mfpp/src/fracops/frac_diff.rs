//! The multivariate fractional difference operator
//! (I − Σλ_iB_i/s(λ))^η expanded by the generalized Newton binomial.
//!
//! On functions vanishing off the nonnegative orthant the expansion is an
//! exact finite sum: every term with j > |k| hits a zero lattice value.

use crate::fracops::lattice::LatticeFunction;
use crate::model::{ModelParams, MultiIndex};
use crate::specfun::gen_binomial;

fn compositions(j: u32, m: usize) -> Vec<Vec<u64>> {
    // all r >= 0 with r_1 + ... + r_m = j
    let mut out = Vec::new();
    let mut cur = vec![0u64; m];
    fn rec(rem: u64, pos: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pos == cur.len() - 1 {
            cur[pos] = rem;
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur[pos] = v;
            rec(rem - v, pos + 1, cur, out);
        }
    }
    rec(j as u64, 0, &mut cur, &mut out);
    out
}

fn factorial(n: u64) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// [(I − Σλ_iB_i/s)^η F](k) at time t, summed to j_max binomial terms.
pub fn frac_difference_with_terms(
    params: &ModelParams,
    lattice: &LatticeFunction,
    k: &MultiIndex,
    t: f64,
    j_max: u32,
) -> f64 {
    let s = params.s_lambda();
    let mut acc = 0.0;
    for j in 0..=j_max {
        let binom = gen_binomial(params.eta, j);
        if binom == 0.0 {
            continue;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let mut inner = 0.0;
        for r in compositions(j, params.m()) {
            let shift = MultiIndex::new(r.clone());
            let value = match k.checked_sub(&shift) {
                Some(km) => lattice.series_at(&km).eval(t),
                None => continue,
            };
            if value == 0.0 {
                continue;
            }
            let mut w = factorial(j as u64);
            for (i, &ri) in r.iter().enumerate() {
                w *= params.lambda[i].powi(ri as i32) / factorial(ri);
            }
            inner += w * value;
        }
        acc += sign * binom * s.powi(-(j as i32)) * inner;
    }
    acc
}

/// The exact finite expansion: terms beyond j = |k| are identically zero.
pub fn frac_difference(
    params: &ModelParams,
    lattice: &LatticeFunction,
    k: &MultiIndex,
    t: f64,
) -> f64 {
    frac_difference_with_terms(params, lattice, k, t, k.total() as u32)
}
