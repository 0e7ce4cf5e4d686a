//! Truncated power series in t^ν.
//!
//! Σ_{r=0}^{R} c_r t^{νr} is the representation every state probability
//! takes as a function of time; it is closed under the termwise Caputo
//! derivative and, for ν = 1, under ordinary differentiation.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeriesTNu {
    nu: f64,
    coeffs: Vec<f64>,
}

impl PowerSeriesTNu {
    pub fn new(nu: f64, coeffs: Vec<f64>) -> Result<Self> {
        if !(nu > 0.0 && nu <= 1.0) {
            return Err(Error::domain(format!(
                "PowerSeriesTNu: nu must be in (0,1], got {nu}"
            )));
        }
        if coeffs.is_empty() {
            return Err(Error::domain("PowerSeriesTNu: empty coefficient vector"));
        }
        Ok(PowerSeriesTNu { nu, coeffs })
    }

    pub fn zero(nu: f64, order: usize) -> Self {
        PowerSeriesTNu {
            nu,
            coeffs: vec![0.0; order + 1],
        }
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Truncation order R.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> f64 {
        self.coeffs.get(r).copied().unwrap_or(0.0)
    }

    /// Value at t >= 0 (Horner in x = t^ν).
    pub fn eval(&self, t: f64) -> f64 {
        self.eval_with_tail(t).0
    }

    /// (value, |c_R t^{νR}|) — the last retained term bounds the truncation
    /// quality of the representation at this t.
    pub fn eval_with_tail(&self, t: f64) -> (f64, f64) {
        debug_assert!(t >= 0.0, "series evaluated at negative t");
        let x = if t == 0.0 { 0.0 } else { t.powf(self.nu) };
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        let tail = self.coeffs[self.coeffs.len() - 1].abs() * x.powi(self.order() as i32);
        (acc, tail)
    }

    /// self += w · other (matching ν and order).
    pub fn add_scaled(&mut self, w: f64, other: &PowerSeriesTNu) {
        debug_assert_eq!(self.nu, other.nu);
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0.0);
        }
        for (c, &o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += w * o;
        }
    }

    /// Pointwise scale.
    pub fn scale(&mut self, w: f64) {
        for c in &mut self.coeffs {
            *c *= w;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_at_zero_returns_constant() {
        let s = PowerSeriesTNu::new(0.8, vec![3.5, -1.0, 2.0]).unwrap();
        assert_eq!(s.eval(0.0), 3.5);
    }

    #[test]
    fn horner_matches_naive() {
        let s = PowerSeriesTNu::new(0.6, vec![1.0, -0.5, 0.25, -0.125]).unwrap();
        let t = 1.7f64;
        let x = t.powf(0.6);
        let naive = 1.0 - 0.5 * x + 0.25 * x * x - 0.125 * x * x * x;
        assert!((s.eval(t) - naive).abs() < 1e-15);
    }

    #[test]
    fn tail_bound_reported() {
        let s = PowerSeriesTNu::new(1.0, vec![1.0, 1.0, 0.5]).unwrap();
        let (v, tail) = s.eval_with_tail(2.0);
        assert!((v - 5.0).abs() < 1e-15);
        assert!((tail - 2.0).abs() < 1e-15);
    }

    #[test]
    fn add_scaled_combines() {
        let mut a = PowerSeriesTNu::new(0.8, vec![1.0, 2.0]).unwrap();
        let b = PowerSeriesTNu::new(0.8, vec![0.5, -1.0, 4.0]).unwrap();
        a.add_scaled(2.0, &b);
        assert_eq!(a.coeffs(), &[2.0, 0.0, 8.0]);
    }
}
