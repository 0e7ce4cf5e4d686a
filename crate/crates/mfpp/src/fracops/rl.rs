//! Integer-order branch of the right-sided Riemann-Liouville derivative:
//! d^n/d(−t)^n f(t) = (−1)^n dⁿf/dtⁿ.

use crate::error::{Error, Result};
use crate::model::PowerSeriesTNu;

/// Evaluate (−1)^n times the n-th termwise derivative of a plain t-power
/// series at t. The series must carry ν = 1; the last retained term of the
/// differentiated series must be below 1e-12 at t or the evaluation is
/// rejected as untrusted truncation.
pub fn rl_integer_derivative(series: &PowerSeriesTNu, n: u32, t: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("rl_integer_derivative: order must be >= 1"));
    }
    if series.nu() != 1.0 {
        return Err(Error::domain(
            "rl_integer_derivative: series must be in plain t-powers (nu = 1)",
        ));
    }
    let r_max = series.order();
    if (n as usize) > r_max {
        return Ok(0.0);
    }
    // d^n/dt^n t^r = r!/(r−n)! t^{r−n}
    let mut coeffs = Vec::with_capacity(r_max - n as usize + 1);
    for r in n as usize..=r_max {
        let mut fall = 1.0;
        for i in 0..n as usize {
            fall *= (r - i) as f64;
        }
        coeffs.push(series.coeff(r) * fall);
    }
    let deriv = PowerSeriesTNu::new(1.0, coeffs)?;
    let (v, tail) = deriv.eval_with_tail(t);
    if tail > 1e-12 {
        return Err(Error::non_convergence(
            "rl_integer_derivative truncation",
            tail,
            1e-12,
        ));
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exp_series(c: f64, order: usize) -> PowerSeriesTNu {
        // e^{−ct} = Σ (−c)^r t^r / r!
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = 1.0;
        for r in 0..=order {
            coeffs.push(term);
            term *= -c / (r as f64 + 1.0);
        }
        PowerSeriesTNu::new(1.0, coeffs).unwrap()
    }

    #[test]
    fn constant_derivative_is_zero() {
        let s = PowerSeriesTNu::new(1.0, vec![5.0]).unwrap();
        assert_eq!(rl_integer_derivative(&s, 1, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn exponential_rule_orders_one_and_two() {
        // d^n/d(−t)^n e^{−ct} = c^n e^{−ct}
        let c = 1.7;
        let s = exp_series(c, 60);
        for &t in &[0.4, 1.0] {
            let expect1 = c * (-c * t).exp();
            let v1 = rl_integer_derivative(&s, 1, t).unwrap();
            assert!((v1 - expect1).abs() < 1e-12, "{v1} vs {expect1}");
            let expect2 = c * c * (-c * t).exp();
            let v2 = rl_integer_derivative(&s, 2, t).unwrap();
            assert!((v2 - expect2).abs() < 1e-12);
        }
    }

    #[test]
    fn first_order_matches_finite_differences() {
        let c = 0.9;
        let s = exp_series(c, 60);
        let t = 1.1;
        let h = 1e-6;
        let fd = -(s.eval(t + h) - s.eval(t - h)) / (2.0 * h);
        let v = rl_integer_derivative(&s, 1, t).unwrap();
        assert!((v - fd).abs() < 1e-7);
    }

    #[test]
    fn untrusted_truncation_rejected() {
        // too short a series at too large a t
        let s = exp_series(3.0, 8);
        assert!(rl_integer_derivative(&s, 2, 2.0).is_err());
    }

    #[test]
    fn non_unit_nu_rejected() {
        let s = PowerSeriesTNu::new(0.8, vec![1.0, 1.0]).unwrap();
        assert!(rl_integer_derivative(&s, 1, 0.5).is_err());
    }
}
