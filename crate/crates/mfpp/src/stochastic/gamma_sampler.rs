//! Gamma-increment sampling (Marsaglia-Tsang), for the gamma subordinator
//! H^f(t) ~ Gamma(shape a·t, rate b).

use super::rng::RngStream;

/// One draw of Gamma(shape, rate). Shape 0 is the degenerate mass at 0.
pub fn sample_gamma(shape: f64, rate: f64, rng: &mut RngStream) -> f64 {
    debug_assert!(shape >= 0.0 && rate > 0.0);
    if shape == 0.0 {
        return 0.0;
    }
    if shape < 1.0 {
        // boost: G(a) =(d) G(a+1) U^{1/a}
        let g = sample_gamma_shape_ge1(shape + 1.0, rng);
        let u = rng.uniform_open();
        return g * u.powf(1.0 / shape) / rate;
    }
    sample_gamma_shape_ge1(shape, rng) / rate
}

fn sample_gamma_shape_ge1(shape: f64, rng: &mut RngStream) -> f64 {
    let d = shape - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = rng.normal();
        let t = 1.0 + c * x;
        if t <= 0.0 {
            continue;
        }
        let v = t * t * t;
        let u = rng.uniform_open();
        let x2 = x * x;
        if u < 1.0 - 0.0331 * x2 * x2 {
            return d * v;
        }
        if u.ln() < 0.5 * x2 + d * (1.0 - v + v.ln()) {
            return d * v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn moments(shape: f64, rate: f64, seed: u64, n: usize) -> (f64, f64) {
        let mut rng = RngStream::new(seed, 0);
        let mut s = 0.0;
        let mut s2 = 0.0;
        for _ in 0..n {
            let g = sample_gamma(shape, rate, &mut rng);
            s += g;
            s2 += g * g;
        }
        let m = s / n as f64;
        (m, s2 / n as f64 - m * m)
    }

    #[test]
    fn mean_and_variance() {
        for &(shape, rate) in &[(0.5, 1.0), (1.0, 1.0), (3.7, 2.0), (40.0, 0.5)] {
            let n = 300_000;
            let (m, v) = moments(shape, rate, 17, n);
            let em = shape / rate;
            let ev = shape / (rate * rate);
            assert!((m - em).abs() < 5.0 * (ev / n as f64).sqrt(), "shape {shape}: {m} vs {em}");
            assert!((v - ev).abs() / ev < 0.05, "shape {shape}: {v} vs {ev}");
        }
    }

    #[test]
    fn laplace_transform_matches_bernstein() {
        // E[e^{−μ G}] = (1 + μ/b)^{−a} for G ~ Gamma(a, b)
        let (a, b, mu) = (1.3, 0.9, 0.7);
        let n = 300_000;
        let mut rng = RngStream::new(29, 0);
        let mut s = 0.0;
        for _ in 0..n {
            s += (-mu * sample_gamma(a, b, &mut rng)).exp();
        }
        let mean = s / n as f64;
        let expect = (1.0 + mu / b).powf(-a);
        assert!((mean - expect).abs() < 0.002, "{mean} vs {expect}");
    }

    #[test]
    fn degenerate_shape_zero() {
        let mut rng = RngStream::new(1, 0);
        assert_eq!(sample_gamma(0.0, 1.0, &mut rng), 0.0);
    }
}
