// SPDX-License-Identifier: Apache-2.0

//! Gauss-Legendre quadrature in `f64`, with a doubling driver for smooth
//! integrands on compact intervals.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Node count of the first rule tried by [`integrate`].
pub const INITIAL_NODES: usize = 8;
/// Node count cap for [`integrate`].
pub const MAX_NODES: usize = 4096;

/// An `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the rule by Newton iteration on `P_n` from the usual cosine
    /// initial guesses; nodes come in symmetric pairs.
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "a quadrature rule needs at least one node");
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut derivative = 0.0;
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                derivative = dp;
                let step = p / dp;
                x -= step;
                if step.abs() <= 1e-16 * x.abs().max(1.0) {
                    let (_, dp) = legendre(n, x);
                    derivative = dp;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * derivative * derivative);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let sum: f64 = self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum();
        half * sum
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureEstimate {
    pub value: f64,
    /// Node count of the accepted rule.
    pub nodes: usize,
    /// `|I_n - I_{n/2}|` at acceptance.
    pub last_change: f64,
}

/// Integrates `f` over `[a, b]`, doubling the node count from
/// [`INITIAL_NODES`] until two successive rules agree to `tol`, and failing
/// past [`MAX_NODES`].
pub fn integrate(a: f64, b: f64, tol: f64, f: impl Fn(f64) -> f64) -> Result<QuadratureEstimate> {
    let mut n = INITIAL_NODES;
    let mut previous = GaussLegendre::new(n).integrate(a, b, &f);
    let mut change = f64::INFINITY;
    while n < MAX_NODES {
        n *= 2;
        let current = GaussLegendre::new(n).integrate(a, b, &f);
        change = (current - previous).abs();
        if change <= tol {
            return Ok(QuadratureEstimate {
                value: current,
                nodes: n,
                last_change: change,
            });
        }
        previous = current;
    }
    Err(Error::QuadratureNotConverged {
        nodes: n,
        last_change: change,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_integrates_polynomials_exactly() {
        let rule = GaussLegendre::new(5);
        // degree 9 is exact for 5 nodes
        let got = rule.integrate(0.0, 2.0, |x| x.powi(9) - 3.0 * x.powi(4) + 1.0);
        let want = 2f64.powi(10) / 10.0 - 3.0 * 2f64.powi(5) / 5.0 + 2.0;
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1, 2, 7, 64, 1000] {
            let rule = GaussLegendre::new(n);
            assert_eq!(rule.len(), n);
            let total = rule.integrate(-1.0, 1.0, |_| 1.0);
            assert!((total - 2.0).abs() < 1e-12, "n = {n}: {total}");
        }
    }

    #[test]
    fn doubling_driver_converges_on_smooth_integrand() {
        let est = integrate(0.0, core::f64::consts::FRAC_PI_2, 1e-12, libm::cos).unwrap();
        assert!((est.value - 1.0).abs() < 1e-13);
        assert!(est.last_change <= 1e-12);
    }

    #[test]
    fn gives_up_on_a_jump() {
        let err = integrate(0.0, 1.0, 1e-12, |x| if x < 0.3 { 0.0 } else { 1.0 }).unwrap_err();
        assert!(matches!(
            err,
            Error::QuadratureNotConverged {
                nodes: MAX_NODES,
                ..
            }
        ));
    }
}
