//! Gauss–Legendre rules on arbitrary intervals.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// A Gauss–Legendre rule on the reference interval `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `n`-point rule by Newton iteration on the Legendre polynomial.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a quadrature rule needs at least one point");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess for the i-th largest root.
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
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

    /// Nodes and weights mapped onto `[a, b]`.
    pub fn points(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        self.points(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

/// Legendre polynomial P_n and its derivative at `x`.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    let dp = nf * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Shared 4-point rule used for element integrals.
pub fn element_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(4))
}

/// Shared 50-point rule used for through-thickness integrals.
pub fn thickness_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(50))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1, 2, 4, 7, 50] {
            let rule = GaussLegendre::new(n);
            assert_relative_eq!(rule.integrate(0.0, 3.0, |_| 1.0), 3.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn exact_through_degree_2n_minus_1() {
        let rule = GaussLegendre::new(4);
        for deg in 0..=7 {
            let exact = 1.0 / (deg as f64 + 1.0);
            let got = rule.integrate(0.0, 1.0, |x| x.powi(deg));
            assert_relative_eq!(got, exact, max_relative = 1e-14);
        }
        // degree 8 is not integrated exactly
        let got = rule.integrate(0.0, 1.0, |x| x.powi(8));
        assert!((got - 1.0 / 9.0).abs() > 1e-8);
    }

    #[test]
    fn fifty_point_nodes_are_sorted_and_symmetric() {
        let rule = thickness_rule();
        assert_eq!(rule.len(), 50);
        let pts: Vec<_> = rule.points(-1.0, 1.0).collect();
        for w in pts.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
        for i in 0..25 {
            assert_relative_eq!(pts[i].0, -pts[49 - i].0, epsilon = 1e-15);
            assert_relative_eq!(pts[i].1, pts[49 - i].1, epsilon = 1e-15);
        }
        let cos = rule.integrate(0.0, PI / 2.0, f64::cos);
        assert_relative_eq!(cos, 1.0, epsilon = 1e-14);
    }
}
