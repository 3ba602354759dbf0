//! Filon-type quadrature: piecewise quadratic interpolation of a sampled function,
//! integrated exactly against `exp(lambda x)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Quadratic `c0 + c1 u + c2 u^2` on one panel, with `u = x - mid`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Panel {
    pub lo: f64,
    pub mid: f64,
    pub hi: f64,
    pub c: [f64; 3],
}

impl Panel {
    pub fn eval(&self, x: f64) -> f64 {
        let u = x - self.mid;
        self.c[0] + u * (self.c[1] + u * self.c[2])
    }
}

/// Odd-length node set with one interpolating quadratic per pair of intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct FilonMesh {
    nodes: Vec<f64>,
    panels: Vec<Panel>,
}

impl FilonMesh {
    pub fn new(nodes: &[f64], samples: &[f64]) -> Result<Self> {
        if nodes.len() != samples.len() {
            return Err(Error::Mesh(format!(
                "{} nodes but {} samples",
                nodes.len(),
                samples.len()
            )));
        }
        if nodes.len() < 3 || nodes.len() % 2 == 0 {
            return Err(Error::Mesh(format!("node count {} must be odd and >= 3", nodes.len())));
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Mesh("nodes must be strictly increasing".into()));
        }
        let panels = (0..nodes.len() / 2)
            .map(|j| {
                let (x0, x1, x2) = (nodes[2 * j], nodes[2 * j + 1], nodes[2 * j + 2]);
                let (f0, f1, f2) = (samples[2 * j], samples[2 * j + 1], samples[2 * j + 2]);
                let (a, b) = (x0 - x1, x2 - x1);
                let da = (f0 - f1) / a;
                let db = (f2 - f1) / b;
                let c2 = (db - da) / (b - a);
                let c1 = da - c2 * a;
                Panel {
                    lo: x0,
                    mid: x1,
                    hi: x2,
                    c: [f1, c1, c2],
                }
            })
            .collect();
        Ok(Self {
            nodes: nodes.to_vec(),
            panels,
        })
    }

    /// `2 n + 1` equispaced nodes on `[lo, hi]` sampled from `f`.
    pub fn uniform<F: Fn(f64) -> f64>(lo: f64, hi: f64, n_panels: usize, f: F) -> Result<Self> {
        let m = 2 * n_panels;
        let step = (hi - lo) / m as f64;
        let nodes: Vec<f64> = (0..=m).map(|i| lo + step * i as f64).collect();
        let samples: Vec<f64> = nodes.iter().map(|&x| f(x)).collect();
        Self::new(&nodes, &samples)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn panels(&self) -> &[Panel] {
        &self.panels
    }

    /// `int g(x) exp(i t x) dx` over the mesh.
    pub fn integrate_oscillatory(&self, t: f64) -> Complex64 {
        self.integrate_exp(Complex64::new(0.0, t))
    }

    /// `int g(x) exp(-x_rate x) dx` over the mesh.
    pub fn integrate_exponential(&self, rate: f64) -> f64 {
        self.integrate_exp(Complex64::new(-rate, 0.0)).re
    }

    /// `int g(x) exp(lambda x) dx` over the mesh.
    pub fn integrate_exp(&self, lambda: Complex64) -> Complex64 {
        self.panels
            .iter()
            .map(|p| {
                let m = moments(p.lo - p.mid, p.hi - p.mid, lambda);
                (lambda * p.mid).exp() * (m[0] * p.c[0] + m[1] * p.c[1] + m[2] * p.c[2])
            })
            .sum()
    }
}

/// `int_a^b u^k exp(lambda u) du` for `k = 0, 1, 2`.
pub(crate) fn moments(a: f64, b: f64, lambda: Complex64) -> [Complex64; 3] {
    let reach = lambda.norm() * a.abs().max(b.abs());
    if reach < 1.0 {
        let mut out = [Complex64::new(0.0, 0.0); 3];
        // exp(lambda u) = sum_n (lambda u)^n / n!
        let mut coef = Complex64::new(1.0, 0.0);
        // (a^{n+k+1}, b^{n+k+1})
        let mut pows = [(a, b), (a * a, b * b), (a * a * a, b * b * b)];
        for n in 0..40 {
            let mut small = true;
            for k in 0..3 {
                let e = (n + k + 1) as f64;
                let term = coef * ((pows[k].1 - pows[k].0) / e);
                out[k] += term;
                if term.norm() > 1e-18 * out[k].norm() {
                    small = false;
                }
                pows[k].0 *= a;
                pows[k].1 *= b;
            }
            if small && n > 2 {
                break;
            }
            coef *= lambda / (n + 1) as f64;
        }
        return out;
    }
    let inv = 1.0 / lambda;
    let anti = |u: f64| {
        let e = (lambda * u).exp();
        [
            e * inv,
            e * (inv * u - inv * inv),
            e * (inv * u * u - inv * inv * 2.0 * u + inv * inv * inv * 2.0),
        ]
    };
    let (fa, fb) = (anti(a), anti(b));
    [fb[0] - fa[0], fb[1] - fa[1], fb[2] - fa[2]]
}
