//! Ground-truth evaluators of `phi(z) = E[exp(-z X)]`, `X ~ ln N(mu, sigma^2)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{finite, Error, Result};
use crate::filon::FilonMesh;
use crate::params::{ContourSpec, CutPlanePoint, LognormalParams};
use crate::quad::{integrate_breaks, QuadConfig};
use crate::special::{digamma, ln_gamma};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Gaussian mass beyond this many standard deviations is dropped by the direct integral.
const DIRECT_RANGE: f64 = 9.5;
/// `ln(1e18)`: the Filon mesh ends where the integrand has fallen this far below its peak.
const FILON_DROP: f64 = 41.446_531_673_892_82;
pub const FILON_PANELS: usize = 1000;
/// Largest phase advance `t * dx` per mesh interval.
const FILON_MAX_PHASE: f64 = 0.0025;
const FILON_MAX_PANELS: usize = 200_000;
/// `sqrt(2 ln 1e16)`: majorant truncation depth of the contour integrals.
const CONTOUR_DEPTH: f64 = 8.584_103_436_448_11;
pub const CONTOUR_NODE_BUDGET: usize = 2_000_000;

/// `phi(z)` for `Re z >= 0` by adaptive quadrature of `int N(v) exp(-z e^{mu + sigma v}) dv`.
pub fn direct_transform(z: Complex64, p: &LognormalParams) -> Result<Complex64> {
    direct_transform_with(z, p, &QuadConfig::default())
}

pub fn direct_transform_with(z: Complex64, p: &LognormalParams, cfg: &QuadConfig) -> Result<Complex64> {
    if !(z.re >= 0.0 && z.im.is_finite() && z.re.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "direct_transform needs Re z >= 0, got {z}"
        )));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let norm = 1.0 / (2.0 * PI).sqrt();
    let (mu, sigma) = (p.mu(), p.sigma());
    let f = |v: f64| {
        let x = (mu + sigma * v).exp();
        (-z * x).exp() * (norm * (-0.5 * v * v).exp())
    };
    let n = (2.0 * DIRECT_RANGE) as usize;
    let breaks: Vec<f64> = (0..=n)
        .map(|i| -DIRECT_RANGE + 2.0 * DIRECT_RANGE * i as f64 / n as f64)
        .collect();
    integrate_breaks(f, &breaks, cfg)
}

/// Peak and support of `H(y) = -e^{a+y} - y^2/(2 sigma^2)`.
fn filon_support(a: f64, sigma: f64) -> Result<(f64, f64, f64)> {
    let s2 = sigma * sigma;
    let h = |y: f64| -(a + y).exp() - y * y / (2.0 * s2);
    // peak at y = -v with ln v + v = a + 2 ln sigma, bisected in ln v
    let c = a + 2.0 * sigma.ln();
    let (mut lo, mut hi) = (-800.0f64, 800.0f64);
    for _ in 0..200 {
        let m = 0.5 * (lo + hi);
        if m + m.exp() < c {
            lo = m;
        } else {
            hi = m;
        }
    }
    let peak = -(0.5 * (lo + hi)).exp();
    let top = h(peak);
    if !top.is_finite() {
        return Err(Error::Overflow {
            op: "continued_transform",
            detail: format!("Re(mu + ln z) = {a}"),
        });
    }
    let target = top - FILON_DROP;
    let edge = |dir: f64| {
        let mut step = sigma.min(1.0);
        while h(peak + dir * step) > target {
            step *= 2.0;
        }
        let (mut inner, mut outer) = (0.0, step);
        for _ in 0..100 {
            let m = 0.5 * (inner + outer);
            if h(peak + dir * m) > target {
                inner = m;
            } else {
                outer = m;
            }
        }
        peak + dir * outer
    };
    Ok((edge(-1.0), edge(1.0), top))
}

/// `Phi(1, w; sigma) = int exp(-e^x - x^2/(2 sigma^2) + w x / sigma^2) dx`.
pub fn phi_big(w: Complex64, sigma: f64) -> Result<Complex64> {
    let (a, b) = (w.re, w.im);
    let s2 = sigma * sigma;
    let (scale, integral) = scaled_phi_integral(a, b, sigma)?;
    let log_front = Complex64::new(a * a / (2.0 * s2) + scale, a * b / s2);
    finite("phi_big", log_front.exp() * integral)
}

/// `(H(y*), int exp(H(y) - H(y*)) e^{i b y / sigma^2} dy)` by Filon quadrature.
fn scaled_phi_integral(a: f64, b: f64, sigma: f64) -> Result<(f64, Complex64)> {
    if !(sigma > 0.0 && a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidParameter(format!("Phi at w = {a}+{b}i, sigma = {sigma}")));
    }
    let s2 = sigma * sigma;
    let (lo, hi, top) = filon_support(a, sigma)?;
    let g = |y: f64| (-(a + y).exp() - y * y / (2.0 * s2) - top).exp();
    let ratio = g(lo).max(g(hi));
    if ratio > 1e-13 {
        return Err(Error::MeshTooNarrow { lo, hi, ratio });
    }
    let t = b / s2;
    let panels = ((hi - lo) * t.abs() / (2.0 * FILON_MAX_PHASE)).ceil() as usize;
    let mesh = FilonMesh::uniform(lo, hi, panels.clamp(FILON_PANELS, FILON_MAX_PANELS), g)?;
    Ok((top, mesh.integrate_oscillatory(t)))
}

/// Analytic continuation of `phi` through `Phi(1, mu + ln z; sigma)`, valid on the whole cut plane
/// and on the upper limit of the cut.
pub fn continued_transform(z: CutPlanePoint, p: &LognormalParams) -> Result<Complex64> {
    let w = z.ln() + p.mu();
    let sigma = p.sigma();
    let (top, integral) = scaled_phi_integral(w.re, w.im, sigma)?;
    let log_front = w.im * w.im / (2.0 * sigma * sigma) + top;
    finite(
        "continued_transform",
        integral * (log_front.exp() / ((2.0 * PI).sqrt() * sigma)),
    )
}

/// `M(s) = Gamma(s) exp(-mu s + sigma^2 s^2 / 2)` for `Re s > 0`.
pub fn mellin_closed_form(s: Complex64, p: &LognormalParams) -> Result<Complex64> {
    if !(s.re > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "Mellin transform needs Re s > 0, got {s}"
        )));
    }
    let sig2 = p.sigma() * p.sigma();
    finite(
        "mellin_closed_form",
        (ln_gamma(s)? - s * p.mu() + s * s * (0.5 * sig2)).exp(),
    )
}

/// Abscissa minimising `ln Gamma(k) - k (mu + ln|z|) + sigma^2 k^2 / 2`, clamped to `[0.1, 200]`.
pub fn saddle_abscissa(z: &CutPlanePoint, p: &LognormalParams) -> f64 {
    let a = p.mu() + z.value().norm().ln();
    let s2 = p.sigma() * p.sigma();
    let slope = |k: f64| digamma(k) + s2 * k - a;
    let (mut lo, mut hi) = (0.1, 200.0);
    if slope(lo) >= 0.0 {
        return lo;
    }
    if slope(hi) <= 0.0 {
        return hi;
    }
    for _ in 0..60 {
        let m = 0.5 * (lo + hi);
        if slope(m) < 0.0 {
            lo = m;
        } else {
            hi = m;
        }
    }
    0.5 * (lo + hi)
}

/// Truncation half-width from the Gaussian majorant `exp(|theta| y - sigma^2 y^2 / 2)`.
pub fn majorant_half_width(theta: f64, sigma: f64) -> f64 {
    (theta.abs() / sigma + CONTOUR_DEPTH) / sigma
}

/// Default contour: saddle abscissa, majorant half-width, step `min(0.1, sigma/2)` refined
/// for the oscillation of `z^{-s}` along the line.
pub fn default_contour(z: &CutPlanePoint, p: &LognormalParams) -> ContourSpec {
    let k = saddle_abscissa(z, p);
    let sigma = p.sigma();
    let t_max = majorant_half_width(z.arg(), sigma) + 2.0 / sigma;
    let freq = (p.mu() + z.value().norm().ln()).abs() + sigma * sigma * k;
    let h = 0.1f64
        .min(0.5 * sigma)
        .min(2.0 * PI * k / (40.0 + k * freq))
        .min(t_max / 50.0);
    ContourSpec { k, t_max, h }
}

/// Trapezoid sum `h/(2 pi) sum_j f(j h)` over `|j h| <= t_max`, pairing `+-y`.
fn contour_sum<F: Fn(f64) -> Result<Complex64>>(f: F, c: &ContourSpec) -> Result<Complex64> {
    let needed = (c.t_max / c.h).ceil();
    if !(needed.is_finite()) || needed * 2.0 + 1.0 > CONTOUR_NODE_BUDGET as f64 {
        return Err(Error::Truncation {
            needed: if needed.is_finite() {
                2 * needed as usize + 1
            } else {
                usize::MAX
            },
            budget: CONTOUR_NODE_BUDGET,
        });
    }
    let n = needed as usize;
    let mut sum = f(0.0)?;
    for j in 1..=n {
        let y = c.h * j as f64;
        sum += f(y)? + f(-y)?;
    }
    Ok(sum * (c.h / (2.0 * PI)))
}

fn contour_integrand(
    ln_z: Complex64,
    p: &LognormalParams,
    k: f64,
    extra: impl Fn(Complex64) -> Complex64,
) -> impl Fn(f64) -> Result<Complex64> {
    let w = ln_z + p.mu();
    let half_s2 = 0.5 * p.sigma() * p.sigma();
    move |y| {
        let s = Complex64::new(k, y);
        let e = ln_gamma(s)? - w * s + s * s * half_s2;
        Ok(e.exp() * extra(s))
    }
}

/// `phi(z) = (1/2 pi i) int_{k - i inf}^{k + i inf} Gamma(s) e^{-mu s + sigma^2 s^2/2} z^{-s} ds`.
pub fn mellin_barnes_transform(z: CutPlanePoint, p: &LognormalParams, c: &ContourSpec) -> Result<Complex64> {
    if !(c.k > 0.0) {
        return Err(Error::Contour(c.k));
    }
    let f = contour_integrand(z.ln(), p, c.k, |_| Complex64::new(1.0, 0.0));
    finite("mellin_barnes_transform", contour_sum(f, c)?)
}

/// [`mellin_barnes_transform`] on [`default_contour`].
pub fn transform(z: CutPlanePoint, p: &LognormalParams) -> Result<Complex64> {
    mellin_barnes_transform(z, p, &default_contour(&z, p))
}

/// `phi'(z)`, from the contour integral with the extra factor `-s/z`.
pub fn transform_derivative(z: CutPlanePoint, p: &LognormalParams) -> Result<Complex64> {
    let c = default_contour(&z, p);
    let inv_z = 1.0 / z.value();
    let f = contour_integrand(z.ln(), p, c.k, move |s| -s * inv_z);
    finite("transform_derivative", contour_sum(f, &c)?)
}

/// `E[exp(i t X)] = phi(-i t)`.
pub fn characteristic_function(t: f64, p: &LognormalParams) -> Result<Complex64> {
    if !t.is_finite() {
        return Err(Error::InvalidParameter(format!("t = {t}")));
    }
    if t == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    transform(CutPlanePoint::interior(Complex64::new(0.0, -t))?, p)
}

/// `(1/2 pi) int sin(pi s) Gamma(s) e^{-(ln t + i pi/2) s + sigma^2 s^2/2} ds` on `Re s = k`.
/// Kept to show numerically that it is not the characteristic function.
pub fn leipnik_formula(t: f64, sigma: f64, k: f64) -> Result<Complex64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!("t = {t} must be > 0")));
    }
    if !(sigma > 0.0 && sigma.is_finite() && k.is_finite()) {
        return Err(Error::InvalidParameter(format!("sigma = {sigma}, k = {k}")));
    }
    let t_max = majorant_half_width(PI, sigma) + (k.abs() + 2.0) / sigma;
    let h = 0.1f64.min(0.5 * sigma).min(t_max / 50.0);
    let c = ContourSpec { k, t_max, h };
    let w = Complex64::new(t.ln(), 0.5 * PI);
    let half_s2 = 0.5 * sigma * sigma;
    let f = |y: f64| {
        let s = Complex64::new(k, y);
        // sin(pi s) Gamma(s) = pi / Gamma(1 - s)
        let e = -ln_gamma(1.0 - s)? - w * s + s * s * half_s2;
        Ok(e.exp() * PI)
    };
    finite("leipnik_formula", I * contour_sum(f, &c)?)
}
