//! Small-z convergent series with a rigorous error budget, and the large-sigma expansion.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{finite, Error, Result};
use crate::params::{CutPlanePoint, LognormalParams};
use crate::special::{a_coefficients, erfcx, hermite_prob, ln_factorial};

const MAX_TAIL_TERMS: usize = 100_000;
/// Relative accuracy assumed for each erfcx-paired term in the rounding estimate.
const TERM_REL_ACCURACY: f64 = 1e-13;
pub const MAX_POLES: usize = 30;
pub const MAX_HERMITE_TERMS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallZConfig {
    pub alpha: f64,
    pub n_terms: usize,
    /// Abscissa of the remainder bound, `<= 1`; `0` gives the uniform bound.
    pub k_bound: f64,
}

impl Default for SmallZConfig {
    fn default() -> Self {
        Self {
            alpha: 10.0,
            n_terms: 41,
            k_bound: 0.0,
        }
    }
}

impl SmallZConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha >= 1.0 && self.alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!("alpha = {} must be >= 1", self.alpha)));
        }
        if self.n_terms == 0 {
            return Err(Error::InvalidParameter("n_terms must be >= 1".into()));
        }
        if !(self.k_bound <= 1.0 && self.k_bound.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "k_bound = {} must be <= 1",
                self.k_bound
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaAsymConfig {
    pub n_poles: usize,
    pub m_terms: usize,
}

impl Default for SigmaAsymConfig {
    fn default() -> Self {
        Self {
            n_poles: 5,
            m_terms: 10,
        }
    }
}

/// Components of the small-z error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorBudget {
    /// Bound on the incomplete-gamma remainder `R(z)`.
    pub remainder: f64,
    /// Majorant of the omitted terms `n >= n_terms`.
    pub truncation: f64,
    /// Floating-point rounding estimate of the retained sum.
    pub rounding: f64,
}

impl ErrorBudget {
    pub fn total(&self) -> f64 {
        self.remainder + self.truncation + self.rounding
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxResult {
    pub value: Complex64,
    /// `None` when only an order estimate exists.
    pub error_bound: Option<f64>,
    pub budget: Option<ErrorBudget>,
}

/// `(1/(sqrt(2 pi) sigma)) exp(pi^2/(2 sigma^2) - alpha)`.
pub fn small_z_error_bound(alpha: f64, sigma: f64) -> f64 {
    remainder_bound(alpha, sigma, 0.0, 0.0)
}

fn remainder_bound(alpha: f64, sigma: f64, k: f64, log_scale: f64) -> f64 {
    let s2 = sigma * sigma;
    (PI * PI / (2.0 * s2) + 0.5 * s2 * k * k - alpha - k * log_scale).exp() / ((2.0 * PI).sqrt() * sigma)
}

struct SeriesSum {
    value: Complex64,
    magnitude: f64,
    truncation: f64,
}

/// `sum_{n < n_terms} (-z)^n/n! e^{mu n + sigma^2 n^2/2} erfc(w_n)/2`,
/// `w_n = (mu + ln(z/alpha) + sigma^2 n)/(sqrt 2 sigma)`.
///
/// With `c = mu + ln z - ln alpha`, a term equals `(-1)^n alpha^n/n! e^{-c^2/(2 sigma^2)} erfcx(w_n)/2`,
/// which is used whenever `Re w_n >= 0`. For the leading terms with `Re w_n < 0` the reflection
/// `erfc(w) = 2 - erfc(-w)` splits off `(-u)^n/n! e^{sigma^2 n^2/2}`, `u = z e^mu`, whose plain part
/// is summed against `e^{-u}`.
fn series_sum(z: &CutPlanePoint, p: &LognormalParams, alpha: f64, n_terms: usize) -> Result<SeriesSum> {
    let sigma = p.sigma();
    let s2 = sigma * sigma;
    let scale = std::f64::consts::SQRT_2 * sigma;
    let c = z.ln() + p.mu() - alpha.ln();
    let log_e = -(c * c) / (2.0 * s2);
    let ln_alpha = alpha.ln();
    let u = finite("small_z_series", z.value() * p.mu().exp())?;

    let w = |n: usize| (c + s2 * n as f64) / scale;
    let log_q = |n: usize| log_e + (n as f64 * ln_alpha - ln_factorial(n));
    let sign = |n: usize| if n % 2 == 0 { 1.0 } else { -1.0 };
    let scaled = |n: usize| -> Result<Complex64> {
        let lq = log_q(n);
        if lq.re > 709.0 {
            return Err(Error::TermOverflow { n });
        }
        Ok(lq.exp() * (0.5 * sign(n)))
    };

    let mut reflected = Complex64::new(0.0, 0.0);
    let mut boosted = Complex64::new(0.0, 0.0);
    let mut plain = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut power = Complex64::new(1.0, 0.0);
    let mut n_a = 0;
    let mut last_a_power = power;
    for n in 0..n_terms {
        let wn = w(n);
        if n > 0 {
            power = power * (-u) / n as f64;
        }
        if wn.re < 0.0 {
            n_a = n + 1;
            last_a_power = power;
            let part = scaled(n)? * erfcx(-wn)?;
            let growth = (0.5 * s2 * (n * n) as f64).exp_m1();
            let extra = power * growth;
            if !(power.norm().is_finite() && extra.norm().is_finite()) {
                return Err(Error::TermOverflow { n });
            }
            reflected -= part;
            boosted += extra;
            plain += power;
            magnitude += part.norm() + extra.norm() + power.norm();
        } else {
            let part = scaled(n)? * erfcx(wn)?;
            reflected += part;
            magnitude += part.norm();
        }
    }
    if n_a > 0 && n_a as f64 >= 2.0 * u.norm() + 10.0 {
        // sum_{n < n_a} (-u)^n/n! = e^{-u} - sum_{n >= n_a} (-u)^n/n!
        let mut tail = Complex64::new(0.0, 0.0);
        let mut term = last_a_power * (-u) / n_a as f64;
        let mut n = n_a;
        while term.norm() > 1e-18 * (tail.norm() + 1e-300) || n == n_a {
            tail += term;
            n += 1;
            term = term * (-u) / n as f64;
        }
        let head = (-u).exp();
        plain = head - tail;
        magnitude += head.norm() + tail.norm();
    }
    let value = finite("small_z_series", reflected + boosted + plain)?;

    // omitted terms n >= n_terms
    let ln_u = u.norm().ln();
    let mut truncation = 0.0;
    let mut n = n_terms;
    loop {
        if n - n_terms > MAX_TAIL_TERMS {
            return Err(Error::NonConvergence {
                op: "small_z_series tail",
                terms: MAX_TAIL_TERMS,
            });
        }
        let wn = w(n);
        let base = 0.5 * log_q(n).re.exp();
        if wn.re < 0.0 {
            let direct = (n as f64 * ln_u + 0.5 * s2 * (n * n) as f64 - ln_factorial(n)).exp();
            truncation += direct + base * erfcx(-wn)?.norm();
        } else if n as f64 >= 2.0 * alpha {
            // |erfcx| <= 1 on Re w >= 0 and alpha/(n+1) <= 1/2 from here on
            truncation += 2.0 * base;
            break;
        } else {
            truncation += base;
        }
        n += 1;
    }
    Ok(SeriesSum {
        value,
        magnitude,
        truncation,
    })
}

/// Truncated small-z series with the remainder bound plus truncation and rounding majorants.
pub fn small_z_series(z: CutPlanePoint, p: &LognormalParams, cfg: &SmallZConfig) -> Result<ApproxResult> {
    cfg.validate()?;
    let sum = series_sum(&z, p, cfg.alpha, cfg.n_terms)?;
    let log_scale = p.mu() + z.value().norm().ln();
    let budget = ErrorBudget {
        remainder: remainder_bound(cfg.alpha, p.sigma(), cfg.k_bound, log_scale),
        truncation: sum.truncation,
        rounding: TERM_REL_ACCURACY * sum.magnitude,
    };
    Ok(ApproxResult {
        value: sum.value,
        error_bound: Some(budget.total()),
        budget: Some(budget),
    })
}

/// The two sums of the large-sigma expansion, returned separately.
pub fn sigma_asymptotic_parts(
    z: CutPlanePoint,
    p: &LognormalParams,
    cfg: &SigmaAsymConfig,
) -> Result<(Complex64, Complex64)> {
    if cfg.n_poles > MAX_POLES {
        return Err(Error::Degree {
            requested: cfg.n_poles,
            max: MAX_POLES,
        });
    }
    if cfg.m_terms > MAX_HERMITE_TERMS {
        return Err(Error::Degree {
            requested: cfg.m_terms,
            max: MAX_HERMITE_TERMS,
        });
    }
    let first = series_sum(&z, p, 1.0, cfg.n_poles + 1)?.value;
    let sigma = p.sigma();
    let l = z.ln() + p.mu();
    let gauss = finite("sigma_asymptotic", (-(l * l) / (2.0 * sigma * sigma)).exp())?;
    let x = -l / sigma;
    let a = a_coefficients(cfg.m_terms, cfg.n_poles)?;
    let mut second = Complex64::new(0.0, 0.0);
    let mut inv_pow = 1.0 / sigma;
    for (m, am) in a.iter().enumerate() {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        second += hermite_prob(m, x)? * (sign * am * inv_pow);
        inv_pow /= sigma;
    }
    second = gauss * second / (2.0 * PI).sqrt();
    Ok((first, finite("sigma_asymptotic", second)?))
}

/// Large-sigma expansion with `N` pole terms and `M` Hermite terms; no rigorous bound.
pub fn sigma_asymptotic(z: CutPlanePoint, p: &LognormalParams, cfg: &SigmaAsymConfig) -> Result<ApproxResult> {
    let (first, second) = sigma_asymptotic_parts(z, p, cfg)?;
    Ok(ApproxResult {
        value: first + second,
        error_bound: None,
        budget: None,
    })
}

/// Moduli of the partial sums of the formal moment series `sum (-z)^n/n! e^{mu n + sigma^2 n^2/2}`.
pub fn divergence_witness(z: Complex64, p: &LognormalParams, n_max: usize) -> Result<Vec<f64>> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(vec![1.0; n_max + 1]);
    }
    let (ln_abs, arg) = ((-z).norm().ln(), (-z).arg());
    let s2 = p.sigma() * p.sigma();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let nf = n as f64;
        let log_mod = nf * (ln_abs + p.mu()) + 0.5 * s2 * nf * nf - ln_factorial(n);
        if log_mod > 709.0 {
            return Err(Error::TermOverflow { n });
        }
        sum += Complex64::from_polar(log_mod.exp(), nf * arg);
        if !sum.norm().is_finite() {
            return Err(Error::TermOverflow { n });
        }
        out.push(sum.norm());
    }
    Ok(out)
}

/// Smallest `n*` with `|z| e^{mu + sigma^2 (n + 1/2)}/(n + 1) > 1` for every `n >= n*`.
pub fn divergence_index(z_abs: f64, p: &LognormalParams) -> usize {
    let s2 = p.sigma() * p.sigma();
    let log_ratio = |n: usize| z_abs.ln() + p.mu() + s2 * (n as f64 + 0.5) - ((n + 1) as f64).ln();
    // log_ratio is convex in n; start the scan at its minimiser
    let start = ((1.0 / s2) - 1.0).max(0.0).floor() as usize;
    let mut n = start;
    while log_ratio(n) <= 0.0 {
        n += 1;
    }
    if n > start {
        return n;
    }
    while n > 0 && log_ratio(n - 1) > 0.0 {
        n -= 1;
    }
    n
}
