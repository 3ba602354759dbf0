//! Lower and upper incomplete gamma functions for complex `s` and real `alpha >= 1`.

use num_complex::Complex64;

use crate::error::{finite, Error, Result};
use crate::special::gamma::ln_gamma;

pub const MAX_SERIES_TERMS: usize = 500;
const REL_TOL: f64 = 1e-17;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncompleteGamma {
    pub lower: Complex64,
    pub upper: Complex64,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha >= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("alpha = {alpha} must be >= 1")))
    }
}

/// `sum_n (-1)^n alpha^{s+n} / (n! (s+n))`, the termwise-integrated power series.
///
/// Its terms peak near `n = alpha` at about `e^alpha`, so for large `alpha` the sum
/// loses roughly `alpha / ln 10` digits; [`lower_incomplete_gamma`] is the
/// well-conditioned route to the same function.
pub fn lower_incomplete_gamma_alternating(s: Complex64, alpha: f64) -> Result<Complex64> {
    check_alpha(alpha)?;
    let mut weight = 1.0; // (-alpha)^n / n!
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..MAX_SERIES_TERMS {
        if n > 0 {
            weight *= -alpha / n as f64;
        }
        let denom = s + n as f64;
        if denom.norm() == 0.0 {
            return Err(Error::Pole(s));
        }
        let term = weight / denom;
        sum += term;
        // alternating tail bounded by the first omitted term once the weights decrease
        if (n as f64) > alpha
            && (weight * alpha / (n as f64 + 1.0)).abs() / (s + (n + 1) as f64).norm() <= REL_TOL * sum.norm()
        {
            return finite("lower_incomplete_gamma", sum * (s * alpha.ln()).exp());
        }
    }
    Err(Error::NonConvergence {
        op: "lower_incomplete_gamma_alternating",
        terms: MAX_SERIES_TERMS,
    })
}

/// `gamma(s, alpha) = alpha^s e^{-alpha} sum_n alpha^n / (s (s+1) ... (s+n))`.
pub fn lower_incomplete_gamma(s: Complex64, alpha: f64) -> Result<Complex64> {
    check_alpha(alpha)?;
    if s.norm() == 0.0 {
        return Err(Error::Pole(s));
    }
    let mut term = 1.0 / s;
    let mut sum = term;
    for n in 1..MAX_SERIES_TERMS {
        let denom = s + n as f64;
        if denom.norm() == 0.0 {
            return Err(Error::Pole(s));
        }
        term *= alpha / denom;
        sum += term;
        // geometric majorant of the tail once alpha / |s+n| < 1/2
        let ratio = alpha / (s + (n + 1) as f64).norm();
        if ratio < 0.5 && term.norm() * ratio / (1.0 - ratio) <= REL_TOL * sum.norm() {
            return finite("lower_incomplete_gamma", sum * (s * alpha.ln() - alpha).exp());
        }
    }
    Err(Error::NonConvergence {
        op: "lower_incomplete_gamma",
        terms: MAX_SERIES_TERMS,
    })
}

/// Upper incomplete gamma by Legendre's continued fraction (modified Lentz).
pub fn upper_incomplete_gamma(s: Complex64, alpha: f64) -> Result<Complex64> {
    check_alpha(alpha)?;
    const TINY: f64 = 1e-300;
    let guard = |v: Complex64| if v.norm() < TINY { Complex64::new(TINY, 0.0) } else { v };
    let mut b = alpha + 1.0 - s;
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = 1.0 / guard(b);
    let mut h = d;
    for i in 1..=MAX_SERIES_TERMS {
        let fi = i as f64;
        let an = -fi * (fi - s);
        b += 2.0;
        d = 1.0 / guard(an * d + b);
        c = guard(b + an / c);
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            return finite("upper_incomplete_gamma", h * (s * alpha.ln() - alpha).exp());
        }
    }
    Err(Error::NonConvergence {
        op: "upper_incomplete_gamma",
        terms: MAX_SERIES_TERMS,
    })
}

/// Both incomplete gamma functions, computed independently (series and continued
/// fraction) so that `lower + upper = Gamma(s)` is a genuine check. When the
/// continued fraction stalls (`alpha` small against `|s|`) the upper part falls
/// back to `Gamma(s) - lower`.
pub fn incomplete_gamma_pair(s: Complex64, alpha: f64) -> Result<IncompleteGamma> {
    let lower = lower_incomplete_gamma(s, alpha)?;
    let upper = match upper_incomplete_gamma(s, alpha) {
        Ok(u) => u,
        Err(Error::NonConvergence { .. }) => ln_gamma(s)?.exp() - lower,
        Err(e) => return Err(e),
    };
    Ok(IncompleteGamma { lower, upper })
}
