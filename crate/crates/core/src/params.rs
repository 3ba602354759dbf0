//! Parameter and argument types shared by every evaluator.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parameters `(mu, sigma)` of `ln N(mu, sigma^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LognormalParams {
    mu: f64,
    sigma: f64,
}

impl LognormalParams {
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::InvalidParameter(format!("mu = {mu} is not finite")));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::InvalidParameter(format!("sigma = {sigma} must be > 0")));
        }
        Ok(Self { mu, sigma })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Closed-form density.
    pub fn pdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let u = (x.ln() - self.mu) / self.sigma;
        (-0.5 * u * u).exp() / ((2.0 * PI).sqrt() * self.sigma * x)
    }

    pub fn mean(&self) -> f64 {
        (self.mu + 0.5 * self.sigma * self.sigma).exp()
    }
}

/// Which side of the cut a point on `(-inf, 0)` is the limit from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Boundary {
    Interior,
    /// `-t + i0`, `Arg = pi`.
    UpperLimit,
    /// `-t - i0`, `Arg = -pi`; only used to check the reflection symmetry.
    LowerLimit,
}

/// A complex argument off the branch cut `(-inf, 0]`, or a one-sided limit onto it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPlanePoint {
    value: Complex64,
    boundary: Boundary,
}

impl CutPlanePoint {
    pub fn interior(value: Complex64) -> Result<Self> {
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::InvalidParameter(format!("z = {value} is not finite")));
        }
        if value.im == 0.0 && value.re <= 0.0 {
            return Err(Error::InvalidParameter("z on branch cut or at origin".into()));
        }
        Ok(Self {
            value,
            boundary: Boundary::Interior,
        })
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::interior(Complex64::new(x, 0.0))
    }

    /// `-t + i0` for `t > 0`.
    pub fn upper_limit(t: f64) -> Result<Self> {
        Self::on_cut(t, Boundary::UpperLimit)
    }

    /// `-t - i0` for `t > 0`.
    pub fn lower_limit(t: f64) -> Result<Self> {
        Self::on_cut(t, Boundary::LowerLimit)
    }

    fn on_cut(t: f64, boundary: Boundary) -> Result<Self> {
        if !(t.is_finite() && t > 0.0) {
            return Err(Error::InvalidParameter(format!("boundary point needs t > 0, got {t}")));
        }
        Ok(Self {
            value: Complex64::new(-t, 0.0),
            boundary,
        })
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn conj(&self) -> Self {
        let boundary = match self.boundary {
            Boundary::Interior => Boundary::Interior,
            Boundary::UpperLimit => Boundary::LowerLimit,
            Boundary::LowerLimit => Boundary::UpperLimit,
        };
        Self {
            value: self.value.conj(),
            boundary,
        }
    }

    /// Principal argument; exactly `+pi` (`-pi`) on the upper (lower) limit.
    pub fn arg(&self) -> f64 {
        match self.boundary {
            Boundary::Interior => self.value.im.atan2(self.value.re),
            Boundary::UpperLimit => PI,
            Boundary::LowerLimit => -PI,
        }
    }

    /// Principal-branch logarithm.
    pub fn ln(&self) -> Complex64 {
        Complex64::new(self.value.norm().ln(), self.arg())
    }
}

/// Vertical contour `s = k + i y`, `|y| <= t_max`, sampled with step `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec {
    pub k: f64,
    pub t_max: f64,
    pub h: f64,
}

impl ContourSpec {
    pub fn new(k: f64, t_max: f64, h: f64) -> Result<Self> {
        if !(k.is_finite() && t_max.is_finite() && t_max > 0.0 && h.is_finite() && h > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "contour k = {k}, T = {t_max}, h = {h}"
            )));
        }
        if h > t_max / 50.0 {
            return Err(Error::InvalidParameter(format!(
                "contour step h = {h} coarser than T/50 = {}",
                t_max / 50.0
            )));
        }
        Ok(Self { k, t_max, h })
    }
}
