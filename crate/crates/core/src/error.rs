use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("gamma pole at s = {0}")]
    Pole(Complex64),

    #[error("{op}: result overflows f64 ({detail})")]
    Overflow { op: &'static str, detail: String },

    #[error("degree {requested} exceeds the supported maximum {max}")]
    Degree { requested: usize, max: usize },

    #[error("{op}: series did not converge within {terms} terms")]
    NonConvergence { op: &'static str, terms: usize },

    #[error("adaptive quadrature failed: error estimate {estimate:e} above tolerance {tolerance:e}")]
    QuadratureFailure { estimate: f64, tolerance: f64 },

    #[error("mesh [{lo}, {hi}] does not cover the integrand (endpoint tail ratio {ratio:e})")]
    MeshTooNarrow { lo: f64, hi: f64, ratio: f64 },

    #[error("contour abscissa k = {0} must be positive")]
    Contour(f64),

    #[error("contour truncation needs {needed} nodes, budget is {budget}")]
    Truncation { needed: usize, budget: usize },

    #[error("series term {n} overflows even in log-domain")]
    TermOverflow { n: usize },

    #[error("invalid mesh: {0}")]
    Mesh(String),

    #[error("boundary mesh ends too early: tail estimate {estimate:e} at x = {x}")]
    Tail { x: f64, estimate: f64 },

    #[error("|phi| = {0:e} too small to divide by")]
    Division(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("component {component} at t = {t}: {source}")]
    Evaluator {
        component: usize,
        t: f64,
        #[source]
        source: Box<Error>,
    },
}

/// Turns a non-finite value into an explicit overflow error.
pub(crate) fn finite(op: &'static str, value: Complex64) -> Result<Complex64> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow {
            op,
            detail: format!("{value}"),
        })
    }
}
