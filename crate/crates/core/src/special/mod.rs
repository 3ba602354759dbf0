//! Complex special functions shared by the transform evaluators.

mod erf;
mod gamma;
mod hermite;
mod incomplete;
mod taylor;

pub use erf::{erf, erfc, erfc_real, erfcx};
pub(crate) use gamma::ln_factorial;
pub use gamma::{gamma, ln_gamma};
pub use hermite::{hermite_prob, MAX_HERMITE_DEGREE};
pub use incomplete::{
    incomplete_gamma_pair, lower_incomplete_gamma, lower_incomplete_gamma_alternating, upper_incomplete_gamma,
    IncompleteGamma,
};
pub use taylor::{a_coefficients, gamma_taylor_coeffs, zeta_int, GammaTaylorTable, EULER_GAMMA};

/// Digamma for real `x > 0` (recurrence up to 12, then the asymptotic series).
pub(crate) fn digamma(mut x: f64) -> f64 {
    let mut acc = 0.0;
    while x < 12.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv = 1.0 / (x * x);
    acc + x.ln()
        - 0.5 / x
        - inv * (1.0 / 12.0 - inv * (1.0 / 120.0 - inv * (1.0 / 252.0 - inv * (1.0 / 240.0 - inv / 132.0))))
}
