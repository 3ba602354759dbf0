//! Complex Gamma function.
//!
//! `ln_gamma` uses the 14-term Lanczos sum (g = 607/128) on `Re s >= 1/2` and the
//! reflection formula elsewhere. The returned logarithm is *a* logarithm of
//! Gamma(s); its imaginary part is not reduced to the principal branch.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{finite, Error, Result};

const LANCZOS_G_HALF: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const POLE_EPS: f64 = 1e-300;

fn is_pole(s: Complex64) -> bool {
    s.re <= 0.0 && s.im.abs() <= POLE_EPS && (s.re - s.re.round()).abs() <= POLE_EPS
}

fn ln_gamma_right(s: Complex64) -> Complex64 {
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    let mut y = s;
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    let tmp = s + LANCZOS_G_HALF;
    (s + 0.5) * tmp.ln() - tmp + LN_SQRT_2PI + (ser / s).ln()
}

/// Logarithm of `sin(pi s)`, accurate near the integers and free of overflow for
/// large `|Im s|`.
pub(crate) fn ln_sin_pi(s: Complex64) -> Complex64 {
    let n = s.re.round();
    let r = Complex64::new(s.re - n, s.im);
    let sign = if (n as i64).rem_euclid(2) == 0 {
        0.0
    } else {
        PI.copysign(s.im)
    };
    if r.im.abs() < 20.0 {
        let v = Complex64::new(
            (PI * r.re).sin() * (PI * r.im).cosh(),
            (PI * r.re).cos() * (PI * r.im).sinh(),
        );
        return v.ln() + Complex64::new(0.0, sign);
    }
    // sin(pi r) = -e^{-i pi r}/(2i) (1 - e^{2 i pi r}) for Im r > 0, mirrored below.
    let i = Complex64::i();
    let core = if r.im > 0.0 {
        -i * PI * r + Complex64::new(0.5f64.ln(), PI / 2.0) + (1.0 - (2.0 * i * PI * r).exp()).ln()
    } else {
        i * PI * r + Complex64::new(0.5f64.ln(), -PI / 2.0) + (1.0 - (-2.0 * i * PI * r).exp()).ln()
    };
    core + Complex64::new(0.0, sign)
}

/// A logarithm of Gamma(s).
pub fn ln_gamma(s: Complex64) -> Result<Complex64> {
    if is_pole(s) {
        return Err(Error::Pole(s));
    }
    let v = if s.re >= 0.5 {
        ln_gamma_right(s)
    } else {
        Complex64::new(PI.ln(), 0.0) - ln_sin_pi(s) - ln_gamma_right(1.0 - s)
    };
    finite("ln_gamma", v)
}

/// Gamma(s) for complex `s` off the poles `0, -1, -2, ...`.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if s.im == 0.0 && s.re > 0.0 && s.re == s.re.round() && s.re <= 20.0 {
        // exact for small positive integers
        let mut f = 1.0;
        for k in 2..(s.re as u32) {
            f *= f64::from(k);
        }
        return Ok(Complex64::new(f, 0.0));
    }
    let v = ln_gamma(s)?.exp();
    let v = if s.im == 0.0 { Complex64::new(v.re, 0.0) } else { v };
    finite("gamma", v)
}

/// Real `ln n!` by direct summation; exact enough for the term recurrences here.
pub(crate) fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}
