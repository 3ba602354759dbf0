use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_HERMITE_DEGREE: usize = 64;

/// Probabilist's Hermite polynomial `He_m(x)` by the three-term recurrence.
pub fn hermite_prob(m: usize, x: Complex64) -> Result<Complex64> {
    if m > MAX_HERMITE_DEGREE {
        return Err(Error::Degree {
            requested: m,
            max: MAX_HERMITE_DEGREE,
        });
    }
    let mut prev = Complex64::new(1.0, 0.0);
    if m == 0 {
        return Ok(prev);
    }
    let mut cur = x;
    for k in 1..m {
        let next = x * cur - (k as f64) * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
