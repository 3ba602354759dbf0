//! Taylor coefficients of `Gamma(s) - 1/s` about the origin and the pole-removed
//! coefficients used by the large-sigma expansion.

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const MAX_TAYLOR_DEGREE: usize = 40;
const MIN_TABLE_DEGREE: usize = 20;

// B_2, B_4, ..., B_20
const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174_611.0 / 330.0,
];

/// Riemann zeta at an integer `k >= 2` by Euler-Maclaurin summation with cut-off 10.
pub fn zeta_int(k: u32) -> f64 {
    assert!(k >= 2, "zeta_int needs k >= 2");
    const CUT: f64 = 10.0;
    let s = f64::from(k);
    let mut head = 0.0;
    // small terms first
    for n in (1..10).rev() {
        head += f64::from(n).powf(-s);
    }
    let mut tail = CUT.powf(1.0 - s) / (s - 1.0) + 0.5 * CUT.powf(-s);
    // rising factorial s (s+1) ... (s+2j-2) / (2j)!
    let mut rising = s;
    let mut fact = 2.0;
    let mut power = CUT.powf(-s - 1.0);
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        if j > 0 {
            let m = 2.0 * j as f64;
            rising *= (s + m - 1.0) * (s + m);
            fact *= (m + 1.0) * (m + 2.0);
            power /= CUT * CUT;
        }
        tail += b / fact * rising * power;
    }
    head + tail
}

/// Coefficients `b_j` of `Gamma(s) - 1/s = sum_j b_j s^j`, i.e. `b_j = Gamma^(j+1)(1)/(j+1)!`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaTaylorTable {
    coeffs: Vec<f64>,
}

impl GammaTaylorTable {
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn j_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn b(&self, j: usize) -> f64 {
        self.coeffs[j]
    }

    /// `sum_j b_j s^j` truncated to the table.
    pub fn eval(&self, s: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, b| acc * s + b)
    }
}

/// Builds the table by exponentiating the power series of `ln Gamma(1+s)`,
/// `-gamma s + sum_{k>=2} (-1)^k zeta(k) s^k / k`. At least 20 coefficients are kept.
pub fn gamma_taylor_coeffs(j_max: usize) -> Result<GammaTaylorTable> {
    if j_max > MAX_TAYLOR_DEGREE {
        return Err(Error::Degree {
            requested: j_max,
            max: MAX_TAYLOR_DEGREE,
        });
    }
    let j_max = j_max.max(MIN_TABLE_DEGREE);
    let n = j_max + 2;
    // k * l_k, the derivative weights of the log series
    let mut kl = vec![0.0; n + 1];
    kl[1] = -EULER_GAMMA;
    for k in 2..=n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        kl[k] = sign * zeta_int(k as u32);
    }
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for m in 1..=n {
        let acc: f64 = (1..=m).map(|k| kl[k] * e[m - k]).sum();
        e[m] = acc / m as f64;
    }
    Ok(GammaTaylorTable {
        coeffs: e[1..=j_max + 1].to_vec(),
    })
}

/// Coefficients `a_m = b_m + (-1)^{m+1} sum_{j=1}^{N} (-1)^j / (j! j^{m+1})`.
pub fn a_coefficients(m_max: usize, n_poles: usize) -> Result<Vec<f64>> {
    let table = gamma_taylor_coeffs(m_max)?;
    Ok(a_coefficients_from(&table, m_max, n_poles))
}

pub(crate) fn a_coefficients_from(table: &GammaTaylorTable, m_max: usize, n_poles: usize) -> Vec<f64> {
    (0..=m_max)
        .map(|m| {
            let mut sum = 0.0;
            let mut fact = 1.0;
            for j in 1..=n_poles {
                fact *= j as f64;
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sum += sign / (fact * (j as f64).powi(m as i32 + 1));
            }
            let outer = if m % 2 == 0 { -1.0 } else { 1.0 };
            table.b(m) + outer * sum
        })
        .collect()
}
