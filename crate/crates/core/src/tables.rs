//! The four numerical tables: series values, asymptotic values and their absolute
//! differences against a quadrature benchmark.

use num_complex::Complex64;

use crate::approx::{sigma_asymptotic, small_z_series, SigmaAsymConfig, SmallZConfig};
use crate::error::{Error, Result};
use crate::laplace::direct_transform_with;
use crate::params::{CutPlanePoint, LognormalParams};
use crate::quad::QuadConfig;

pub const TABLE_Z: [f64; 7] = [0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0];
pub const SERIES_SIGMAS: [f64; 4] = [0.0625, 0.25, 0.75, 1.0];
pub const ASYMPTOTIC_SIGMAS: [f64; 4] = [1.0, 1.5, 2.0, 2.5];

/// Quadrature settings of the benchmark column.
pub const BENCHMARK: QuadConfig = QuadConfig {
    abs_tol: 1e-16,
    rel_tol: 0.0,
    max_intervals: 50_000,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub id: u8,
    pub sigmas: Vec<f64>,
    pub z: Vec<f64>,
    /// `cells[row][col]` for `z[row]`, `sigmas[col]`.
    pub cells: Vec<Vec<f64>>,
    pub absolute_difference: bool,
}

pub fn benchmark(z: f64, sigma: f64) -> Result<f64> {
    let p = LognormalParams::new(0.0, sigma)?;
    Ok(direct_transform_with(Complex64::new(z, 0.0), &p, &BENCHMARK)?.re)
}

fn approximation(id: u8, z: f64, sigma: f64) -> Result<f64> {
    let p = LognormalParams::new(0.0, sigma)?;
    let point = CutPlanePoint::real(z)?;
    let r = if id <= 2 {
        small_z_series(point, &p, &SmallZConfig::default())?
    } else {
        sigma_asymptotic(point, &p, &SigmaAsymConfig::default())?
    };
    Ok(r.value.re)
}

/// One cell: the approximation (tables 1, 3) or its distance to the benchmark (tables 2, 4).
pub fn cell(id: u8, z: f64, sigma: f64) -> Result<f64> {
    let v = approximation(id, z, sigma)?;
    if id % 2 == 0 {
        Ok((v - benchmark(z, sigma)?).abs())
    } else {
        Ok(v)
    }
}

pub fn table(id: u8) -> Result<Table> {
    let sigmas = match id {
        1 | 2 => SERIES_SIGMAS,
        3 | 4 => ASYMPTOTIC_SIGMAS,
        _ => return Err(Error::InvalidParameter(format!("table id {id} not in 1..=4"))),
    };
    let cells = TABLE_Z
        .iter()
        .map(|&z| sigmas.iter().map(|&s| cell(id, z, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        id,
        sigmas: sigmas.to_vec(),
        z: TABLE_Z.to_vec(),
        cells,
        absolute_difference: id % 2 == 0,
    })
}
