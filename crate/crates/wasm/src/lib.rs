//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export returns a flat `Float64Array`; the page does the reshaping.

use lnlaplace::approx::{sigma_asymptotic, small_z_series, SigmaAsymConfig, SmallZConfig};
use lnlaplace::inversion::{
    boundary_transform, build_boundary_mesh, density_from_boundary, BoundaryMethod, ComponentList,
};
use lnlaplace::laplace::{continued_transform, direct_transform, transform};
use lnlaplace::{CutPlanePoint, LognormalParams};
use num_complex::Complex64;
use wasm_bindgen::prelude::*;

fn components(mus: &[f64], sigmas: &[f64]) -> Result<ComponentList, String> {
    if mus.len() != sigmas.len() {
        return Err(format!("{} means but {} sigmas", mus.len(), sigmas.len()));
    }
    let list = mus
        .iter()
        .zip(sigmas)
        .map(|(&m, &s)| LognormalParams::new(m, s))
        .collect::<lnlaplace::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    ComponentList::new(list).map_err(|e| e.to_string())
}

/// Density of the sum on `n` equally spaced points of `(0, x_max]`, as `[x0, f0, x1, f1, ...]`.
pub fn density(mus: &[f64], sigmas: &[f64], x_max: f64, n: usize) -> Result<Vec<f64>, String> {
    if !(x_max > 0.0) || n == 0 {
        return Err("need x_max > 0 and at least one point".into());
    }
    let cl = components(mus, sigmas)?;
    let mesh = build_boundary_mesh(9.0, 0.01).map_err(|e| e.to_string())?;
    let bs =
        boundary_transform(&cl, &mesh, BoundaryMethod::MellinBarnes).map_err(|e| e.to_string())?;
    let xs: Vec<f64> = (1..=n).map(|i| x_max * i as f64 / n as f64).collect();
    let curve = density_from_boundary(&bs, &xs).map_err(|e| e.to_string())?;
    Ok(xs
        .iter()
        .zip(&curve.f_values)
        .flat_map(|(&x, &f)| [x, f])
        .collect())
}

/// `phi(-t + i0)` for `n` points of `(0, t_max]`, as `[t0, re0, im0, ...]`.
pub fn boundary(mu: f64, sigma: f64, t_max: f64, n: usize) -> Result<Vec<f64>, String> {
    let p = LognormalParams::new(mu, sigma).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(3 * n);
    for i in 1..=n {
        let t = t_max * i as f64 / n as f64;
        let z = CutPlanePoint::upper_limit(t).map_err(|e| e.to_string())?;
        let v = transform(z, &p).map_err(|e| e.to_string())?;
        out.extend([t, v.re, v.im]);
    }
    Ok(out)
}

/// Every evaluator at one point, as `[re, im, error_bound]` per method in the order
/// mellin-barnes, continuation, direct, small-z series, sigma-asymptotic.
/// Methods that do not apply at `z` give NaN.
pub fn compare(mu: f64, sigma: f64, re: f64, im: f64) -> Result<Vec<f64>, String> {
    let p = LognormalParams::new(mu, sigma).map_err(|e| e.to_string())?;
    let z = CutPlanePoint::interior(Complex64::new(re, im)).map_err(|e| e.to_string())?;
    let nan = [f64::NAN; 3];
    let plain = |v: lnlaplace::Result<Complex64>| v.map_or(nan, |v| [v.re, v.im, f64::NAN]);
    let bounded = |r: lnlaplace::Result<lnlaplace::approx::ApproxResult>| {
        r.map_or(nan, |r| {
            [r.value.re, r.value.im, r.error_bound.unwrap_or(f64::NAN)]
        })
    };
    let direct = if re >= 0.0 {
        plain(direct_transform(z.value(), &p))
    } else {
        nan
    };
    Ok([
        plain(transform(z, &p)),
        plain(continued_transform(z, &p)),
        direct,
        bounded(small_z_series(z, &p, &SmallZConfig::default())),
        bounded(sigma_asymptotic(z, &p, &SigmaAsymConfig::default())),
    ]
    .concat())
}

#[wasm_bindgen(js_name = density)]
pub fn density_js(mus: &[f64], sigmas: &[f64], x_max: f64, n: usize) -> Result<Vec<f64>, JsValue> {
    density(mus, sigmas, x_max, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = boundary)]
pub fn boundary_js(mu: f64, sigma: f64, t_max: f64, n: usize) -> Result<Vec<f64>, JsValue> {
    boundary(mu, sigma, t_max, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = compare)]
pub fn compare_js(mu: f64, sigma: f64, re: f64, im: f64) -> Result<Vec<f64>, JsValue> {
    compare(mu, sigma, re, im).map_err(|e| JsValue::from_str(&e))
}
