//! Density of a sum of independent lognormals from the boundary values
//! `phi(-t + i0)`, and the Thorin density `Im[phi'/phi](-t + i0) / pi`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::approx::{small_z_series, SmallZConfig};
use crate::error::{Error, Result};
use crate::filon::FilonMesh;
use crate::laplace::{continued_transform, transform, transform_derivative};
use crate::params::{CutPlanePoint, LognormalParams};

/// Default tolerance on the estimated density error from truncating the mesh.
pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentList {
    components: Vec<LognormalParams>,
}

impl ComponentList {
    pub fn new(components: Vec<LognormalParams>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter("component list is empty".into()));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[LognormalParams] {
        &self.components
    }

    pub fn mean(&self) -> f64 {
        self.components.iter().map(LognormalParams::mean).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum BoundaryMethod {
    ContinuationFilon,
    #[default]
    MellinBarnes,
    SmallZSeries(SmallZConfig),
}

impl BoundaryMethod {
    pub fn name(&self) -> &'static str {
        match self {
            Self::ContinuationFilon => "continuation-filon",
            Self::MellinBarnes => "mellin-barnes",
            Self::SmallZSeries(_) => "small-z-series",
        }
    }

    /// `phi(-t + i0)` for one component.
    pub fn eval(&self, t: f64, p: &LognormalParams) -> Result<Complex64> {
        let z = CutPlanePoint::upper_limit(t)?;
        match self {
            Self::ContinuationFilon => continued_transform(z, p),
            Self::MellinBarnes => transform(z, p),
            Self::SmallZSeries(cfg) => Ok(small_z_series(z, p, cfg)?.value),
        }
    }
}

/// `(i step)^2` for `i = 0, 1, ..., ceil(t_max_sqrt / step)`, extended by one node if needed
/// to make the count odd.
pub fn build_boundary_mesh(t_max_sqrt: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite() && t_max_sqrt.is_finite() && t_max_sqrt > step) {
        return Err(Error::Mesh(format!(
            "need 0 < step < t_max_sqrt, got step = {step}, t_max_sqrt = {t_max_sqrt}"
        )));
    }
    let mut last = (t_max_sqrt / step - 1e-9).ceil() as usize;
    if last % 2 == 1 {
        last += 1;
    }
    let nodes: Vec<f64> = (0..=last).map(|i| (i as f64 * step).powi(2)).collect();
    if nodes.len() < 3 {
        return Err(Error::Mesh(format!("only {} nodes", nodes.len())));
    }
    Ok(nodes)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySamples {
    t_nodes: Vec<f64>,
    values: Vec<Complex64>,
    method: BoundaryMethod,
}

impl BoundarySamples {
    pub fn t_nodes(&self) -> &[f64] {
        &self.t_nodes
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn method(&self) -> BoundaryMethod {
        self.method
    }
}

fn check_mesh(mesh: &[f64]) -> Result<()> {
    if mesh.len() < 3 || mesh.len() % 2 == 0 {
        return Err(Error::Mesh(format!("node count {} must be odd and >= 3", mesh.len())));
    }
    if mesh[0] != 0.0 || mesh.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Mesh("nodes must start at 0 and increase".into()));
    }
    Ok(())
}

fn product_at(cl: &ComponentList, t: f64, method: &BoundaryMethod) -> Result<Complex64> {
    if t == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    cl.components
        .iter()
        .enumerate()
        .try_fold(Complex64::new(1.0, 0.0), |acc, (j, p)| {
            method.eval(t, p).map(|v| acc * v).map_err(|e| Error::Evaluator {
                component: j,
                t,
                source: Box::new(e),
            })
        })
}

/// `prod_j phi_j(-t + i0)` on the mesh, with the value at `t = 0` pinned to 1.
pub fn boundary_transform(cl: &ComponentList, mesh: &[f64], method: BoundaryMethod) -> Result<BoundarySamples> {
    check_mesh(mesh)?;
    let values = mesh
        .iter()
        .map(|&t| product_at(cl, t, &method))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundarySamples {
        t_nodes: mesh.to_vec(),
        values,
        method,
    })
}

/// As [`boundary_transform`], evaluating mesh nodes on the current rayon pool.
#[cfg(feature = "parallel")]
pub fn boundary_transform_par(cl: &ComponentList, mesh: &[f64], method: BoundaryMethod) -> Result<BoundarySamples> {
    use rayon::prelude::*;
    check_mesh(mesh)?;
    let values = mesh
        .par_iter()
        .map(|&t| product_at(cl, t, &method))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundarySamples {
        t_nodes: mesh.to_vec(),
        values,
        method,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityCurve {
    pub x_nodes: Vec<f64>,
    pub f_values: Vec<f64>,
    pub mass_estimate: f64,
}

impl DensityCurve {
    /// Trapezoid estimate of `int x f(x) dx` over the curve.
    pub fn mean_estimate(&self) -> f64 {
        let g: Vec<f64> = self.x_nodes.iter().zip(&self.f_values).map(|(x, f)| x * f).collect();
        trapezoid(&self.x_nodes, &g)
    }
}

fn trapezoid(x: &[f64], y: &[f64]) -> f64 {
    x.windows(2)
        .zip(y.windows(2))
        .map(|(xw, yw)| 0.5 * (xw[1] - xw[0]) * (yw[0] + yw[1]))
        .sum()
}

/// `f(x) = -(1/pi) int_0^inf Im phi(-t + i0) e^{-t x} dt` with the default tail tolerance.
pub fn density_from_boundary(bs: &BoundarySamples, x_nodes: &[f64]) -> Result<DensityCurve> {
    density_from_boundary_with(bs, x_nodes, DEFAULT_TAIL_TOLERANCE)
}

/// As [`density_from_boundary`]; fails with [`Error::Tail`] when
/// `|Im phi(-t_end + i0)| e^{-t_end x} / (pi x)`, the size of the dropped tail if `Im phi` stayed
/// flat beyond the mesh, exceeds `tail_tol` at some `x`.
pub fn density_from_boundary_with(bs: &BoundarySamples, x_nodes: &[f64], tail_tol: f64) -> Result<DensityCurve> {
    if let Some(&x) = x_nodes.iter().find(|&&x| !(x > 0.0 && x.is_finite())) {
        return Err(Error::InvalidParameter(format!("density needs x > 0, got {x}")));
    }
    let imag: Vec<f64> = bs.values.iter().map(|v| v.im).collect();
    let t_end = *bs.t_nodes.last().expect("validated mesh");
    let im_end = imag.last().copied().unwrap_or(0.0).abs();
    for &x in x_nodes {
        let estimate = im_end * (-t_end * x).exp() / (PI * x);
        if estimate > tail_tol {
            return Err(Error::Tail { x, estimate });
        }
    }
    let mesh = FilonMesh::new(&bs.t_nodes, &imag)?;
    let f_values: Vec<f64> = x_nodes.iter().map(|&x| -mesh.integrate_exponential(x) / PI).collect();
    let mass_estimate = trapezoid(x_nodes, &f_values);
    Ok(DensityCurve {
        x_nodes: x_nodes.to_vec(),
        f_values,
        mass_estimate,
    })
}

/// `U(t) = Im[phi'(-t + i0) / phi(-t + i0)] / pi`.
pub fn thorin_density(t: f64, p: &LognormalParams) -> Result<f64> {
    let z = CutPlanePoint::upper_limit(t)?;
    let phi = transform(z, p)?;
    if phi.norm() < 1e-280 {
        return Err(Error::Division(phi.norm()));
    }
    let d = transform_derivative(z, p)?;
    Ok((d / phi).im / PI)
}
