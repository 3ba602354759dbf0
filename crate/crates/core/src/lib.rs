//! Laplace transform of the lognormal distribution: analytic continuation,
//! closed-form approximations and numerical inversion.

pub mod approx;
#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod filon;
pub mod inversion;
pub mod laplace;
pub mod params;
pub mod quad;
pub mod special;
pub mod tables;

pub use error::{Error, Result};
pub use params::{Boundary, ContourSpec, CutPlanePoint, LognormalParams};
