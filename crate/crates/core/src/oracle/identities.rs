//! Direct numeric checks of the Hilbert-space identities the bounds rest on.

use num_complex::Complex64;

use crate::error::Result;
use crate::qcore::linalg::{add, check_dims, dot, norm_sqr, sub};

/// `|2(|u|^2 + |v|^2) - |u+v|^2 - |u-v|^2|`.
pub fn check_parallelogram(u: &[Complex64], v: &[Complex64]) -> Result<f64> {
    check_dims(u.len(), v.len())?;
    let sides = 2.0 * (norm_sqr(u) + norm_sqr(v));
    let diagonals = norm_sqr(&add(u, v)?) + norm_sqr(&sub(u, v)?);
    Ok((sides - diagonals).abs())
}

/// Cauchy-Schwarz slack `<u|u><v|v> - |<u|v>|^2`. Null vectors give `0`.
pub fn check_csi(u: &[Complex64], v: &[Complex64]) -> Result<f64> {
    check_dims(u.len(), v.len())?;
    Ok(norm_sqr(u) * norm_sqr(v) - dot(u, v).norm_sqr())
}
