use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::linalg::{self, all_finite, scaled};
use super::{MAX_DIM, RENORMALIZE_WINDOW, TOL_NORM, TOL_NULL};
use crate::error::{Error, Result};

/// A normalized pure state `|xi>` of dimension `1..=64`.
///
/// Serializes as the bare amplitude list, each amplitude an `[re, im]` pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct QuantumState {
    amplitudes: Vec<Complex64>,
}

impl QuantumState {
    /// Amplitudes with norm within `TOL_NORM` of one are kept verbatim, those
    /// within `1e-6` are rescaled, anything further off is rejected.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        check_dim(amplitudes.len())?;
        if !all_finite(&amplitudes) {
            return Err(Error::NonFinite);
        }
        let n = linalg::norm(&amplitudes);
        if (n - 1.0).abs() >= RENORMALIZE_WINDOW {
            return Err(Error::NotNormalized(n));
        }
        if (n - 1.0).abs() <= TOL_NORM {
            return Ok(Self { amplitudes });
        }
        Ok(Self {
            amplitudes: scaled(Complex64::from(1.0 / n), &amplitudes),
        })
    }

    /// Computational basis vector `|k>`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        check_dim(dim)?;
        if k >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: k + 1,
            });
        }
        let mut amplitudes = vec![linalg::ZERO; dim];
        amplitudes[k] = linalg::ONE;
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `e^{i theta} |xi>`; every physical quantity is unchanged.
    pub fn with_phase(&self, theta: f64) -> Self {
        Self {
            amplitudes: scaled(Complex64::from_polar(1.0, theta), &self.amplitudes),
        }
    }

    pub(crate) fn from_unit_unchecked(amplitudes: Vec<Complex64>) -> Self {
        Self { amplitudes }
    }
}

impl AsRef<[Complex64]> for QuantumState {
    fn as_ref(&self) -> &[Complex64] {
        &self.amplitudes
    }
}

impl TryFrom<Vec<Complex64>> for QuantumState {
    type Error = Error;

    fn try_from(amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::new(amplitudes)
    }
}

impl From<QuantumState> for Vec<Complex64> {
    fn from(state: QuantumState) -> Self {
        state.amplitudes
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(dim))
    }
}

/// `u / |u|` as a state; fails on (numerically) null input.
pub fn normalize(u: &[Complex64]) -> Result<QuantumState> {
    check_dim(u.len())?;
    if !all_finite(u) {
        return Err(Error::NonFinite);
    }
    let n = linalg::norm(u);
    if n <= TOL_NULL {
        return Err(Error::NullVector(n));
    }
    Ok(QuantumState {
        amplitudes: scaled(Complex64::from(1.0 / n), u),
    })
}
