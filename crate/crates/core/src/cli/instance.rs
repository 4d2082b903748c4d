use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;
use crate::qcore::{validate_hermitian, Matrix, Observable, QuantumState, TOL_HERM};

/// On-disk description of one `(xi, A, B)` instance. Complex numbers are
/// `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dim: usize,
    pub state: Vec<Complex64>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<Complex64>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<Complex64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi_perp: Option<Vec<Complex64>>,
}

/// A validation failure tagged with the offending field.
#[derive(Debug, Clone, PartialEq)]
pub struct InstanceError {
    pub field: &'static str,
    pub source: Error,
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.source)
    }
}

impl std::error::Error for InstanceError {}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidInstance {
    pub a: Observable,
    pub b: Observable,
    pub xi: QuantumState,
    pub xi_perp: Option<QuantumState>,
}

fn tag(field: &'static str) -> impl Fn(Error) -> InstanceError {
    move |source| InstanceError { field, source }
}

fn check_len(field: &'static str, dim: usize, len: usize) -> Result<(), InstanceError> {
    if len == dim {
        Ok(())
    } else {
        Err(InstanceError {
            field,
            source: Error::DimensionMismatch {
                expected: dim,
                found: len,
            },
        })
    }
}

impl InstanceFile {
    pub fn from_parts(
        a: &Observable,
        b: &Observable,
        xi: &QuantumState,
        xi_perp: Option<&QuantumState>,
    ) -> Self {
        Self {
            dim: xi.dim(),
            state: xi.amplitudes().to_vec(),
            a: a.rows(),
            b: b.rows(),
            xi_perp: xi_perp.map(|p| p.amplitudes().to_vec()),
        }
    }

    pub fn validate(&self) -> Result<ValidInstance, InstanceError> {
        let dim = self.dim;
        check_len("state", dim, self.state.len())?;
        let xi = QuantumState::new(self.state.clone()).map_err(tag("state"))?;
        let observable = |field, rows: &[Vec<Complex64>]| -> Result<Observable, InstanceError> {
            check_len(field, dim, rows.len())?;
            let m = Matrix::from_rows(rows).map_err(tag(field))?;
            validate_hermitian(&m, TOL_HERM).map_err(tag(field))
        };
        let a = observable("A", &self.a)?;
        let b = observable("B", &self.b)?;
        let xi_perp = match &self.xi_perp {
            Some(p) => {
                check_len("xi_perp", dim, p.len())?;
                Some(QuantumState::new(p.clone()).map_err(tag("xi_perp"))?)
            }
            None => None,
        };
        Ok(ValidInstance { a, b, xi, xi_perp })
    }
}
