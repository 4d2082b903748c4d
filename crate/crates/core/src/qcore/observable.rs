use num_complex::Complex64;

use super::linalg::{all_finite, Matrix, ONE, ZERO};
use super::state::{check_dim, QuantumState};
use super::TOL_HERM;
use crate::error::{Error, Result};

/// A Hermitian matrix. The stored entries are exactly Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    matrix: Matrix,
}

/// Accepts `m` when `max |M_jk - conj(M_kj)| <= tol_herm * (1 + max |M_jk|)`
/// and stores `(M + M^dagger) / 2`.
pub fn validate_hermitian(m: &Matrix, tol_herm: f64) -> Result<Observable> {
    check_dim(m.dim())?;
    if !all_finite(m.as_slice()) {
        return Err(Error::NonFinite);
    }
    let defect = m.hermiticity_defect();
    let allowed = tol_herm * (1.0 + m.max_abs());
    if defect > allowed {
        return Err(Error::NotHermitian { defect, allowed });
    }
    let sym = m.add(&m.adjoint())?.scale(Complex64::from(0.5));
    Ok(Observable { matrix: sym })
}

impl Observable {
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        validate_hermitian(&Matrix::from_rows(rows)?, TOL_HERM)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::from(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            matrix: Matrix::identity(dim),
        })
    }

    /// Real diagonal observable.
    pub fn diagonal(values: &[f64]) -> Result<Self> {
        check_dim(values.len())?;
        let mut m = Matrix::zeros(values.len());
        for (k, &v) in values.iter().enumerate() {
            m[(k, k)] = Complex64::from(v);
        }
        validate_hermitian(&m, TOL_HERM)
    }

    /// `|0><1| + |1><0|`
    pub fn pauli_x() -> Self {
        Self {
            matrix: Matrix::from_rows(&[vec![ZERO, ONE], vec![ONE, ZERO]]).unwrap(),
        }
    }

    pub fn pauli_y() -> Self {
        let i = Complex64::i();
        Self {
            matrix: Matrix::from_rows(&[vec![ZERO, -i], vec![i, ZERO]]).unwrap(),
        }
    }

    /// `|0><0| - |1><1|`
    pub fn pauli_z() -> Self {
        Self {
            matrix: Matrix::from_rows(&[vec![ONE, ZERO], vec![ZERO, -ONE]]).unwrap(),
        }
    }

    /// Skips validation; the caller guarantees exact Hermiticity.
    pub(crate) fn from_hermitian_unchecked(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn norm(&self) -> f64 {
        self.matrix.frobenius_norm()
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.matrix.apply(v)
    }

    pub fn apply_state(&self, s: &QuantumState) -> Result<Vec<Complex64>> {
        self.matrix.apply(s.amplitudes())
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.matrix.rows()
    }
}
