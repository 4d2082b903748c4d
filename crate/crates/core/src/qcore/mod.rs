//! Complex linear algebra and the quantum-mechanical primitives built on it.

mod complement;
mod eigen;
pub mod linalg;
mod moments;
mod observable;
mod state;

pub use complement::orthonormal_complement_basis;
pub use eigen::{hermitian_eigensystem, EigenSystem, MAX_SWEEPS, OFFDIAG_THRESHOLD};
pub use linalg::{inner_product, norm, norm_sqr, Matrix};
pub use moments::{
    anticommutator_mean, commutator_mean, covariance, deviation_vector, expectation, is_eigenstate,
    matrix_mean, quantum_covariance, std_dev, variance,
};
pub use observable::{validate_hermitian, Observable};
pub use state::{normalize, QuantumState};

pub const TOL_NORM: f64 = 1e-12;
pub const TOL_HERM: f64 = 1e-10;
pub const TOL_EIG: f64 = 1e-10;
/// Norm below which a vector counts as null.
pub const TOL_NULL: f64 = 1e-12;
/// States whose norm is this close to one are rescaled; others are rejected.
pub const RENORMALIZE_WINDOW: f64 = 1e-6;
pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 64;

/// `tol` relative to `scale`, but never tighter than `tol` itself.
pub(crate) fn scaled_tol(tol: f64, scale: f64) -> f64 {
    tol * scale.max(1.0)
}
