//! Random states, observables and complement vectors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::rng::PinnedRng;
use crate::error::{Error, Result};
use crate::qcore::linalg::{axpy, ZERO};
use crate::qcore::{normalize, orthonormal_complement_basis, Matrix, Observable, QuantumState};
use crate::qcore::{MAX_DIM, MIN_DIM};

/// Reproducible batch of random instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub dim: usize,
    pub seed: u64,
    pub count: usize,
}

pub(crate) fn check_range(dim: usize) -> Result<()> {
    if (MIN_DIM..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange(dim))
    }
}

/// Haar-random pure state: normalized vector of i.i.d. complex Gaussians.
pub fn random_state_with(dim: usize, rng: &mut PinnedRng) -> Result<QuantumState> {
    check_range(dim)?;
    let v: Vec<Complex64> = (0..dim).map(|_| rng.complex_gaussian()).collect();
    normalize(&v)
}

pub fn random_state(dim: usize, seed: u64) -> Result<QuantumState> {
    random_state_with(dim, &mut PinnedRng::from_seed(seed))
}

/// GUE-style observable `(G + G^dagger) / 2` with i.i.d. complex Gaussian `G`.
pub fn random_observable_with(dim: usize, rng: &mut PinnedRng) -> Result<Observable> {
    check_range(dim)?;
    let mut g = Matrix::zeros(dim);
    for r in 0..dim {
        for c in 0..dim {
            g[(r, c)] = rng.complex_gaussian();
        }
    }
    let h = g.add(&g.adjoint())?.scale(Complex64::from(0.5));
    Ok(Observable::from_hermitian_unchecked(h))
}

pub fn random_observable(dim: usize, seed: u64) -> Result<Observable> {
    random_observable_with(dim, &mut PinnedRng::from_seed(seed))
}

/// Uniform unit vector in the orthogonal complement of `xi`.
pub fn random_unit_in_complement_with(
    xi: &QuantumState,
    rng: &mut PinnedRng,
) -> Result<QuantumState> {
    let basis = orthonormal_complement_basis(xi)?;
    random_unit_in_basis(&basis, rng)
}

pub(crate) fn random_unit_in_basis(
    basis: &[QuantumState],
    rng: &mut PinnedRng,
) -> Result<QuantumState> {
    let dim = basis.first().ok_or(Error::EmptyComplement)?.dim();
    let mut v = vec![ZERO; dim];
    for b in basis {
        axpy(rng.complex_gaussian(), b.amplitudes(), &mut v);
    }
    normalize(&v)
}

pub fn random_unit_in_complement(xi: &QuantumState, seed: u64) -> Result<QuantumState> {
    random_unit_in_complement_with(xi, &mut PinnedRng::from_seed(seed))
}

/// `count` states of dimension `spec.dim`, state `k` drawn from stream `k`.
pub fn random_states(spec: &RandomSpec) -> Result<Vec<QuantumState>> {
    (0..spec.count)
        .map(|k| random_state_with(spec.dim, &mut PinnedRng::for_stream(spec.seed, k as u64)))
        .collect()
}
