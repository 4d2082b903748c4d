use num_complex::Complex64;

use super::linalg::{axpy, dot, norm, scaled, ZERO};
use super::QuantumState;
use crate::error::{Error, Result};

/// Orthonormal basis of the orthogonal complement of `xi`.
///
/// `xi` is completed with the standard basis vectors, skipping the one that
/// overlaps most with `xi` (first index wins ties), and the result is run
/// through modified Gram-Schmidt with one re-orthogonalization pass.
pub fn orthonormal_complement_basis(xi: &QuantumState) -> Result<Vec<QuantumState>> {
    let d = xi.dim();
    if d < 2 {
        return Err(Error::EmptyComplement);
    }
    let amps = xi.amplitudes();
    let skip = (0..d)
        .fold((0, -1.0), |(best, best_mod), k| {
            let m = amps[k].norm();
            if m > best_mod {
                (k, m)
            } else {
                (best, best_mod)
            }
        })
        .0;

    let mut basis: Vec<Vec<Complex64>> = vec![amps.to_vec()];
    for k in (0..d).filter(|&k| k != skip) {
        let mut v = vec![ZERO; d];
        v[k] = Complex64::from(1.0);
        for _ in 0..2 {
            for b in &basis {
                let overlap = dot(b, &v);
                axpy(-overlap, b, &mut v);
            }
        }
        let n = norm(&v);
        basis.push(scaled(Complex64::from(1.0 / n), &v));
    }
    Ok(basis
        .into_iter()
        .skip(1)
        .map(QuantumState::from_unit_unchecked)
        .collect())
}
