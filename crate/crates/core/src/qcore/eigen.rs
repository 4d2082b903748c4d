//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classic real Jacobi rotation to the resulting
//! real symmetric 2x2 block.

use num_complex::Complex64;

use super::linalg::{Matrix, ZERO};
use super::Observable;
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
/// Off-diagonal Frobenius norm, relative to `|A|_F`, at which sweeping stops.
pub const OFFDIAG_THRESHOLD: f64 = 1e-13;

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

impl EigenSystem {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// `V diag(values) V^dagger`
    pub fn reconstruct(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n);
        for (lambda, v) in self.values.iter().zip(&self.vectors) {
            for r in 0..n {
                for c in 0..n {
                    m[(r, c)] += *lambda * v[r] * v[c].conj();
                }
            }
        }
        m
    }
}

fn off_diagonal_norm(m: &Matrix) -> f64 {
    let n = m.dim();
    let mut acc = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                acc += m[(r, c)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Returns `G` (2x2, row-major) such that `G^dagger H G` is diagonal for the
/// Hermitian block `H = [[app, apq], [conj(apq), aqq]]`.
fn rotation(app: f64, aqq: f64, apq: Complex64) -> [Complex64; 4] {
    let b = apq.norm();
    let unphase = (apq / b).conj();
    let theta = (aqq - app) / (2.0 * b);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let sign = if theta < 0.0 { -1.0 } else { 1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    [
        Complex64::from(c),
        Complex64::from(s),
        -s * unphase,
        c * unphase,
    ]
}

pub fn hermitian_eigensystem(a: &Observable) -> Result<EigenSystem> {
    let n = a.dim();
    let mut m = a.matrix().clone();
    let mut v = Matrix::identity(n);
    let threshold = OFFDIAG_THRESHOLD * a.norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == ZERO {
                    continue;
                }
                let g = rotation(m[(p, p)].re, m[(q, q)].re, apq);
                rotate_columns(&mut m, p, q, &g);
                rotate_rows(&mut m, p, q, &g);
                rotate_columns(&mut v, p, q, &g);
                m[(p, q)] = ZERO;
                m[(q, p)] = ZERO;
                m[(p, p)] = Complex64::from(m[(p, p)].re);
                m[(q, q)] = Complex64::from(m[(q, q)].re);
            }
        }
    }
    if !converged && off_diagonal_norm(&m) > threshold {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&k| m[(k, k)].re).collect();
    let vectors = order
        .iter()
        .map(|&k| (0..n).map(|r| v[(r, k)]).collect())
        .collect();
    Ok(EigenSystem { values, vectors })
}

// M <- M G on columns p, q
fn rotate_columns(m: &mut Matrix, p: usize, q: usize, g: &[Complex64; 4]) {
    for r in 0..m.dim() {
        let (xp, xq) = (m[(r, p)], m[(r, q)]);
        m[(r, p)] = xp * g[0] + xq * g[2];
        m[(r, q)] = xp * g[1] + xq * g[3];
    }
}

// M <- G^dagger M on rows p, q
fn rotate_rows(m: &mut Matrix, p: usize, q: usize, g: &[Complex64; 4]) {
    for c in 0..m.dim() {
        let (xp, xq) = (m[(p, c)], m[(q, c)]);
        m[(p, c)] = g[0].conj() * xp + g[2].conj() * xq;
        m[(q, c)] = g[1].conj() * xp + g[3].conj() * xq;
    }
}
