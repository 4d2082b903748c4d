//! Lower bounds on products and sums of variances.
//!
//! With deviation vectors `psi = (A - <A>)|xi>` and `phi = (B - <B>)|xi>`:
//!
//! * `T1 = CovQ(A,B)^2 + |<[A,B]>|^2 / 4` bounds `Var(A) Var(B)`,
//! * `T2 = |<[A,B]>|` bounds `Var(A) + Var(B)`,
//! * `L1 = |<xi|(A + s B)|perp>|^2 / 2` and
//!   `L2 = s i<[A,B]> + |<xi|(A + s i B)|perp>|^2` bound `Var(A) + Var(B)`
//!   for every unit `|perp>` orthogonal to `|xi>` and either sign `s`.
//!
//! `L1` is maximized by `|perp> ~ psi + s phi` and `L2` by
//! `|perp> ~ psi - s i phi`, which saturate the Cauchy-Schwarz step of the
//! respective derivation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::linalg::{add, check_dims, dot, norm, scaled, I};
use crate::qcore::{
    commutator_mean, deviation_vector, is_eigenstate, normalize, orthonormal_complement_basis,
    quantum_covariance, variance, Observable, QuantumState, TOL_EIG, TOL_NULL,
};

/// The `+` or `-` branch of the Maccone-Pati bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum SignChoice {
    Plus,
    Minus,
}

impl SignChoice {
    pub const BOTH: [SignChoice; 2] = [SignChoice::Plus, SignChoice::Minus];

    pub fn value(self) -> f64 {
        match self {
            SignChoice::Plus => 1.0,
            SignChoice::Minus => -1.0,
        }
    }
}

impl From<SignChoice> for i8 {
    fn from(s: SignChoice) -> i8 {
        match s {
            SignChoice::Plus => 1,
            SignChoice::Minus => -1,
        }
    }
}

impl TryFrom<i8> for SignChoice {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(SignChoice::Plus),
            -1 => Ok(SignChoice::Minus),
            other => Err(format!("sign must be +1 or -1, got {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateKind {
    UserSupplied,
    AnalyticOptimum,
    SearchOptimum,
}

/// A unit vector orthogonal to the state and the bound value it attains.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalCandidate {
    pub vector: QuantumState,
    pub bound_value: f64,
    pub sign: SignChoice,
    pub kind: CandidateKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignPair {
    pub plus: f64,
    pub minus: f64,
}

impl SignPair {
    pub fn get(&self, sign: SignChoice) -> f64 {
        match sign {
            SignChoice::Plus => self.plus,
            SignChoice::Minus => self.minus,
        }
    }

    /// Larger branch; `+` unless `-` wins by more than `tol`.
    pub fn best(&self, tol: f64) -> (SignChoice, f64) {
        if self.minus > self.plus + tol {
            (SignChoice::Minus, self.minus)
        } else {
            (SignChoice::Plus, self.plus)
        }
    }
}

/// Everything computed for one `(xi, A, B)` instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub dim: usize,
    pub var_a: f64,
    pub var_b: f64,
    pub sum_var: f64,
    pub prod_var: f64,
    pub covq: f64,
    pub comm_mean: Complex64,
    pub comm_mean_abs: f64,
    pub t1: f64,
    pub t2: f64,
    pub l1: f64,
    pub l1_sign: SignChoice,
    pub l1_candidate: OrthogonalCandidate,
    pub l1_by_sign: SignPair,
    pub l2: f64,
    pub l2_sign: SignChoice,
    pub l2_candidate: OrthogonalCandidate,
    /// The losing branch may be negative; it is reported unclamped.
    pub l2_by_sign: SignPair,
    pub mpur: f64,
    pub hrsur_trivial: bool,
    pub common_eigenvector: bool,
    pub saturation_gap: f64,
    pub tol: f64,
}

fn check_pair(a: &Observable, b: &Observable, xi: &QuantumState) -> Result<()> {
    check_dims(a.dim(), b.dim())?;
    check_dims(a.dim(), xi.dim())
}

/// Absolute tolerance for quantities quadratic in the observables.
pub fn instance_tol(a: &Observable, b: &Observable) -> f64 {
    let scale = a.norm() + b.norm();
    TOL_EIG * (scale * scale).max(1.0)
}

fn check_perp(xi: &QuantumState, perp: &QuantumState) -> Result<()> {
    check_dims(xi.dim(), perp.dim())?;
    let overlap = dot(xi.amplitudes(), perp.amplitudes()).norm();
    if overlap > TOL_EIG {
        return Err(Error::NotOrthogonal(overlap));
    }
    Ok(())
}

/// `T1 = CovQ(A,B)^2 + |<[A,B]>|^2 / 4`.
pub fn hrsur_product_bound(a: &Observable, b: &Observable, xi: &QuantumState) -> Result<f64> {
    check_pair(a, b, xi)?;
    let covq = quantum_covariance(a, b, xi)?;
    let comm = commutator_mean(a, b, xi)?;
    Ok(covq * covq + 0.25 * comm.norm_sqr())
}

/// `T2 = |<[A,B]>|`.
pub fn hrsur_sum_bound(a: &Observable, b: &Observable, xi: &QuantumState) -> Result<f64> {
    check_pair(a, b, xi)?;
    Ok(commutator_mean(a, b, xi)?.norm())
}

/// `(<xi|A|perp>, <xi|B|perp>)`
fn transition_elements(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    perp: &QuantumState,
) -> Result<(Complex64, Complex64)> {
    check_pair(a, b, xi)?;
    check_perp(xi, perp)?;
    let ta = a.matrix().sandwich(xi.amplitudes(), perp.amplitudes())?;
    let tb = b.matrix().sandwich(xi.amplitudes(), perp.amplitudes())?;
    Ok((ta, tb))
}

/// `|<xi|(A + s B)|perp>|^2 / 2`.
pub fn l1_bound(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    perp: &QuantumState,
    sign: SignChoice,
) -> Result<f64> {
    let (ta, tb) = transition_elements(a, b, xi, perp)?;
    Ok(0.5 * (ta + sign.value() * tb).norm_sqr())
}

/// `s i<[A,B]> + |<xi|(A + s i B)|perp>|^2`, both signs moving together.
/// Can be negative for the losing sign.
pub fn l2_bound(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    perp: &QuantumState,
    sign: SignChoice,
) -> Result<f64> {
    let (ta, tb) = transition_elements(a, b, xi, perp)?;
    let s = sign.value();
    let comm_term = (s * I * commutator_mean(a, b, xi)?).re;
    Ok(comm_term + (ta + s * I * tb).norm_sqr())
}

/// Normalizes `w` into the complement, or falls back to the first complement
/// basis vector when `w` is numerically null.
fn direction_or_fallback(
    w: &[Complex64],
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
) -> Result<QuantumState> {
    if xi.dim() < 2 {
        return Err(Error::EmptyComplement);
    }
    let threshold = TOL_NULL * (a.norm() + b.norm()).max(1.0);
    if norm(w) <= threshold {
        return Ok(orthonormal_complement_basis(xi)?.swap_remove(0));
    }
    // w is orthogonal to xi up to round-off; project once more before use.
    let overlap = dot(xi.amplitudes(), w);
    let mut v = w.to_vec();
    for (vi, x) in v.iter_mut().zip(xi.amplitudes()) {
        *vi -= overlap * x;
    }
    normalize(&v)
}

/// The `|perp>` proportional to `(psi + s phi)` and its `L1` value.
pub fn optimal_xi_perp_l1(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    sign: SignChoice,
) -> Result<OrthogonalCandidate> {
    check_pair(a, b, xi)?;
    let psi = deviation_vector(a, xi)?;
    let phi = deviation_vector(b, xi)?;
    let w = add(&psi, &scaled(Complex64::from(sign.value()), &phi))?;
    let vector = direction_or_fallback(&w, a, b, xi)?;
    let bound_value = l1_bound(a, b, xi, &vector, sign)?;
    Ok(OrthogonalCandidate {
        vector,
        bound_value,
        sign,
        kind: CandidateKind::AnalyticOptimum,
    })
}

/// The `|perp>` proportional to `(psi - s i phi)` and its `L2` value, which
/// always equals `Var(A) + Var(B)`.
pub fn optimal_xi_perp_l2(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    sign: SignChoice,
) -> Result<OrthogonalCandidate> {
    check_pair(a, b, xi)?;
    let psi = deviation_vector(a, xi)?;
    let phi = deviation_vector(b, xi)?;
    let w = add(&psi, &scaled(-sign.value() * I, &phi))?;
    let vector = direction_or_fallback(&w, a, b, xi)?;
    let bound_value = l2_bound(a, b, xi, &vector, sign)?;
    Ok(OrthogonalCandidate {
        vector,
        bound_value,
        sign,
        kind: CandidateKind::AnalyticOptimum,
    })
}

/// Computes every bound for one instance. With `user_perp` the Maccone-Pati
/// bounds are evaluated at that vector; otherwise at the analytic optimum of
/// each bound and sign.
pub fn bound_report(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    user_perp: Option<&QuantumState>,
) -> Result<BoundReport> {
    check_pair(a, b, xi)?;
    if xi.dim() < 2 {
        return Err(Error::EmptyComplement);
    }
    let tol = instance_tol(a, b);
    let var_a = variance(a, xi)?;
    let var_b = variance(b, xi)?;
    let covq = quantum_covariance(a, b, xi)?;
    let comm_mean = commutator_mean(a, b, xi)?;
    let t1 = hrsur_product_bound(a, b, xi)?;
    let t2 = hrsur_sum_bound(a, b, xi)?;

    let mut l1_candidates = Vec::with_capacity(2);
    let mut l2_candidates = Vec::with_capacity(2);
    for sign in SignChoice::BOTH {
        match user_perp {
            Some(perp) => {
                let user = |bound_value| OrthogonalCandidate {
                    vector: perp.clone(),
                    bound_value,
                    sign,
                    kind: CandidateKind::UserSupplied,
                };
                l1_candidates.push(user(l1_bound(a, b, xi, perp, sign)?));
                l2_candidates.push(user(l2_bound(a, b, xi, perp, sign)?));
            }
            None => {
                l1_candidates.push(optimal_xi_perp_l1(a, b, xi, sign)?);
                l2_candidates.push(optimal_xi_perp_l2(a, b, xi, sign)?);
            }
        }
    }
    let pair = |c: &[OrthogonalCandidate]| SignPair {
        plus: c[0].bound_value,
        minus: c[1].bound_value,
    };
    let l1_by_sign = pair(&l1_candidates);
    let l2_by_sign = pair(&l2_candidates);
    let (l1_sign, l1) = l1_by_sign.best(tol);
    let (l2_sign, l2) = l2_by_sign.best(tol);
    let pick = |mut c: Vec<OrthogonalCandidate>, s: SignChoice| match s {
        SignChoice::Plus => c.swap_remove(0),
        SignChoice::Minus => c.swap_remove(1),
    };

    let sum_var = var_a + var_b;
    let mpur = l1.max(l2);
    Ok(BoundReport {
        dim: xi.dim(),
        var_a,
        var_b,
        sum_var,
        prod_var: var_a * var_b,
        covq,
        comm_mean,
        comm_mean_abs: comm_mean.norm(),
        t1,
        t2,
        l1,
        l1_sign,
        l1_candidate: pick(l1_candidates, l1_sign),
        l1_by_sign,
        l2,
        l2_sign,
        l2_candidate: pick(l2_candidates, l2_sign),
        l2_by_sign,
        mpur,
        hrsur_trivial: t1 <= tol && t2 <= tol && sum_var > tol,
        common_eigenvector: is_eigenstate(a, xi, tol)? && is_eigenstate(b, xi, tol)?,
        saturation_gap: sum_var - mpur,
        tol,
    })
}
