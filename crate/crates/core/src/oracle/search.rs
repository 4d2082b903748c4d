//! Brute-force maximization of the Maccone-Pati bounds over random vectors
//! in the orthogonal complement, as an independent check of the analytic
//! optimum.

use serde::{Deserialize, Serialize};

use super::random::random_unit_in_basis;
use super::rng::PinnedRng;
use crate::bounds::{l1_bound, l2_bound, optimal_xi_perp_l1, optimal_xi_perp_l2, SignChoice};
use crate::error::{Error, Result};
use crate::qcore::{orthonormal_complement_basis, Observable, QuantumState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Which {
    L1,
    L2,
}

impl Which {
    pub fn evaluate(
        self,
        a: &Observable,
        b: &Observable,
        xi: &QuantumState,
        perp: &QuantumState,
        sign: SignChoice,
    ) -> Result<f64> {
        match self {
            Which::L1 => l1_bound(a, b, xi, perp, sign),
            Which::L2 => l2_bound(a, b, xi, perp, sign),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    /// Best value over the random samples only.
    pub best_value: f64,
    pub best_vector: QuantumState,
    pub samples_used: usize,
    pub analytic_value: f64,
    /// `analytic_value - best_value`; never meaningfully negative.
    pub gap: f64,
}

pub fn search_optimal_xi_perp(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    which: Which,
    sign: SignChoice,
    samples: usize,
    seed: u64,
) -> Result<SearchResult> {
    search_with(a, b, xi, which, sign, samples, &mut PinnedRng::from_seed(seed))
}

pub fn search_with(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    which: Which,
    sign: SignChoice,
    samples: usize,
    rng: &mut PinnedRng,
) -> Result<SearchResult> {
    if samples == 0 {
        return Err(Error::TooFewSamples { required: 1, got: 0 });
    }
    let basis = orthonormal_complement_basis(xi)?;
    let mut best: Option<(f64, QuantumState)> = None;
    for _ in 0..samples {
        let perp = random_unit_in_basis(&basis, rng)?;
        let value = which.evaluate(a, b, xi, &perp, sign)?;
        if best.as_ref().map_or(true, |(v, _)| value > *v) {
            best = Some((value, perp));
        }
    }
    let (best_value, best_vector) = best.expect("samples >= 1");
    let analytic = match which {
        Which::L1 => optimal_xi_perp_l1(a, b, xi, sign)?,
        Which::L2 => optimal_xi_perp_l2(a, b, xi, sign)?,
    };
    Ok(SearchResult {
        best_value,
        best_vector,
        samples_used: samples,
        analytic_value: analytic.bound_value,
        gap: analytic.bound_value - best_value,
    })
}
