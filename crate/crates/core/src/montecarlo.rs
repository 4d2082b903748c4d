//! Born-rule measurement simulation.
//!
//! Outcomes of an observable are sampled from the state's Born distribution
//! and the variance is estimated from the samples, giving a check of the
//! analytic bounds that shares no code with them beyond the eigensolver.

use serde::{Deserialize, Serialize};

use crate::bounds::bound_report;
use crate::error::{Error, Result};
use crate::oracle::PinnedRng;
use crate::qcore::{hermitian_eigensystem, inner_product, Observable, QuantumState, TOL_EIG};

/// Width of the statistical acceptance band, in standard errors.
pub const SIGMA_MARGIN: f64 = 5.0;
/// Absolute slack added to every statistical comparison.
pub const CHECK_TOL: f64 = 1e-9;

/// Distinct eigenvalues (ascending) and their Born probabilities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BornDistribution {
    pub values: Vec<f64>,
    pub probabilities: Vec<f64>,
}

impl BornDistribution {
    pub fn mean(&self) -> f64 {
        self.values.iter().zip(&self.probabilities).map(|(v, p)| v * p).sum()
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.values
            .iter()
            .zip(&self.probabilities)
            .map(|(v, p)| p * (v - m) * (v - m))
            .sum()
    }

    pub fn total_probability(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    pub fn probability_of(&self, value: f64, tol: f64) -> f64 {
        self.values
            .iter()
            .zip(&self.probabilities)
            .filter(|(v, _)| (*v - value).abs() <= tol)
            .map(|(_, p)| p)
            .sum()
    }
}

/// Eigenvalues closer than `TOL_EIG * |A|` are merged into one outcome.
pub fn born_distribution(a: &Observable, xi: &QuantumState) -> Result<BornDistribution> {
    crate::qcore::linalg::check_dims(a.dim(), xi.dim())?;
    let es = hermitian_eigensystem(a)?;
    let merge = TOL_EIG * a.norm();
    let mut values: Vec<f64> = Vec::new();
    let mut probabilities: Vec<f64> = Vec::new();
    let mut group_start = f64::NEG_INFINITY;
    let mut group_sum = 0.0;
    let mut group_len = 0usize;
    for (lambda, v) in es.values.iter().zip(&es.vectors) {
        let p = inner_product(v, xi.amplitudes())?.norm_sqr();
        if group_len > 0 && lambda - group_start <= merge {
            group_sum += lambda;
            group_len += 1;
            *values.last_mut().unwrap() = group_sum / group_len as f64;
            *probabilities.last_mut().unwrap() += p;
        } else {
            group_start = *lambda;
            group_sum = *lambda;
            group_len = 1;
            values.push(*lambda);
            probabilities.push(p);
        }
    }
    Ok(BornDistribution {
        values,
        probabilities,
    })
}

/// I.i.d. draws by inverse CDF.
pub fn sample_outcomes_with(dist: &BornDistribution, n: usize, rng: &mut PinnedRng) -> Vec<f64> {
    let mut cdf = Vec::with_capacity(dist.probabilities.len());
    let mut acc = 0.0;
    for p in &dist.probabilities {
        acc += p;
        cdf.push(acc);
    }
    let last = dist.values.len().saturating_sub(1);
    (0..n)
        .map(|_| {
            let u = rng.uniform() * acc;
            let k = cdf.partition_point(|&c| c <= u).min(last);
            dist.values[k]
        })
        .collect()
}

pub fn sample_outcomes(dist: &BornDistribution, n: usize, seed: u64) -> Vec<f64> {
    sample_outcomes_with(dist, n, &mut PinnedRng::from_seed(seed))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub n: usize,
    pub mean_hat: f64,
    /// Unbiased sample variance.
    pub var_hat: f64,
    pub var_stderr: f64,
    /// Reference value the estimate is compared against.
    pub bound_checked: f64,
    /// `(var_hat - bound_checked) / var_stderr`; absent when the standard
    /// error vanishes.
    pub z_margin: Option<f64>,
}

impl EstimateReport {
    fn compare_with(mut self, reference: f64) -> Self {
        self.bound_checked = reference;
        self.z_margin = (self.var_stderr > 0.0).then(|| (self.var_hat - reference) / self.var_stderr);
        self
    }
}

/// Unbiased variance with its large-sample standard error
/// `Var(s^2) = (mu4 - sigma^4) / n + 2 sigma^4 / (n (n - 1))`,
/// each term estimated separately and clamped at zero.
pub fn empirical_variance(samples: &[f64]) -> Result<EstimateReport> {
    let n = samples.len();
    if n < 2 {
        return Err(Error::TooFewSamples { required: 2, got: n });
    }
    let nf = n as f64;
    let mean = samples.iter().sum::<f64>() / nf;
    let (mut m2, mut m4) = (0.0, 0.0);
    for x in samples {
        let d2 = (x - mean) * (x - mean);
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= nf;
    m4 /= nf;
    let s2 = m2 * nf / (nf - 1.0);
    let kurtosis_term = (m4 - m2 * m2).max(0.0) / nf;
    let gaussian_term = 2.0 * s2 * s2 / (nf * (nf - 1.0));
    Ok(EstimateReport {
        n,
        mean_hat: mean,
        var_hat: s2,
        var_stderr: (kurtosis_term + gaussian_term).sqrt(),
        bound_checked: 0.0,
        z_margin: None,
    }
    .compare_with(0.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheckReport {
    pub samples: usize,
    pub seed: u64,
    pub estimate_a: EstimateReport,
    pub estimate_b: EstimateReport,
    /// Estimate of `Var(A) + Var(B)`, compared against the Maccone-Pati bound.
    pub estimate_sum: EstimateReport,
    pub analytic_sum: f64,
    pub mpur: f64,
    pub sigma_margin: f64,
    /// `estimate + margin >= mpur`
    pub bound_respected: bool,
    /// `estimate - margin <= analytic sum`
    pub below_analytic: bool,
    /// `|estimate - analytic sum| <= margin`
    pub consistent: bool,
    pub violation: bool,
}

/// Samples `A` on stream 0 and `B` on stream 1 of `seed`, `n` shots each.
pub fn statistical_bound_check(
    a: &Observable,
    b: &Observable,
    xi: &QuantumState,
    n: usize,
    seed: u64,
) -> Result<BoundCheckReport> {
    if n < 2 {
        return Err(Error::TooFewSamples { required: 2, got: n });
    }
    let report = bound_report(a, b, xi, None)?;
    let draw = |obs: &Observable, stream: u64| -> Result<EstimateReport> {
        let dist = born_distribution(obs, xi)?;
        let samples = sample_outcomes_with(&dist, n, &mut PinnedRng::for_stream(seed, stream));
        empirical_variance(&samples)
    };
    let estimate_a = draw(a, 0)?.compare_with(report.var_a);
    let estimate_b = draw(b, 1)?.compare_with(report.var_b);

    let sum_hat = estimate_a.var_hat + estimate_b.var_hat;
    let stderr = estimate_a.var_stderr.hypot(estimate_b.var_stderr);
    let estimate_sum = EstimateReport {
        n,
        mean_hat: estimate_a.mean_hat + estimate_b.mean_hat,
        var_hat: sum_hat,
        var_stderr: stderr,
        bound_checked: 0.0,
        z_margin: None,
    }
    .compare_with(report.mpur);

    let margin = SIGMA_MARGIN * stderr + CHECK_TOL;
    let bound_respected = sum_hat + margin >= report.mpur;
    let below_analytic = sum_hat - margin <= report.sum_var;
    let consistent = (sum_hat - report.sum_var).abs() <= margin;
    Ok(BoundCheckReport {
        samples: n,
        seed,
        estimate_a,
        estimate_b,
        estimate_sum,
        analytic_sum: report.sum_var,
        mpur: report.mpur,
        sigma_margin: SIGMA_MARGIN,
        bound_respected,
        below_analytic,
        consistent,
        violation: !(bound_respected && below_analytic),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3};

    fn qubit_state(alpha: f64) -> QuantumState {
        QuantumState::new(vec![
            Complex64::from(FRAC_1_SQRT_2),
            Complex64::from_polar(FRAC_1_SQRT_2, alpha),
        ])
        .unwrap()
    }

    #[test]
    fn z_distribution_on_equator() {
        for k in 0..8 {
            let d = born_distribution(&Observable::pauli_z(), &qubit_state(k as f64)).unwrap();
            assert_eq!(d.values, vec![-1.0, 1.0]);
            assert!((d.probabilities[0] - 0.5).abs() < 1e-15);
            assert!((d.probabilities[1] - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn z_distribution_on_basis_state() {
        let d = born_distribution(&Observable::pauli_z(), &QuantumState::basis(2, 0).unwrap())
            .unwrap();
        assert_eq!(d.probability_of(1.0, 1e-12), 1.0);
        assert_eq!(d.probability_of(-1.0, 1e-12), 0.0);
    }

    #[test]
    fn x_distribution_matches_mean() {
        for k in 0..12 {
            let alpha = 0.5 * k as f64;
            let d = born_distribution(&Observable::pauli_x(), &qubit_state(alpha)).unwrap();
            assert!((d.probability_of(1.0, 1e-12) - (1.0 + alpha.cos()) / 2.0).abs() < 1e-14);
            assert!((d.probability_of(-1.0, 1e-12) - (1.0 - alpha.cos()) / 2.0).abs() < 1e-14);
            assert!((d.mean() - alpha.cos()).abs() < 1e-14);
            assert!((d.variance() - alpha.sin().powi(2)).abs() < 1e-14);
        }
    }

    #[test]
    fn degenerate_eigenvalues_merge() {
        let id = Observable::identity(3).unwrap();
        let xi = QuantumState::basis(3, 1).unwrap();
        let d = born_distribution(&id, &xi).unwrap();
        assert_eq!(d.values, vec![1.0]);
        assert!((d.probabilities[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sampling_point_mass_and_determinism() {
        let point = BornDistribution { values: vec![1.0], probabilities: vec![1.0] };
        assert!(sample_outcomes(&point, 100, 3).iter().all(|&x| x == 1.0));
        let fair = BornDistribution { values: vec![-1.0, 1.0], probabilities: vec![0.5, 0.5] };
        assert_eq!(sample_outcomes(&fair, 50, 8), sample_outcomes(&fair, 50, 8));
    }

    #[test]
    fn fair_coin_mean() {
        let fair = BornDistribution { values: vec![-1.0, 1.0], probabilities: vec![0.5, 0.5] };
        let n = 100_000;
        let xs = sample_outcomes(&fair, n, 11);
        let mean = xs.iter().sum::<f64>() / n as f64;
        assert!(mean.abs() < 4.0 / (n as f64).sqrt(), "{mean}");
    }

    #[test]
    fn empirical_variance_cases() {
        let r = empirical_variance(&[2.5; 10]).unwrap();
        assert_eq!(r.var_hat, 0.0);
        assert_eq!(r.var_stderr, 0.0);
        assert!(matches!(
            empirical_variance(&[1.0]),
            Err(Error::TooFewSamples { required: 2, got: 1 })
        ));
        // unbiased: {0, 2} has sample variance 2
        assert_eq!(empirical_variance(&[0.0, 2.0]).unwrap().var_hat, 2.0);
    }

    #[test]
    fn fair_coin_variance_within_five_sigma() {
        let fair = BornDistribution { values: vec![-1.0, 1.0], probabilities: vec![0.5, 0.5] };
        let r = empirical_variance(&sample_outcomes(&fair, 100_000, 21)).unwrap();
        assert!((r.var_hat - 1.0).abs() <= 5.0 * r.var_stderr, "{r:?}");
    }

    #[test]
    fn x_variance_at_third_turn() {
        let d = born_distribution(&Observable::pauli_x(), &qubit_state(FRAC_PI_3)).unwrap();
        let r = empirical_variance(&sample_outcomes(&d, 100_000, 5)).unwrap();
        assert!((r.var_hat - 0.75).abs() <= 5.0 * r.var_stderr, "{r:?}");
    }

    #[test]
    fn bound_checks() {
        let (x, z) = (Observable::pauli_x(), Observable::pauli_z());
        let r = statistical_bound_check(&x, &z, &qubit_state(FRAC_PI_2), 100_000, 42).unwrap();
        assert!(!r.violation && r.consistent, "{r:?}");
        assert!((r.mpur - 2.0).abs() < 1e-14);

        let zero = QuantumState::basis(2, 0).unwrap();
        let r = statistical_bound_check(&z, &x, &zero, 100_000, 42).unwrap();
        assert!(!r.violation && r.consistent, "{r:?}");
        assert_eq!(r.estimate_a.var_hat, 0.0);

        let r = statistical_bound_check(&z, &z, &zero, 1000, 42).unwrap();
        assert!(!r.violation);
        assert_eq!(r.estimate_sum.var_hat, 0.0);
        assert_eq!(r.mpur, 0.0);
        assert_eq!(r.estimate_sum.z_margin, None);
    }

    #[test]
    fn too_few_shots_rejected() {
        let z = Observable::pauli_z();
        let xi = QuantumState::basis(2, 0).unwrap();
        assert!(statistical_bound_check(&z, &z, &xi, 1, 0).is_err());
    }
}
