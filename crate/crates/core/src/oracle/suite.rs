//! The random invariant suite: every bound inequality and every supporting
//! identity, checked on reproducible random instances.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::identities::{check_csi, check_parallelogram};
use super::random::{check_range, random_observable_with, random_state_with, random_unit_in_basis};
use super::rng::PinnedRng;
use super::search::{search_with, Which};
use crate::bounds::{bound_report, l1_bound, l2_bound, SignChoice};
use crate::cli::InstanceFile;
use crate::error::{Error, Result};
use crate::qcore::linalg::{dot, norm_sqr};
use crate::qcore::{
    deviation_vector, matrix_mean, orthonormal_complement_basis, Observable, QuantumState,
};

pub const DEFAULT_DIMS: [usize; 5] = [2, 3, 4, 6, 8];
pub const DEFAULT_COUNT: usize = 1000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_PERP_SAMPLES: usize = 100;
/// Random complement vectors used by the brute-force search on qubits.
const QUBIT_SEARCH_SAMPLES: usize = 4;
const MAX_REPORTED_VIOLATIONS: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub count: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub tol: f64,
    pub perp_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            count: DEFAULT_COUNT,
            dims: DEFAULT_DIMS.to_vec(),
            seed: DEFAULT_SEED,
            tol: DEFAULT_TOL,
            perp_samples: DEFAULT_PERP_SAMPLES,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidArgument("count must be positive".into()));
        }
        if self.dims.is_empty() {
            return Err(Error::InvalidArgument("dimension list is empty".into()));
        }
        for &d in &self.dims {
            check_range(d)?;
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.perp_samples == 0 {
            return Err(Error::InvalidArgument("perp_samples must be positive".into()));
        }
        Ok(())
    }

    pub fn dim_of(&self, index: usize) -> usize {
        self.dims[index % self.dims.len()]
    }
}

/// One checked relation. A check passes when its slack is `>= -tol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    HrsurProduct,
    SumChainSigma,
    SumChainT2,
    MpurL1Random,
    MpurL2Random,
    Parallelogram,
    Csi,
    CsiHrsurIdentity,
    CommutatorImaginary,
    AnticommutatorReal,
    DeviationOrthogonal,
    VarianceIdentity,
    PhaseInvariance,
    SwapSymmetry,
    DominanceL1,
    DominanceL2,
    L2Tightness,
    L1Identity,
    Nontriviality,
    QubitSearchL1,
    QubitSearchL2,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::HrsurProduct => "hrsur_product",
            Check::SumChainSigma => "sum_chain_sigma",
            Check::SumChainT2 => "sum_chain_t2",
            Check::MpurL1Random => "mpur_l1_random_perp",
            Check::MpurL2Random => "mpur_l2_random_perp",
            Check::Parallelogram => "parallelogram",
            Check::Csi => "cauchy_schwarz",
            Check::CsiHrsurIdentity => "cauchy_schwarz_hrsur_identity",
            Check::CommutatorImaginary => "commutator_imaginary",
            Check::AnticommutatorReal => "anticommutator_real",
            Check::DeviationOrthogonal => "deviation_orthogonal",
            Check::VarianceIdentity => "variance_identity",
            Check::PhaseInvariance => "phase_invariance",
            Check::SwapSymmetry => "swap_symmetry",
            Check::DominanceL1 => "dominance_l1",
            Check::DominanceL2 => "dominance_l2",
            Check::L2Tightness => "l2_tightness",
            Check::L1Identity => "l1_identity",
            Check::Nontriviality => "nontriviality",
            Check::QubitSearchL1 => "qubit_search_l1",
            Check::QubitSearchL2 => "qubit_search_l2",
        }
    }
}

/// Random instance `index` of a suite: `(A, B, xi)` drawn in that order from
/// stream `index` under `seed`.
#[derive(Debug, Clone)]
pub struct SuiteInstance {
    pub index: usize,
    pub a: Observable,
    pub b: Observable,
    pub xi: QuantumState,
    rng: PinnedRng,
}

impl SuiteInstance {
    pub fn generate(seed: u64, index: usize, dim: usize) -> Result<Self> {
        let mut rng = PinnedRng::for_stream(seed, index as u64);
        let a = random_observable_with(dim, &mut rng)?;
        let b = random_observable_with(dim, &mut rng)?;
        let xi = random_state_with(dim, &mut rng)?;
        Ok(Self { index, a, b, xi, rng })
    }

    /// The rest of the instance's stream, for its complement samples.
    pub fn rng(&mut self) -> &mut PinnedRng {
        &mut self.rng
    }

    pub fn to_file(&self, xi_perp: Option<&QuantumState>) -> InstanceFile {
        InstanceFile::from_parts(&self.a, &self.b, &self.xi, xi_perp)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: usize,
    pub dim: usize,
    pub check: String,
    pub slack: f64,
    pub replay: InstanceFile,
}

#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub index: usize,
    pub dim: usize,
    pub slacks: Vec<(Check, f64)>,
    /// Complement vector at which the random-perp checks were tightest.
    pub worst_perp: QuantumState,
    instance: SuiteInstance,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub config: SuiteConfig,
    pub instances: usize,
    pub checks_per_instance: usize,
    pub violations: usize,
    pub min_slacks: BTreeMap<String, f64>,
    pub worst_instance: BTreeMap<String, usize>,
    pub first_violations: Vec<Violation>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

struct Slacks(Vec<(Check, f64)>);

impl Slacks {
    fn push(&mut self, check: Check, slack: f64) {
        match self.0.iter_mut().find(|(c, _)| *c == check) {
            Some((_, s)) => *s = s.min(slack),
            None => self.0.push((check, slack)),
        }
    }

    fn equal(&mut self, check: Check, x: f64, y: f64) {
        self.push(check, -(x - y).abs());
    }
}

pub fn check_instance(config: &SuiteConfig, index: usize) -> Result<InstanceOutcome> {
    let dim = config.dim_of(index);
    let mut inst = SuiteInstance::generate(config.seed, index, dim)?;
    let (a, b, xi) = (inst.a.clone(), inst.b.clone(), inst.xi.clone());
    let tol = config.tol;
    let mut s = Slacks(Vec::new());

    let report = bound_report(&a, &b, &xi, None)?;
    let sum = report.sum_var;
    s.push(Check::HrsurProduct, report.prod_var - report.t1);
    let sigma2 = 2.0 * report.var_a.sqrt() * report.var_b.sqrt();
    s.push(Check::SumChainSigma, sum - sigma2);
    s.push(Check::SumChainT2, sigma2 - report.t2);

    let psi = deviation_vector(&a, &xi)?;
    let phi = deviation_vector(&b, &xi)?;
    s.push(Check::Parallelogram, -check_parallelogram(&psi, &phi)?);
    let csi = check_csi(&psi, &phi)?;
    s.push(Check::Csi, csi);
    s.equal(Check::CsiHrsurIdentity, csi, report.prod_var - report.t1);
    s.push(Check::DeviationOrthogonal, -dot(xi.amplitudes(), &psi).norm());
    s.push(Check::DeviationOrthogonal, -dot(xi.amplitudes(), &phi).norm());
    s.equal(Check::VarianceIdentity, report.var_a, norm_sqr(&psi));
    s.equal(Check::VarianceIdentity, report.var_b, norm_sqr(&phi));

    let ab = a.matrix().matmul(b.matrix())?;
    let ba = b.matrix().matmul(a.matrix())?;
    s.push(Check::CommutatorImaginary, -matrix_mean(&ab.sub(&ba)?, &xi)?.re.abs());
    s.push(Check::AnticommutatorReal, -matrix_mean(&ab.add(&ba)?, &xi)?.im.abs());

    let swapped = bound_report(&b, &a, &xi, None)?;
    s.equal(Check::SwapSymmetry, report.t1, swapped.t1);
    s.equal(Check::SwapSymmetry, report.t2, swapped.t2);

    for sign in SignChoice::BOTH {
        s.equal(Check::L2Tightness, report.l2_by_sign.get(sign), sum);
    }
    s.equal(Check::L1Identity, report.l1, 0.5 * sum + report.covq.abs());

    let premise = report.mpur <= tol;
    let conclusion = report.var_a <= tol && report.var_b <= tol;
    s.push(
        Check::Nontriviality,
        if premise && !conclusion { -report.var_a.max(report.var_b) } else { 0.0 },
    );
    if report.common_eigenvector {
        s.push(Check::Nontriviality, -report.mpur);
    }

    let basis = orthonormal_complement_basis(&xi)?;
    let mut worst_perp = None;
    let mut worst_margin = f64::INFINITY;
    for _ in 0..config.perp_samples {
        let perp = random_unit_in_basis(&basis, inst.rng())?;
        for sign in SignChoice::BOTH {
            let l1 = l1_bound(&a, &b, &xi, &perp, sign)?;
            let l2 = l2_bound(&a, &b, &xi, &perp, sign)?;
            s.push(Check::MpurL1Random, sum - l1);
            s.push(Check::MpurL2Random, sum - l2);
            s.push(Check::DominanceL1, report.l1_by_sign.get(sign) - l1);
            s.push(Check::DominanceL2, report.l2_by_sign.get(sign) - l2);
            let margin = (sum - l1).min(sum - l2);
            if margin < worst_margin {
                worst_margin = margin;
                worst_perp = Some(perp.clone());
            }
        }
    }
    let worst_perp = worst_perp.expect("perp_samples >= 1");

    let theta_state = TAU * inst.rng().uniform();
    let theta_perp = TAU * inst.rng().uniform();
    let xi_rot = xi.with_phase(theta_state);
    let perp_rot = worst_perp.with_phase(theta_perp);
    let rotated = bound_report(&a, &b, &xi_rot, None)?;
    for (x, y) in [
        (report.t1, rotated.t1),
        (report.t2, rotated.t2),
        (report.l1, rotated.l1),
        (report.l2, rotated.l2),
        (report.covq, rotated.covq),
    ] {
        s.equal(Check::PhaseInvariance, x, y);
    }
    for sign in SignChoice::BOTH {
        s.equal(
            Check::PhaseInvariance,
            l1_bound(&a, &b, &xi, &worst_perp, sign)?,
            l1_bound(&a, &b, &xi_rot, &perp_rot, sign)?,
        );
        s.equal(
            Check::PhaseInvariance,
            l2_bound(&a, &b, &xi, &worst_perp, sign)?,
            l2_bound(&a, &b, &xi_rot, &perp_rot, sign)?,
        );
    }

    if dim == 2 {
        for sign in SignChoice::BOTH {
            let r1 = search_with(&a, &b, &xi, Which::L1, sign, QUBIT_SEARCH_SAMPLES, inst.rng())?;
            s.push(Check::QubitSearchL1, -r1.gap.abs());
            s.equal(
                Check::QubitSearchL1,
                r1.best_value,
                0.5 * sum + sign.value() * report.covq,
            );
            let r2 = search_with(&a, &b, &xi, Which::L2, sign, QUBIT_SEARCH_SAMPLES, inst.rng())?;
            s.push(Check::QubitSearchL2, -r2.gap.abs());
            s.equal(Check::QubitSearchL2, r2.best_value, sum);
        }
    }

    Ok(InstanceOutcome {
        index,
        dim,
        slacks: s.0,
        worst_perp,
        instance: inst,
    })
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteSummary> {
    config.validate()?;
    let outcomes: Vec<InstanceOutcome> = (0..config.count)
        .into_par_iter()
        .map(|i| check_instance(config, i))
        .collect::<Result<_>>()?;

    let mut min_slacks: BTreeMap<String, f64> = BTreeMap::new();
    let mut worst_instance = BTreeMap::new();
    let mut violations = 0;
    let mut first_violations = Vec::new();
    let mut checks_per_instance = 0;
    for outcome in &outcomes {
        checks_per_instance = checks_per_instance.max(outcome.slacks.len());
        for &(check, slack) in &outcome.slacks {
            let name = check.name().to_string();
            let entry = min_slacks.entry(name.clone()).or_insert(f64::INFINITY);
            if slack < *entry {
                *entry = slack;
                worst_instance.insert(name.clone(), outcome.index);
            }
            if slack < -config.tol {
                violations += 1;
                if first_violations.len() < MAX_REPORTED_VIOLATIONS {
                    first_violations.push(Violation {
                        instance: outcome.index,
                        dim: outcome.dim,
                        check: name,
                        slack,
                        replay: outcome.instance.to_file(Some(&outcome.worst_perp)),
                    });
                }
            }
        }
    }
    Ok(SuiteSummary {
        config: config.clone(),
        instances: outcomes.len(),
        checks_per_instance,
        violations,
        min_slacks,
        worst_instance,
        first_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(count: usize) -> SuiteConfig {
        SuiteConfig {
            count,
            perp_samples: 10,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn small_suite_passes() {
        let summary = run_suite(&small(25)).unwrap();
        assert!(summary.passed(), "{summary:#?}");
        assert_eq!(summary.instances, 25);
        assert!(summary.min_slacks.contains_key("qubit_search_l2"));
    }

    #[test]
    fn dims_cycle() {
        let cfg = SuiteConfig::default();
        let dims: Vec<usize> = (0..7).map(|i| cfg.dim_of(i)).collect();
        assert_eq!(dims, vec![2, 3, 4, 6, 8, 2, 3]);
    }

    #[test]
    fn instances_are_reproducible() {
        let x = SuiteInstance::generate(42, 17, 4).unwrap();
        let y = SuiteInstance::generate(42, 17, 4).unwrap();
        assert_eq!(x.a, y.a);
        assert_eq!(x.xi, y.xi);
        let z = SuiteInstance::generate(42, 18, 4).unwrap();
        assert_ne!(x.xi, z.xi);
    }

    #[test]
    fn invalid_configs_rejected() {
        for cfg in [
            SuiteConfig { count: 0, ..small(1) },
            SuiteConfig { dims: vec![], ..small(1) },
            SuiteConfig { dims: vec![1], ..small(1) },
            SuiteConfig { dims: vec![65], ..small(1) },
            SuiteConfig { tol: -1.0, ..small(1) },
            SuiteConfig { perp_samples: 0, ..small(1) },
        ] {
            assert!(run_suite(&cfg).is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn summary_is_deterministic() {
        let a = serde_json::to_string(&run_suite(&small(15)).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(&small(15)).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
