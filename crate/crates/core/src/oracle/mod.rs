//! Independent verification: reproducible random instances, brute-force
//! search over the orthogonal complement, and direct checks of the
//! Hilbert-space identities.

mod identities;
mod random;
mod rng;
mod search;
pub mod suite;

pub use identities::{check_csi, check_parallelogram};
pub use random::{
    random_observable, random_observable_with, random_state, random_state_with, random_states,
    random_unit_in_complement, random_unit_in_complement_with, RandomSpec,
};
pub use rng::PinnedRng;
pub use search::{search_optimal_xi_perp, search_with, SearchResult, Which};
pub use suite::{run_suite, Check, SuiteConfig, SuiteInstance, SuiteSummary, Violation};
