//! Preparation-uncertainty bounds for finite-dimensional pure states.
//!
//! For a state `|xi>` and Hermitian observables `A`, `B` this crate computes
//! the Robertson-Schrodinger product bound `T1`, its sum form `T2`, and the
//! two Maccone-Pati sum bounds `L1` and `L2`, together with the orthogonal
//! state that maximizes each Maccone-Pati bound. The [`oracle`] and
//! [`montecarlo`] modules provide independent checks of every bound.

pub mod bounds;
pub mod cli;
mod error;
pub mod montecarlo;
pub mod oracle;
pub mod qcore;

pub use error::{Error, Result};
