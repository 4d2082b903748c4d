//! Command-line front end: instance files, the qubit sweep, the random
//! invariant suite and Monte Carlo runs.

mod commands;
mod instance;
pub mod sweep;

pub use commands::{
    cmd_bounds, cmd_montecarlo, cmd_random, cmd_sweep, load_instance, CommandOutput, EXIT_INVALID,
    EXIT_IO, EXIT_OK, EXIT_VIOLATION,
};
pub use instance::{InstanceError, InstanceFile, ValidInstance};
pub use sweep::{format_number, parse_csv, sweep_rows, to_csv, SweepRow, CSV_HEADER, DEFAULT_POINTS};
