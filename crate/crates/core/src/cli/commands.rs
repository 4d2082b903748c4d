//! Subcommand bodies. Each returns its exit code together with what should
//! go to standard output and standard error, so they can be tested without
//! spawning a process.

use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use serde::Serialize;

use super::instance::{InstanceFile, ValidInstance};
use super::sweep::{sweep_rows, to_csv};
use crate::bounds::bound_report;
use crate::montecarlo::statistical_bound_check;
use crate::oracle::{run_suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }

    fn json(code: i32, value: &impl Serialize, pretty: bool) -> Self {
        let rendered = if pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        };
        match rendered {
            Ok(mut s) => {
                s.push('\n');
                Self {
                    code,
                    stdout: s,
                    stderr: String::new(),
                }
            }
            Err(e) => Self::fail(EXIT_IO, format!("serialization failed: {e}")),
        }
    }
}

/// Reads and validates an instance file.
pub fn load_instance(path: &Path) -> Result<ValidInstance, CommandOutput> {
    let text = fs::read_to_string(path).map_err(|e| {
        let code = if e.kind() == ErrorKind::InvalidData {
            EXIT_INVALID
        } else {
            EXIT_IO
        };
        CommandOutput::fail(code, format!("{}: {e}", path.display()))
    })?;
    let file: InstanceFile = serde_json::from_str(&text).map_err(|e| {
        CommandOutput::fail(EXIT_INVALID, format!("{}: malformed instance: {e}", path.display()))
    })?;
    file.validate()
        .map_err(|e| CommandOutput::fail(EXIT_INVALID, format!("{}: {e}", path.display())))
}

pub fn cmd_bounds(path: &Path, pretty: bool) -> CommandOutput {
    let inst = match load_instance(path) {
        Ok(i) => i,
        Err(out) => return out,
    };
    match bound_report(&inst.a, &inst.b, &inst.xi, inst.xi_perp.as_ref()) {
        Ok(report) => CommandOutput::json(EXIT_OK, &report, pretty),
        Err(e) => CommandOutput::fail(EXIT_INVALID, format!("{}: {e}", path.display())),
    }
}

/// Writes the sweep CSV to `out`, or returns it on stdout when `out` is `None`.
pub fn cmd_sweep(points: usize, out: Option<&Path>) -> CommandOutput {
    let rows = match sweep_rows(points) {
        Ok(r) => r,
        Err(e) => return CommandOutput::fail(EXIT_INVALID, e.to_string()),
    };
    let csv = to_csv(&rows);
    match out {
        Some(path) => match fs::write(path, csv) {
            Ok(()) => CommandOutput::default(),
            Err(e) => CommandOutput::fail(EXIT_IO, format!("{}: {e}", path.display())),
        },
        None => CommandOutput {
            code: EXIT_OK,
            stdout: csv,
            stderr: String::new(),
        },
    }
}

pub fn cmd_random(config: &SuiteConfig) -> CommandOutput {
    if let Err(e) = config.validate() {
        return CommandOutput::fail(EXIT_INVALID, e.to_string());
    }
    match run_suite(config) {
        Ok(summary) => {
            let code = if summary.passed() { EXIT_OK } else { EXIT_VIOLATION };
            let mut out = CommandOutput::json(code, &summary, true);
            if code == EXIT_VIOLATION {
                out.stderr = format!(
                    "{} invariant violation(s); offending instances are in first_violations",
                    summary.violations
                );
            }
            out
        }
        // Suite instances are generated internally, so an error here is an
        // internal failure of one of the checked routines.
        Err(e) => CommandOutput::fail(EXIT_VIOLATION, format!("suite aborted: {e}")),
    }
}

pub fn cmd_montecarlo(path: &Path, samples: usize, seed: u64) -> CommandOutput {
    if samples < 2 {
        return CommandOutput::fail(
            EXIT_INVALID,
            format!("--samples must be at least 2 to estimate a variance, got {samples}"),
        );
    }
    let inst = match load_instance(path) {
        Ok(i) => i,
        Err(out) => return out,
    };
    match statistical_bound_check(&inst.a, &inst.b, &inst.xi, samples, seed) {
        Ok(report) => {
            let code = if report.violation { EXIT_VIOLATION } else { EXIT_OK };
            CommandOutput::json(code, &report, true)
        }
        Err(e) => CommandOutput::fail(EXIT_INVALID, format!("{}: {e}", path.display())),
    }
}
