use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use uncertainty_bounds::cli::{self, CommandOutput};
use uncertainty_bounds::oracle::suite::{
    SuiteConfig, DEFAULT_COUNT, DEFAULT_PERP_SAMPLES, DEFAULT_SEED, DEFAULT_TOL,
};

#[derive(Parser)]
#[command(name = "ubounds", version, about = "Variance lower bounds for pairs of observables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every bound for the instance in FILE and print a JSON report.
    Bounds {
        file: PathBuf,
        /// Single-line JSON.
        #[arg(long)]
        compact: bool,
    },
    /// Qubit phase sweep with A = X, B = Z, written as CSV.
    Sweep {
        #[arg(long, default_value_t = cli::DEFAULT_POINTS)]
        points: usize,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the random invariant suite.
    Random {
        #[arg(long, default_value_t = DEFAULT_COUNT)]
        count: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,6,8")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Random orthogonal vectors tried per instance.
        #[arg(long, default_value_t = DEFAULT_PERP_SAMPLES)]
        perp_samples: usize,
    },
    /// Estimate the variances from simulated measurements and check the bound.
    Montecarlo {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn emit(out: CommandOutput) -> ExitCode {
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr);
    }
    ExitCode::from(out.code as u8)
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let out = match args.command {
        Command::Bounds { file, compact } => cli::cmd_bounds(&file, !compact),
        Command::Sweep { points, out } => cli::cmd_sweep(points, out.as_deref()),
        Command::Random {
            count,
            dims,
            seed,
            tol,
            perp_samples,
        } => cli::cmd_random(&SuiteConfig {
            count,
            dims,
            seed,
            tol,
            perp_samples,
        }),
        Command::Montecarlo {
            file,
            samples,
            seed,
        } => cli::cmd_montecarlo(&file, samples, seed),
    };
    emit(out)
}
