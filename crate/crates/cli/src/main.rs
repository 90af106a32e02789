//! `qshare`: tables and protocol simulations from the command line.
//!
//! Data goes to stdout, diagnostics to stderr (`RUST_LOG` sets the level).
//! Exit codes: 0 success, 2 domain error, 3 I/O error.

mod commands;
mod format;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use format::Format;

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Io(String, io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(msg) => write!(f, "{msg}"),
            CliError::Io(what, e) => write!(f, "{what}: {e}"),
        }
    }
}

impl From<qshare::Error> for CliError {
    fn from(e: qshare::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io("stdout".into(), e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Io(..) => 3,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "qshare",
    version,
    about = "Noisy-channel entanglement and mixed-state secret sharing"
)]
struct Cli {
    /// Machine-readable output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Largest I-concurrence of a Schmidt-rank-r state in k×k dimensions.
    Maxent {
        /// Schmidt rank, `N` or `A..B`; defaults to 2..k.
        #[arg(long, value_parser = commands::parse_range)]
        r: Option<RangeInclusive<usize>>,
        /// Local dimension, `N` or `A..B`.
        #[arg(long, value_parser = commands::parse_range)]
        k: RangeInclusive<usize>,
    },
    /// Critical input concurrence and channel coefficients per noise amplitude c.
    Threshold {
        /// Comma-separated values of c; defaults to 0.6, 0.65, …, 1.0.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Vec<f64>,
    },
    /// Local and non-local outputs for one input, with every entanglement verdict.
    State {
        #[arg(long)]
        lambda1: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
    },
    /// Monte Carlo run of the secret-sharing protocol.
    Simulate {
        #[arg(long, default_value_t = 100_000)]
        rounds: u64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, env = "QSHARE_SEED", default_value_t = 42)]
        seed: u64,
        /// Write the per-round transcript as JSON lines.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let fmt = cli.format;
    match cli.command {
        Command::Maxent { r, k } => commands::maxent(&mut out, r, k, fmt.unwrap_or(Format::Csv))?,
        Command::Threshold { c } => {
            let grid = if c.is_empty() { commands::default_c_grid() } else { c };
            commands::threshold(&mut out, &grid, fmt.unwrap_or(Format::Csv))?
        }
        Command::State { lambda1, c } => commands::state(&mut out, lambda1, c, fmt)?,
        Command::Simulate {
            rounds,
            c,
            seed,
            out: path,
        } => commands::simulate(&mut out, rounds, c, seed, path.as_deref(), fmt.unwrap_or(Format::Json))?,
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            log::error!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
