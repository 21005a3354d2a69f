//! Library behind the `chanent` binary.
//!
//! Every command produces a [`Report`] with `inputs`, `quantities` and
//! `certificates`, plus a plain-text rendering of the same content.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

mod analyze;
mod error;
mod example;
mod input;
mod report;
mod verify;

pub use analyze::{analyze, AnalyzeArgs, DEFAULT_Q, DEFAULT_S};
pub use error::CliError;
pub use example::{example_depolarizing, EXAMPLE_P, EXAMPLE_Q};
pub use input::{load_channel, load_state, StateJson, StateSource};
pub use report::{Outcome, Report};
pub use verify::{verify, SuiteSelection};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "chanent",
    version,
    about = "Generalized entropies of quantum channels and certificate suites"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy report for a channel given as Kraus operators in JSON.
    Analyze(AnalyzeArgs),
    /// Run certificate suites.
    Verify {
        /// One of prop1, depolarizing, prop2, prop3, prop4, lindblad,
        /// minkowski, kernel, or all.
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Qubit depolarizing channel: output spectra, probabilities and the
    /// f_q(p) table.
    ExampleDepolarizing,
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Analyze(args) => analyze(args),
        Command::Verify {
            suite,
            seed,
            trials,
        } => verify(&suite.parse()?, *seed, *trials),
        Command::ExampleDepolarizing => example_depolarizing(),
    }
}

/// Runs the command, writes the rendered report and returns the exit code:
/// 0 when every certificate holds, 1 otherwise.
pub fn execute(cli: &Cli) -> Result<u8, CliError> {
    let outcome = run(&cli.command)?;
    let rendered = outcome.render(cli.format)?;
    match &cli.out {
        Some(path) => fs::write(path, rendered).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => print!("{rendered}"),
    }
    Ok(if outcome.passed() { 0 } else { 1 })
}
