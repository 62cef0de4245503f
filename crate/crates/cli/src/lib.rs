//! Command-line front end for `lisword-core`: single counts, table
//! reproduction, probabilities and cross-validation sweeps.

pub mod args;
pub mod commands;
pub mod config;
pub mod decimal;
pub mod error;
pub mod table;

pub use args::{Cli, Command, Format, MethodArg};
pub use error::CliError;

use std::io::Write;

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// A cross-check disagreed; results were still printed.
    Mismatch,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Mismatch => 1,
        }
    }
}

/// Runs one parsed invocation, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let config = config::Config::resolve(cli.config.as_deref())?;
    match cli.command {
        Command::Count(args) => commands::cmd_count(&args, &config, out),
        Command::Table(args) => commands::cmd_table(&args, &config, out),
        Command::Prob(args) => commands::cmd_prob(&args, &config, out),
        Command::Validate(args) => commands::cmd_validate(&args, &config, out),
    }
}
