use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "lisword",
    version,
    about = "Count words with each letter used r times and no strictly increasing subsequence longer than d"
)]
pub struct Cli {
    /// key=value file with defaults for cap, method, format and digits
    /// (falls back to $LISWORD_CONFIG)
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute A_{d+1,r}(n) with one or all methods
    Count(CountArgs),
    /// Reproduce a table of A_{d+1,r}(n), rows d and columns n = 1..n-max
    Table(TableArgs),
    /// Probability that the longest increasing subsequence is at most d
    Prob(ProbArgs),
    /// Cross-check every method on all small instances
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Gessel,
    Rsk,
    Brute,
    All,
}

impl MethodArg {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodArg::Gessel => "gessel",
            MethodArg::Rsk => "rsk",
            MethodArg::Brute => "brute",
            MethodArg::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// maximum allowed length of an increasing subsequence
    #[arg(long)]
    pub d: usize,
    /// occurrences of each letter
    #[arg(long)]
    pub r: usize,
    /// alphabet size
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// largest number of words brute force may enumerate
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub r: usize,
    /// comma-separated row values of d
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
    pub d_list: Vec<usize>,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ProbArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: Option<usize>,
    /// Poisson parameter theta as an exact rational "p/q"
    #[arg(long, value_name = "P/Q")]
    pub poisson: Option<String>,
    /// highest n in the Poissonized partial sum
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    /// significant digits of decimal output
    #[arg(long)]
    pub digits: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = 3)]
    pub r_max: usize,
    #[arg(long, default_value_t = 3)]
    pub d_max: usize,
    /// largest brute-force enumeration size included in the sweep
    #[arg(long)]
    pub cap: Option<u64>,
}
