//! `eiscensus`: count monic Eisenstein polynomials satisfying the
//! genus-theoretic side condition, validate the exact counter against brute
//! force, and compare finite counts with their limiting densities.
//!
//! Exit codes: 0 success, 2 usage error, 3 resource limit, 4 engine or
//! data-integrity mismatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

#[derive(Parser)]
#[command(name = "eiscensus", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form density constants from truncated Euler products
    Constants(ConstantsArgs),
    /// Census of one (d, H) pair: brute enumeration, exact counting, or both
    Census(CensusArgs),
    /// Exact censuses over a height ladder, compared against the closed forms
    Convergence(ConvergenceArgs),
    /// Constants table over a list of degrees
    Table(TableArgs),
    /// Cross-validate brute and exact engines for every height up to a cap
    Validate(ValidateArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Brute,
    Exact,
    Both,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Brute => "brute",
            Mode::Exact => "exact",
            Mode::Both => "both",
        }
    }
}

#[derive(Args)]
struct ConstantsArgs {
    /// Polynomial degree; must be an odd prime
    #[arg(long)]
    d: u32,
    /// Euler-product truncation point [env: EISCENSUS_PRIME_BOUND, default: 1000000]
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the payload to FILE instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    /// Polynomial degree; must be an odd prime
    #[arg(long)]
    d: u32,
    /// Height bound H on the coefficients
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    height: u64,
    /// Counting engine; `both` cross-validates and fails on any disagreement
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
    /// Worker threads for brute enumeration [env: EISCENSUS_WORKERS, default: available parallelism]
    #[arg(long)]
    workers: Option<u32>,
    /// Maximum brute-force enumeration size [env: EISCENSUS_BUDGET, default: 10^9]
    #[arg(long)]
    budget: Option<u128>,
    /// Euler-product truncation point [env: EISCENSUS_PRIME_BOUND, default: 1000000]
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the payload to FILE instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvergenceArgs {
    /// Polynomial degree; must be an odd prime
    #[arg(long)]
    d: u32,
    /// Strictly ascending heights, e.g. 100,1000,10000
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true,
          value_parser = clap::value_parser!(u64).range(1..))]
    heights: Vec<u64>,
    /// Euler-product truncation point [env: EISCENSUS_PRIME_BOUND, default: 1000000]
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the payload to FILE instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Degrees to tabulate, e.g. 3,5,7,11,13; empty list gives empty output
    #[arg(long = "d-list", value_delimiter = ',', num_args = 0..)]
    d_list: Vec<u32>,
    /// Euler-product truncation point [env: EISCENSUS_PRIME_BOUND, default: 1000000]
    #[arg(long)]
    prime_bound: Option<u64>,
    /// Fail (exit 4) unless the ratio column strictly increases with d
    #[arg(long)]
    check_monotone: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the payload to FILE instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Polynomial degree; must be an odd prime
    #[arg(long)]
    d: u32,
    /// Validate every height H = 1..=max_height in mode `both`
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_height: u64,
    /// Worker threads for brute enumeration [env: EISCENSUS_WORKERS, default: available parallelism]
    #[arg(long)]
    workers: Option<u32>,
    /// Maximum brute-force enumeration size [env: EISCENSUS_BUDGET, default: 10^9]
    #[arg(long)]
    budget: Option<u128>,
    /// Euler-product truncation point [env: EISCENSUS_PRIME_BOUND, default: 1000000]
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the payload to FILE instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure modes with their stable exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or preconditions: exit 2.
    Usage(String),
    /// Work or memory above the configured caps: exit 3.
    Resource(String),
    /// Engines disagree or a checked invariant failed: exit 4.
    Mismatch(String),
    /// I/O failure writing output: exit 1.
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Resource(m) | CliError::Mismatch(m) | CliError::Io(m) => m,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Constants(a) => commands::cmd_constants(a.d, a.prime_bound, a.format, a.out),
        Command::Census(a) => commands::cmd_census(
            a.d,
            a.height,
            a.mode,
            a.prime_bound,
            a.workers,
            a.budget,
            a.format,
            a.out,
        ),
        Command::Convergence(a) => {
            commands::cmd_convergence(a.d, a.heights, a.prime_bound, a.format, a.out)
        }
        Command::Table(a) => {
            commands::cmd_table(a.d_list, a.prime_bound, a.check_monotone, a.format, a.out)
        }
        Command::Validate(a) => commands::cmd_validate(
            a.d,
            a.max_height,
            a.prime_bound,
            a.workers,
            a.budget,
            a.format,
            a.out,
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {}", err.message());
        std::process::exit(err.exit_code());
    }
}
