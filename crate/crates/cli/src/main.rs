//! `degentrig`: point evaluation, identity verification, λ → 0 sweeps and
//! exact series certificates for the degenerate trigonometric functions.
//!
//! Exit codes: 0 all checks pass, 1 an identity failed, 2 domain error,
//! 64 usage error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_DOMAIN: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "DEGENTRIG_SEED";

#[derive(Debug, Parser)]
#[command(name = "degentrig", version, about = "Degenerate trigonometric functions and identity checks")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one degenerate function at a point.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Run the floating-point identity suite.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// Measure convergence to the classical functions as λ → 0.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Certify the polynomial identities exactly in the power-series ring.
    SeriesVerify(SeriesVerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Cos,
    Sin,
    Tan,
    Cot,
    Cosh,
    Sinh,
    Tanh,
    Coth,
    Exp,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write records here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    pub function: Function,
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub x: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Single context; omit both --lambda and --a for the built-in context table.
    #[arg(long, requires = "a")]
    pub lambda: Option<f64>,
    #[arg(long, requires = "lambda")]
    pub a: Option<f64>,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_m: u32,
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = degentrig::identities::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, default_value_t = degentrig::identities::DEFAULT_POLE_MARGIN)]
    pub pole_margin: f64,
    /// Raw sample points per context, before pole filtering.
    #[arg(long, default_value_t = degentrig::identities::DEFAULT_POINTS)]
    pub points: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub x: f64,
    #[arg(long)]
    pub a: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SeriesVerifyArgs {
    /// Highest power of `a` compared.
    #[arg(long, default_value_t = 32)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let code = match cli.command {
        Command::Eval(args) => commands::eval(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Sweep(args) => commands::sweep(&args),
        Command::SeriesVerify(args) => commands::series_verify(&args),
    };
    ExitCode::from(code)
}
