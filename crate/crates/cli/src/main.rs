mod budget;
mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shuffle_spectra::Partition;

use budget::Budget;
use commands::filtration::Level;
use commands::{CliError, CliResult};
use output::{emit, Format, Report};

/// Exact spectra of one-sided cycle shuffles and the Fibonacci filtration
/// of the symmetric group algebra.
#[derive(Parser)]
#[command(name = "shuffle-spectra", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Seed for sampled checks and random weight vectors; echoed in every report.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Wall-clock cap for the checks of one command; checks past it are
    /// reported as SKIPPED.
    #[arg(long, global = true, default_value_t = 600.0)]
    budget_secs: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the lacunar subsets Q_1, …, Q_{f_{n+1}} of [n−1] with their data.
    Lacunar {
        #[arg(long)]
        n: usize,
    },
    /// Predict (and optionally verify) the spectrum of Σ ω_ℓ t_ℓ on S^λ.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Partition,
        /// Comma-separated rationals such as `1,0,-1/2`; all ones by default.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        #[arg(long)]
        verify: bool,
    },
    /// Build the filtration of Q[S_n] and check it stage by stage.
    Filtration {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
    },
    /// Standard tableaux, characters and generator matrices of S^λ.
    Specht {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        lambda: Partition,
    },
    /// Reflection quotient isomorphisms, Specht Hom dimensions and
    /// associativity of induction products.
    RepsCheck {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Every acceptance check at one n.
    VerifyAll {
        #[arg(long)]
        n: usize,
    },
}

fn finish<R: Report>(report: CliResult<R>, format: Format) -> CliResult<bool> {
    let report = report?;
    let mut stdout = io::stdout().lock();
    match emit(&report, format, &mut stdout).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(CliError::Usage(e.to_string())),
        _ => {}
    }
    for w in report.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(report.passed())
}

fn dispatch(cli: Cli) -> CliResult<bool> {
    let (format, seed) = (cli.format, cli.seed);
    let budget = Budget::new(Some(cli.budget_secs));
    match cli.command {
        Command::Lacunar { n } => finish(commands::lacunar::run(n, seed), format),
        Command::Spectrum { n, lambda, weights, verify } => {
            let weights = weights.as_deref().map(commands::spectrum::parse_weights).transpose()?;
            finish(commands::spectrum::run(n, &lambda, weights, verify, seed), format)
        }
        Command::Filtration { n, level } => finish(commands::filtration::run(n, level, seed, &budget), format),
        Command::Specht { n, lambda } => finish(commands::specht::run(n, &lambda, seed), format),
        Command::RepsCheck { n } => finish(commands::reps_check::run(n, seed), format),
        Command::VerifyAll { n } => finish(commands::verify_all::run(n, seed, &budget), format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("falsified: at least one exact identity failed");
            ExitCode::from(1)
        }
        Err(CliError::Falsified(m)) => {
            eprintln!("falsified: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
