//! Command-line harness: exact counts and correlations, verification
//! suites, convergence sweeps (CSV), bar equilibria (JSON), and the
//! high-precision constants.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 unsupported instance,
//! 3 numeric non-convergence.

use clap::{Parser, Subcommand};
use std::process::ExitCode;

mod commands;

#[derive(Parser)]
#[command(
    name = "aztec-gaps",
    about = "Exact and asymptotic defect correlations on Aztec diamonds and rectangles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact matching count of an Aztec rectangle with axis defects.
    Count(commands::CountArgs),
    /// Exact finite-size correlation M(AD(H,S))/M(AD) (needs |H| = |S|).
    Corr(commands::CorrArgs),
    /// Run a verification suite (oracle | identities | asymptotics).
    Verify(commands::VerifyArgs),
    /// Tabulate exact-vs-predicted convergence for a law, as CSV.
    Sweep(commands::SweepArgs),
    /// Equilibrium gap fractions for bars of charge, as JSON.
    Equilibrium(commands::EquilibriumArgs),
    /// High-precision constants used by the asymptotic laws.
    Constants,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(args) => commands::run_count(args),
        Command::Corr(args) => commands::run_corr(args),
        Command::Verify(args) => commands::run_verify(args),
        Command::Sweep(args) => commands::run_sweep(args),
        Command::Equilibrium(args) => commands::run_equilibrium(args),
        Command::Constants => commands::run_constants(),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
