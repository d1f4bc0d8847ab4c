//! Command-line front end: every verification and calculator in the library
//! as a subcommand, with table or machine-readable record output.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure, 2 on
//! usage or configuration errors.

mod commands;
mod report;

use clap::{Parser, Subcommand};
use commands::{Backend, CosmicMode, Ctx};
use report::Format;
use std::path::PathBuf;
use std::process::ExitCode;
use urkit::cosmic::CosmologyParams;

#[derive(Parser)]
#[command(
    name = "urkit",
    version,
    about = "Exact checks of the spinor/tetrad/Fock-algebra core of ur-theory and its large-number cosmology"
)]
struct Cli {
    /// Numeric backend for randomized sweeps.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,

    /// Seed for all randomized sweeps; echoed in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cases per randomized sweep.
    #[arg(long, global = true, default_value_t = 1000)]
    sweep: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Key-value parameter file for the cosmology calculator.
    #[arg(long, global = true)]
    params: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical and random dyad-to-tetrad verification.
    Tetrad,
    /// Bracket-engine self-tests, the tetrad-operator closure, and the
    /// algebra identification.
    Lie,
    /// Large-number table: ur counts, entropies, holographic comparison.
    Cosmic {
        /// Order-of-magnitude exponents or exact values with symbolic pi.
        #[arg(long, value_enum, default_value_t = CosmicMode::Oom)]
        mode: CosmicMode,
    },
    /// Field identities and multiplicity sum rules.
    Check {
        /// Deliberately fail one record, for harness self-tests.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Multiplicity table of N tensored binary alternatives.
    Multiplicity {
        /// Number of tensored spin-1/2 factors.
        #[arg(long, default_value_t = 4)]
        n: u32,
    },
}

fn load_params(path: &Option<PathBuf>) -> Result<CosmologyParams, String> {
    match path {
        None => Ok(CosmologyParams::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            CosmologyParams::from_key_values(&text).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let params = match load_params(&cli.params) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("urkit: {e}");
            return ExitCode::from(2);
        }
    };
    let ctx = Ctx {
        backend: cli.backend,
        seed: cli.seed,
        sweep: cli.sweep,
        format: cli.format,
        params,
    };
    let report = match cli.command {
        Command::Tetrad => Ok(commands::cmd_tetrad(&ctx)),
        Command::Lie => Ok(commands::cmd_lie(&ctx)),
        Command::Cosmic { mode } => commands::cmd_cosmic(&ctx, mode),
        Command::Check { inject_fault } => Ok(commands::cmd_check(&ctx, inject_fault)),
        Command::Multiplicity { n } => commands::cmd_multiplicity(&ctx, n),
    };
    match report {
        Ok(report) => {
            print!("{}", report.render());
            if report.has_failure() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("urkit: {e}");
            ExitCode::from(2)
        }
    }
}
