//! `sfock`: exact Fock-space quantization, dual-pair reduction, and the
//! quantization-commutes-with-reduction verification pipeline.
//!
//! Exit codes: 0 = all checks pass, 1 = mathematical failure, 2 = usage
//! error. Every command is deterministic given its flags and seed; a warm
//! cache changes timings, never output.

mod cache;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::cache::{Cache, MaybeCache};
use crate::commands::Ctx;
use crate::report::{Failure, Format};

#[derive(Parser)]
#[command(
    name = "sfock",
    version,
    about = "Exact quantization and reduction over the basic dual pairs",
    after_help = "Pair specs: sp-o:l=<L>,s=<S>   u-pq:p=<P>,q=<Q>,s=<S>   ostar-sp:n=<N>,s=<S>\n\
                  The SFOCK_CACHE environment variable overrides --cache."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every randomized computation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Height bound for random rational coefficients and points.
    #[arg(long, global = true, default_value_t = 10)]
    height: u32,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Cache directory for graded-dimension cells.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Run the built-in mutation canaries alongside the checks.
    #[arg(long, global = true)]
    self_test: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Dirac condition on randomized quantizable observables.
    Dirac {
        /// Number of complex coordinates of the model.
        #[arg(long, default_value_t = 2)]
        vars: usize,
        /// Largest monomial-state degree to test against.
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Number of random observable pairs.
        #[arg(long, default_value_t = 50)]
        pairs: usize,
    },
    /// Verify that the invariant, graded, and representation-count
    /// dimensions coincide for every stratum and degree.
    Commute {
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Emit the graded table of the stratum chain with restriction kernels.
    Chain {
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Compare the reduced energy spectrum with the invariant-side spectrum.
    Spectrum {
        #[arg(long)]
        pair: String,
        /// Stratum to reduce onto; defaults to the pair's s-parameter.
        #[arg(long)]
        stratum: Option<usize>,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Polarized states (weight-polynomial text form) to feed through
        /// the energy operator; may repeat.
        #[arg(long)]
        state: Vec<String>,
    },
    /// Emit exact bases of the compact-group invariants per degree.
    Invariants {
        #[arg(long)]
        pair: String,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Enumerate highest-weight monomials with their weights and dimensions.
    Reps {
        #[arg(long)]
        pair: String,
        #[arg(long)]
        stratum: Option<usize>,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
}

fn run(cli: Cli) -> Result<(), Failure> {
    // the environment variable wins over the flag
    let cache_dir = std::env::var_os("SFOCK_CACHE")
        .map(PathBuf::from)
        .or(cli.cache);
    let cache = match cache_dir {
        Some(dir) => Some(
            Cache::open(&dir).map_err(|e| Failure::Usage(format!("cache at {dir:?}: {e}")))?,
        ),
        None => None,
    };
    let mut ctx = Ctx {
        seed: cli.seed,
        height: cli.height,
        format: cli.format,
        self_test: cli.self_test,
        cache: MaybeCache(cache),
    };
    let outcome = match &cli.command {
        Command::Dirac {
            vars,
            max_degree,
            pairs,
        } => commands::cmd_dirac(&mut ctx, *vars, *max_degree, *pairs),
        Command::Commute { pair, max_degree } => {
            let spec = commands::parse_pair(pair)?;
            commands::cmd_commute(&mut ctx, &spec, *max_degree)
        }
        Command::Chain { pair, max_degree } => {
            let spec = commands::parse_pair(pair)?;
            commands::cmd_chain(&mut ctx, &spec, *max_degree)
        }
        Command::Spectrum {
            pair,
            stratum,
            max_degree,
            state,
        } => {
            let spec = commands::parse_pair(pair)?;
            commands::cmd_spectrum(&mut ctx, &spec, *stratum, *max_degree, state)
        }
        Command::Invariants { pair, max_degree } => {
            let spec = commands::parse_pair(pair)?;
            commands::cmd_invariants(&mut ctx, &spec, *max_degree)
        }
        Command::Reps {
            pair,
            stratum,
            max_degree,
        } => {
            let spec = commands::parse_pair(pair)?;
            commands::cmd_reps(&mut ctx, &spec, *stratum, *max_degree)
        }
    };
    ctx.cache
        .flush()
        .map_err(|e| Failure::Usage(format!("cache write: {e}")))?;
    outcome
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("sfock: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
