//! `polyzero`: root solving, zero statistics, real-root counts and the
//! Monte Carlo experiments from the command line.
//!
//! Data goes to standard output; progress, timings and errors go to
//! standard error. Exit status: 0 on success, 1 when an assertion or check
//! fails (or an experiment aborts), 2 on bad input or configuration.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use polyzero_core::rootsolve::{DEFAULT_MAX_ITER, DEFAULT_TOL};

#[derive(Parser, Debug)]
#[command(name = "polyzero", version, about = "Zeros of random polynomials")]
struct Cli {
    /// Worker threads for experiments (0: one per logical core).
    #[arg(long, global = true, env = "POLYZERO_WORKERS", default_value_t = 0)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve every polynomial of a coefficient file; prints `poly,re,im,residual`.
    Roots(RootsArgs),
    /// Zero statistics (JSON lines) of root sets, or of polynomials with `--coeffs`.
    Stats(StatsArgs),
    /// Count real zeros of random polynomials; prints `n,trial,real_roots`.
    Realroots(RealrootsArgs),
    /// Run a named experiment from a config file.
    Simulate(SimulateArgs),
    /// Run the acceptance suite, one line per criterion.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    /// Coefficient file (`-` for standard input).
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

#[derive(Args, Debug)]
pub struct StatsArgs {
    /// Root file, or coefficient file with `--coeffs` (`-` for standard input).
    #[arg(default_value = "-")]
    pub input: String,
    /// Treat each line as polynomial coefficients and solve it first.
    #[arg(long)]
    pub coeffs: bool,
    /// Annulus half-widths.
    #[arg(long, default_value = "0.05,0.1")]
    pub deltas: String,
    /// Sectors as `alpha:beta` pairs, comma-separated.
    #[arg(long, default_value = "0:3.141592653589793,0:1.5707963267948966")]
    pub sectors: String,
    /// Weyl sum orders.
    #[arg(long, default_value = "1,2,3,4")]
    pub weyl: String,
    /// Ring edges of the annular-sector grid.
    #[arg(long, default_value = "0,0.9,1.1,inf")]
    pub rings: String,
    #[arg(long, default_value_t = 8)]
    pub grid_sectors: usize,
    #[arg(long, default_value_t = 0.5)]
    pub inner_radius: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

#[derive(Args, Debug)]
pub struct RealrootsArgs {
    /// Coefficient law.
    #[arg(long)]
    pub dist: String,
    /// Law parameters (default: the registered ones).
    #[arg(long)]
    pub params: Option<String>,
    /// Second law for odd-indexed coefficients.
    #[arg(long)]
    pub interleave: Option<String>,
    #[arg(long)]
    pub interleave_params: Option<String>,
    /// Degree.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Master seed.
    #[arg(long, default_value_t = 1234)]
    pub seed: u64,
    /// Count zeros of the real part along the ray of angle `2 pi q / den`, given as `q/den`.
    #[arg(long)]
    pub ray: Option<String>,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    /// One of radial, divergence, angular, realroot, arc_measure.
    #[arg(long)]
    pub experiment: String,
    /// Configuration file.
    #[arg(long)]
    pub config: String,
    /// Directory for `<experiment>.jsonl` and `<experiment>_summary.csv`.
    #[arg(long, default_value = ".")]
    pub out_dir: String,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Run only these criteria (comma-separated ids).
    #[arg(long)]
    pub only: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Roots(a) => commands::roots(&a),
        Command::Stats(a) => commands::stats(&a),
        Command::Realroots(a) => commands::realroots(&a, cli.workers),
        Command::Simulate(a) => commands::simulate(&a, cli.workers),
        Command::Check(a) => commands::check(&a, cli.workers),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("polyzero: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
