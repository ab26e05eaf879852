//! Command-line surface for the crossover toolkit.
//!
//! Exit codes: 0 success, 1 golden-check failure, 2 usage or configuration
//! error, 3 numeric failure inside a bench cell.

mod bench;
mod config;
mod cross;
mod demo;
mod evolve_cmd;
mod format;

use clap::{Args, Parser, Subcommand};
use config::{ConfigMap, CONFIG_ENV_VAR};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or configuration (exit 2).
    Usage(String),
    /// Golden-check mismatch in `demo` (exit 1).
    Golden(String),
    /// Numeric failure inside a bench cell (exit 3).
    Numeric(String),
}

#[derive(Parser)]
#[command(
    name = "xover",
    version,
    about = "Crossover operator toolkit: one-shot operators, golden demos, benchmark grids, and a mini GA",
    after_help = "A flat key=value config file (via --config or $XOVER_CONFIG) supplies defaults \
                  for the invoked subcommand; command-line flags override file entries."
)]
struct Cli {
    /// Flat key=value config file; flags override file entries
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one crossover operator to explicit parent chromosomes
    Cross(CrossArgs),
    /// Run the built-in golden examples and report pass/fail
    Demo,
    /// Run the benchmark grid and write a CSV report
    Bench(BenchArgs),
    /// Run the minimal generational GA and emit its best-fitness trace
    Evolve(EvolveArgs),
}

#[derive(Args)]
pub struct CrossArgs {
    /// Operator id: single, kpoint, mask, uniform, hux, shx, tpx, rspx,
    /// sax, wax, bx, blx, sbx, lpx, pmx, cx
    #[arg(long)]
    op: Option<String>,
    /// Parent 1 genes, comma-separated
    #[arg(long)]
    p1: Option<String>,
    /// Parent 2 genes, comma-separated
    #[arg(long)]
    p2: Option<String>,
    /// Parent 3 genes (tpx only)
    #[arg(long)]
    p3: Option<String>,
    /// 1-based cut position (single, shx, rspx)
    #[arg(long)]
    cut: Option<usize>,
    /// Comma-separated cut positions (kpoint)
    #[arg(long)]
    cuts: Option<String>,
    /// Comma-separated mask bits (mask)
    #[arg(long)]
    mask: Option<String>,
    /// Probability of taking parent 1 per position (uniform; default 0.5)
    #[arg(long)]
    bias: Option<f64>,
    /// Blend / multiplier parameter
    #[arg(long)]
    alpha: Option<f64>,
    /// Second coefficient (wax)
    #[arg(long)]
    beta: Option<f64>,
    /// SBX distribution index (default 2)
    #[arg(long)]
    eta: Option<f64>,
    /// SBX uniform variate in (0,1); drawn from --seed when absent
    #[arg(long)]
    mu: Option<f64>,
    /// Blend gamma-form variate in (0,1); drawn from --seed when absent
    #[arg(long)]
    r: Option<f64>,
    /// 1-based gene position for single-gene operators; drawn when absent
    #[arg(long)]
    k: Option<usize>,
    /// Segment lo,hi (pmx); drawn from --seed when absent
    #[arg(long)]
    seg: Option<String>,
    /// single (default) or all: how gene-level real operators apply
    #[arg(long)]
    mode: Option<String>,
    /// Seed for any required draws (default 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Invert the shuffle on shx offspring (default true)
    #[arg(long)]
    unshuffle: Option<bool>,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Operators to run, comma-separated (default bx,sbx,lpx)
    #[arg(long)]
    ops: Option<String>,
    /// Alpha grid, comma-separated (default 0.2,0.5,0.7)
    #[arg(long)]
    alphas: Option<String>,
    /// Test functions, comma-separated (default tf1,tf3,tf7)
    #[arg(long)]
    tfs: Option<String>,
    /// Generations per cell (default 100)
    #[arg(long)]
    generations: Option<usize>,
    /// Base seed; each cell derives its own stream (default 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path (required); the seed column holds each cell's
    /// derived seed
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional per-generation series CSV path
    #[arg(long)]
    series: Option<PathBuf>,
    /// Parent-gene sampling interval lo,hi (default 0,1)
    #[arg(long)]
    range: Option<String>,
    /// SBX distribution index (default 2)
    #[arg(long)]
    eta: Option<f64>,
    /// Run cells serially instead of in parallel (same output either way)
    #[arg(long)]
    serial: bool,
}

#[derive(Args)]
pub struct EvolveArgs {
    /// Operator: bx, sbx, or lpx
    #[arg(long)]
    op: Option<String>,
    /// Test function: tf1, tf3, or tf7
    #[arg(long)]
    tf: Option<String>,
    /// Chromosome length (default 5)
    #[arg(long)]
    dim: Option<usize>,
    /// Population size, even and >= 4 (default 40)
    #[arg(long)]
    pop: Option<usize>,
    /// Generations (default 100)
    #[arg(long)]
    gens: Option<usize>,
    /// Seed (default 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path; prints to stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Operator alpha (default: 0.5 for bx, drawn per mating for lpx)
    #[arg(long)]
    alpha: Option<f64>,
    /// SBX distribution index (default 2)
    #[arg(long)]
    eta: Option<f64>,
    /// Initialization interval lo,hi (default 0,1)
    #[arg(long)]
    range: Option<String>,
}

fn load_config(path: Option<PathBuf>, accepted_keys: &[&str]) -> Result<ConfigMap, CliError> {
    let path = path.or_else(|| std::env::var_os(CONFIG_ENV_VAR).map(PathBuf::from));
    match path {
        Some(path) => ConfigMap::load(&path, accepted_keys),
        None => Ok(ConfigMap::default()),
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Cross(args) => {
            let config = load_config(cli.config, cross::ACCEPTED_KEYS)?;
            cross::run(args, &config)
        }
        Command::Demo => {
            // demo takes no options; a config file must not smuggle any in
            load_config(cli.config, &[])?;
            demo::run()
        }
        Command::Bench(args) => {
            let config = load_config(cli.config, bench::ACCEPTED_KEYS)?;
            bench::run(args, &config)
        }
        Command::Evolve(args) => {
            let config = load_config(cli.config, evolve_cmd::ACCEPTED_KEYS)?;
            evolve_cmd::run(args, &config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Golden(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
