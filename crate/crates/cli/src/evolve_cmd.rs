//! `xover evolve`: run the minimal generational GA and emit its trace.

use crate::config::{merge, ConfigMap};
use crate::format::csv_f64;
use crate::{CliError, EvolveArgs};
use xover::benchmarks::TestFunctionId;
use xover::experiment::{evolve, CellOperator, EvolveConfig};

pub const ACCEPTED_KEYS: &[&str] = &[
    "op", "tf", "dim", "pop", "gens", "seed", "out", "alpha", "eta", "range",
];

pub const TRACE_HEADER: &str = "generation,best_fitness";

pub fn trace_csv(best_per_generation: &[f64]) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for (i, best) in best_per_generation.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, csv_f64(*best)));
    }
    out
}

pub fn run(args: EvolveArgs, config: &ConfigMap) -> Result<(), CliError> {
    let op_raw =
        merge(args.op, config, "op")?.ok_or_else(|| CliError::Usage("--op is required".into()))?;
    let tf_raw =
        merge(args.tf, config, "tf")?.ok_or_else(|| CliError::Usage("--tf is required".into()))?;
    let operator: CellOperator = op_raw
        .parse()
        .map_err(|e| CliError::Usage(format!("--op: {e}")))?;
    let tf: TestFunctionId = tf_raw
        .parse()
        .map_err(|e| CliError::Usage(format!("--tf: {e}")))?;

    let mut evolve_config = EvolveConfig::new(
        operator,
        tf,
        merge(args.dim, config, "dim")?.unwrap_or(5),
        merge(args.pop, config, "pop")?.unwrap_or(40),
        merge(args.gens, config, "gens")?.unwrap_or(100),
        merge(args.seed, config, "seed")?.unwrap_or(0),
    );
    evolve_config.alpha = merge(args.alpha, config, "alpha")?;
    evolve_config.eta = merge(args.eta, config, "eta")?.unwrap_or(2.0);
    if let Some(raw) = merge(args.range, config, "range")? {
        let parts: Vec<&str> = raw.split(',').collect();
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("--range: cannot parse '{s}': {e}")))
        };
        if parts.len() != 2 {
            return Err(CliError::Usage(format!(
                "--range: expected lo,hi, got '{raw}'"
            )));
        }
        evolve_config.gene_low = parse(parts[0])?;
        evolve_config.gene_high = parse(parts[1])?;
    }

    let result = evolve(&evolve_config).map_err(|e| CliError::Usage(e.to_string()))?;
    let csv = trace_csv(&result.best_per_generation);
    match args.out.map(Ok).or_else(|| config.get("out").transpose()) {
        Some(path) => {
            let path: std::path::PathBuf = path?;
            std::fs::write(&path, csv).map_err(|e| {
                CliError::Usage(format!("--out: cannot write {}: {e}", path.display()))
            })?;
            eprintln!(
                "wrote {} generations to {}",
                result.best_per_generation.len(),
                path.display()
            );
        }
        None => print!("{csv}"),
    }
    Ok(())
}
