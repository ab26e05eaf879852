//! `xover bench`: run the benchmark grid and emit CSV reports.

use crate::config::{merge, ConfigMap};
use crate::format::csv_f64;
use crate::{BenchArgs, CliError};
use std::path::PathBuf;
use xover::benchmarks::TestFunctionId;
use xover::experiment::{
    run_experiment, run_experiment_parallel, CellOperator, ExperimentConfig, ExperimentReport,
};

pub const ACCEPTED_KEYS: &[&str] = &[
    "ops",
    "alphas",
    "tfs",
    "generations",
    "seed",
    "out",
    "series",
    "range",
    "eta",
    "serial",
];

pub const CELLS_HEADER: &str = "operator,alpha,tf,sum,mean,sd,count,seed";
pub const SERIES_HEADER: &str =
    "operator,alpha,tf,generation,parent1,parent2,offspring1,offspring2,value";

fn parse_csv_list<T: std::str::FromStr>(raw: &str, flag: &str) -> Result<Vec<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|e| CliError::Usage(format!("{flag}: cannot parse '{s}': {e}")))
        })
        .collect()
}

fn parse_range(raw: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<f64> = parse_csv_list(raw, "--range")?;
    if parts.len() != 2 || parts[0].is_nan() || parts[1].is_nan() || parts[0] >= parts[1] {
        return Err(CliError::Usage(format!(
            "--range: expected lo,hi with lo < hi, got '{raw}'"
        )));
    }
    Ok((parts[0], parts[1]))
}

pub fn build_config(
    args: &BenchArgs,
    config: &ConfigMap,
) -> Result<(ExperimentConfig, Option<PathBuf>, PathBuf, bool), CliError> {
    let ops_raw = merge(args.ops.clone(), config, "ops")?.unwrap_or_else(|| "bx,sbx,lpx".into());
    let alphas_raw =
        merge(args.alphas.clone(), config, "alphas")?.unwrap_or_else(|| "0.2,0.5,0.7".into());
    let tfs_raw = merge(args.tfs.clone(), config, "tfs")?.unwrap_or_else(|| "tf1,tf3,tf7".into());
    let generations = merge(args.generations, config, "generations")?.unwrap_or(100);
    let seed = merge(args.seed, config, "seed")?.unwrap_or(0);
    let out = merge(args.out.clone(), config, "out")?
        .ok_or_else(|| CliError::Usage("--out is required".into()))?;
    let series = merge(args.series.clone(), config, "series")?;
    let eta = merge(args.eta, config, "eta")?.unwrap_or(2.0);
    let serial = args.serial || config.get::<bool>("serial")?.unwrap_or(false);
    let (gene_low, gene_high) = match merge(args.range.clone(), config, "range")? {
        Some(raw) => parse_range(&raw)?,
        None => (0.0, 1.0),
    };

    let operators: Vec<CellOperator> = parse_csv_list(&ops_raw, "--ops")?;
    let alphas: Vec<f64> = parse_csv_list(&alphas_raw, "--alphas")?;
    let tfs: Vec<TestFunctionId> = parse_csv_list(&tfs_raw, "--tfs")?;

    let experiment = ExperimentConfig {
        operators,
        alphas,
        tfs,
        generations,
        gene_low,
        gene_high,
        eta,
        base_seed: seed,
        capture_series: series.is_some(),
    };
    experiment
        .validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok((experiment, series, out, serial))
}

pub fn cells_csv(report: &ExperimentReport) -> String {
    let mut out = String::from(CELLS_HEADER);
    out.push('\n');
    for cell in &report.cells {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            cell.operator,
            csv_f64(cell.alpha),
            cell.tf,
            csv_f64(cell.stats.sum),
            csv_f64(cell.stats.mean),
            csv_f64(cell.stats.sd),
            cell.stats.count,
            cell.seed,
        ));
    }
    out
}

pub fn series_csv(report: &ExperimentReport) -> String {
    let mut out = String::from(SERIES_HEADER);
    out.push('\n');
    for cell in &report.cells {
        for record in cell.series.iter().flatten() {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                cell.operator,
                csv_f64(cell.alpha),
                cell.tf,
                record.generation,
                csv_f64(record.parent1),
                csv_f64(record.parent2),
                csv_f64(record.offspring1),
                csv_f64(record.offspring2),
                csv_f64(record.value),
            ));
        }
    }
    out
}

pub fn run(args: BenchArgs, config: &ConfigMap) -> Result<(), CliError> {
    let (experiment, series_path, out_path, serial) = build_config(&args, config)?;
    let report = if serial {
        run_experiment(&experiment)
    } else {
        run_experiment_parallel(&experiment)
    }
    .map_err(|e| CliError::Numeric(e.to_string()))?;

    // Files are written only after every cell has finished, so a numeric
    // failure never leaves a partial file behind.
    std::fs::write(&out_path, cells_csv(&report))
        .map_err(|e| CliError::Usage(format!("--out: cannot write {}: {e}", out_path.display())))?;
    if let Some(path) = series_path {
        std::fs::write(&path, series_csv(&report)).map_err(|e| {
            CliError::Usage(format!("--series: cannot write {}: {e}", path.display()))
        })?;
    }
    eprintln!(
        "wrote {} cells to {}",
        report.cells.len(),
        out_path.display()
    );
    Ok(())
}
