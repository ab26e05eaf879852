//! Statistical experiment harness and minimal GA driver.
//!
//! A bench grid is the cartesian product of operators, alpha values, and
//! test functions. Every `(operator, alpha, tf)` cell derives its own seed
//! from the grid's base seed, so cells are independent of execution order
//! and of each other: any subset of the grid reproduces the same numbers
//! as the full grid, serially or in parallel.
//!
//! Per generation a cell draws one parent gene pair uniformly from the
//! sampling interval, applies the operator's gene-level form (fresh `r`
//! for the blend gamma form, fresh `mu` for SBX, the configured alpha as
//! the LPX multiplier), evaluates the test function on the two offspring
//! values (TF7 adds one seeded noise draw), and records the result. The
//! per-cell draw order is: parent 1, parent 2, operator draw, noise.

use crate::benchmarks::TestFunctionId;
use crate::error::{Result, XoverError};
use crate::real::{bx_gamma, lpx_pair, sbx, GenePair, SbxDraw};
use crate::rng::{derive_cell_seed, RandomSource};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

/// Sum / mean / population standard deviation over a recorded sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub sum: f64,
    pub mean: f64,
    pub sd: f64,
    pub count: usize,
}

/// Summarize a non-empty value sequence. The standard deviation uses the
/// population divisor (N).
pub fn summarize(values: &[f64]) -> Result<SummaryStats> {
    if values.is_empty() {
        return Err(XoverError::EmptyValues);
    }
    let count = values.len();
    let sum: f64 = values.iter().sum();
    let mean = sum / count as f64;
    let variance = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / count as f64;
    Ok(SummaryStats {
        sum,
        mean,
        sd: variance.sqrt(),
        count,
    })
}

/// Gene-level operators runnable inside a bench cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellOperator {
    /// Blend crossover, gamma form.
    Bx,
    /// Simulated binary crossover.
    Sbx,
    /// Lagrangian problem crossover.
    Lpx,
}

impl CellOperator {
    pub const ALL: [CellOperator; 3] = [Self::Bx, Self::Sbx, Self::Lpx];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Bx => "bx",
            Self::Sbx => "sbx",
            Self::Lpx => "lpx",
        }
    }

    /// Check that `alpha` lies in this operator's legal domain.
    pub fn check_alpha(&self, alpha: f64) -> Result<()> {
        match self {
            Self::Bx => {
                if !alpha.is_finite() || alpha < 0.0 {
                    return Err(XoverError::ParamOutOfRange {
                        name: "alpha",
                        value: alpha,
                        min: 0.0,
                        max: f64::INFINITY,
                    });
                }
            }
            Self::Lpx => {
                if !(-1.0..=1.0).contains(&alpha) {
                    return Err(XoverError::ParamOutOfRange {
                        name: "alpha",
                        value: alpha,
                        min: -1.0,
                        max: 1.0,
                    });
                }
            }
            // SBX ignores alpha; it only keys the cell.
            Self::Sbx => {
                if !alpha.is_finite() {
                    return Err(XoverError::NonFiniteParam {
                        name: "alpha",
                        value: alpha,
                    });
                }
            }
        }
        Ok(())
    }

    /// Produce one offspring gene pair. Draw order: the operator draw (if
    /// any) comes from `rng` after the parents were drawn by the caller.
    fn apply(
        &self,
        x1: f64,
        x2: f64,
        alpha: f64,
        eta: f64,
        rng: &mut RandomSource,
    ) -> Result<(f64, f64)> {
        match self {
            Self::Bx => {
                let r = rng.open_unit_uniform();
                bx_gamma(GenePair::new(x1, x2)?, alpha, r)
            }
            Self::Sbx => {
                let draw = SbxDraw::sample(eta, rng)?;
                sbx(GenePair::new(x1, x2)?, draw.spread)
            }
            Self::Lpx => lpx_pair(x1, x2, alpha),
        }
    }
}

impl fmt::Display for CellOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CellOperator {
    type Err = XoverError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bx" => Ok(Self::Bx),
            "sbx" => Ok(Self::Sbx),
            "lpx" => Ok(Self::Lpx),
            other => Err(XoverError::InvalidConfig(format!(
                "unknown operator '{other}' (expected bx, sbx, or lpx)"
            ))),
        }
    }
}

/// Bench grid configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub operators: Vec<CellOperator>,
    pub alphas: Vec<f64>,
    pub tfs: Vec<TestFunctionId>,
    pub generations: usize,
    pub gene_low: f64,
    pub gene_high: f64,
    pub eta: f64,
    pub base_seed: u64,
    /// Capture the per-generation series for plotting.
    pub capture_series: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            operators: CellOperator::ALL.to_vec(),
            alphas: vec![0.2, 0.5, 0.7],
            tfs: TestFunctionId::ALL.to_vec(),
            generations: 100,
            gene_low: 0.0,
            gene_high: 1.0,
            eta: 2.0,
            base_seed: 0,
            capture_series: false,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.operators.is_empty() || self.alphas.is_empty() || self.tfs.is_empty() {
            return Err(XoverError::InvalidConfig(
                "operators, alphas, and tfs must all be non-empty".into(),
            ));
        }
        if self.generations == 0 {
            return Err(XoverError::InvalidConfig("generations must be >= 1".into()));
        }
        if !self.gene_low.is_finite()
            || !self.gene_high.is_finite()
            || self.gene_low >= self.gene_high
        {
            return Err(XoverError::InvalidConfig(format!(
                "gene interval [{}, {}] must be finite and non-empty",
                self.gene_low, self.gene_high
            )));
        }
        if self.eta.is_nan() || self.eta < 0.0 {
            return Err(XoverError::ParamOutOfRange {
                name: "eta",
                value: self.eta,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        for &op in &self.operators {
            for &alpha in &self.alphas {
                op.check_alpha(alpha)
                    .map_err(|e| XoverError::InvalidConfig(format!("operator {op}: {e}")))?;
            }
        }
        Ok(())
    }

    /// Cells in their canonical order: operators outermost, then alphas,
    /// then test functions.
    pub fn cell_keys(&self) -> Vec<(CellOperator, f64, TestFunctionId)> {
        let mut keys = Vec::new();
        for &op in &self.operators {
            for &alpha in &self.alphas {
                for &tf in &self.tfs {
                    keys.push((op, alpha, tf));
                }
            }
        }
        keys
    }
}

/// One generation's record inside a cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerationRecord {
    pub generation: usize,
    pub parent1: f64,
    pub parent2: f64,
    pub offspring1: f64,
    pub offspring2: f64,
    pub value: f64,
}

/// A finished `(operator, alpha, tf)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub operator: CellOperator,
    pub alpha: f64,
    pub tf: TestFunctionId,
    pub seed: u64,
    pub stats: SummaryStats,
    pub series: Option<Vec<GenerationRecord>>,
}

/// The full grid, cells in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub cells: Vec<CellResult>,
}

impl ExperimentReport {
    pub fn cell(&self, op: CellOperator, alpha: f64, tf: TestFunctionId) -> Option<&CellResult> {
        self.cells
            .iter()
            .find(|c| c.operator == op && c.alpha == alpha && c.tf == tf)
    }
}

/// Run one grid cell with its derived seed.
pub fn run_cell(
    operator: CellOperator,
    alpha: f64,
    tf: TestFunctionId,
    config: &ExperimentConfig,
) -> Result<CellResult> {
    operator.check_alpha(alpha)?;
    if config.generations == 0 {
        return Err(XoverError::InvalidConfig("generations must be >= 1".into()));
    }
    let seed = derive_cell_seed(config.base_seed, operator.as_str(), alpha, tf.as_str());
    let mut rng = RandomSource::from_seed(seed);
    let mut values = Vec::with_capacity(config.generations);
    let mut series = config
        .capture_series
        .then(|| Vec::with_capacity(config.generations));
    for generation in 1..=config.generations {
        let x1 = rng.uniform_in(config.gene_low, config.gene_high);
        let x2 = rng.uniform_in(config.gene_low, config.gene_high);
        let (o1, o2) = operator.apply(x1, x2, alpha, config.eta, &mut rng)?;
        let overflow = || XoverError::NumericOverflow {
            operator: operator.as_str().into(),
            alpha,
            tf: tf.as_str().into(),
            generation,
        };
        if !o1.is_finite() || !o2.is_finite() {
            return Err(overflow());
        }
        let value = tf.evaluate(&[o1, o2], &mut rng).map_err(|_| overflow())?;
        values.push(value);
        if let Some(records) = series.as_mut() {
            records.push(GenerationRecord {
                generation,
                parent1: x1,
                parent2: x2,
                offspring1: o1,
                offspring2: o2,
                value,
            });
        }
    }
    Ok(CellResult {
        operator,
        alpha,
        tf,
        seed,
        stats: summarize(&values)?,
        series,
    })
}

fn annotate(err: XoverError, op: CellOperator, alpha: f64, tf: TestFunctionId) -> XoverError {
    match err {
        e @ XoverError::NumericOverflow { .. } => e,
        other => XoverError::CellFailure {
            operator: op.as_str().into(),
            alpha,
            tf: tf.as_str().into(),
            source: Box::new(other),
        },
    }
}

/// Run every cell of the grid serially, in canonical order.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let cells = config
        .cell_keys()
        .into_iter()
        .map(|(op, alpha, tf)| {
            run_cell(op, alpha, tf, config).map_err(|e| annotate(e, op, alpha, tf))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport { cells })
}

/// Run the grid with cells distributed across threads. Because every cell
/// owns its derived seed, the report is identical to [`run_experiment`].
pub fn run_experiment_parallel(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let cells = config
        .cell_keys()
        .into_par_iter()
        .map(|(op, alpha, tf)| {
            run_cell(op, alpha, tf, config).map_err(|e| annotate(e, op, alpha, tf))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport { cells })
}

/// Minimal generational GA configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolveConfig {
    pub operator: CellOperator,
    pub tf: TestFunctionId,
    pub dim: usize,
    pub pop_size: usize,
    pub generations: usize,
    pub seed: u64,
    /// Operator alpha. Defaults to 0.5 for the blend form; when absent for
    /// LPX, a multiplier is drawn uniformly from [-1, 1] once per mating.
    pub alpha: Option<f64>,
    pub eta: f64,
    pub gene_low: f64,
    pub gene_high: f64,
}

impl EvolveConfig {
    pub fn new(
        operator: CellOperator,
        tf: TestFunctionId,
        dim: usize,
        pop_size: usize,
        generations: usize,
        seed: u64,
    ) -> Self {
        Self {
            operator,
            tf,
            dim,
            pop_size,
            generations,
            seed,
            alpha: None,
            eta: 2.0,
            gene_low: 0.0,
            gene_high: 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(XoverError::InvalidConfig("dim must be >= 1".into()));
        }
        if self.pop_size < 4 || !self.pop_size.is_multiple_of(2) {
            return Err(XoverError::InvalidConfig(format!(
                "pop_size must be even and >= 4, got {}",
                self.pop_size
            )));
        }
        if self.generations == 0 {
            return Err(XoverError::InvalidConfig("generations must be >= 1".into()));
        }
        if !self.gene_low.is_finite()
            || !self.gene_high.is_finite()
            || self.gene_low >= self.gene_high
        {
            return Err(XoverError::InvalidConfig(format!(
                "gene interval [{}, {}] must be finite and non-empty",
                self.gene_low, self.gene_high
            )));
        }
        if self.eta.is_nan() || self.eta < 0.0 {
            return Err(XoverError::ParamOutOfRange {
                name: "eta",
                value: self.eta,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        if let Some(a) = self.alpha {
            self.operator.check_alpha(a)?;
        }
        Ok(())
    }
}

/// Result of a GA run: the best fitness in the initial population and the
/// best fitness after each generation.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolveResult {
    pub initial_best: f64,
    pub best_per_generation: Vec<f64>,
}

#[derive(Clone)]
struct Individual {
    genes: Vec<f64>,
    fitness: f64,
}

/// Generational GA: uniform initialization over the sampling interval,
/// size-2 tournament selection, the configured crossover in all-genes
/// mode, no mutation, elitism of one. Fitness is evaluated once per
/// individual at creation (minimization), so the elite's fitness carries
/// over unchanged and the best-fitness trace never increases.
///
/// Explosive operators (LPX squares gene magnitudes) get two rejection
/// rules instead of runtime errors: a mating whose offspring genes
/// overflow passes the parents through unchanged, and an individual whose
/// fitness evaluation overflows scores `+inf`, so it never beats a finite
/// competitor. The elite is finite from initialization on, so the
/// population always contains a finite individual.
pub fn evolve(config: &EvolveConfig) -> Result<EvolveResult> {
    config.validate()?;
    let mut rng = RandomSource::from_seed(config.seed);

    let spawn = |genes: Vec<f64>, rng: &mut RandomSource| -> Individual {
        let fitness = config.tf.evaluate(&genes, rng).unwrap_or(f64::INFINITY);
        Individual { genes, fitness }
    };

    let mut population = Vec::with_capacity(config.pop_size);
    for _ in 0..config.pop_size {
        let genes: Vec<f64> = (0..config.dim)
            .map(|_| rng.uniform_in(config.gene_low, config.gene_high))
            .collect();
        population.push(spawn(genes, &mut rng));
    }
    let best_of = |pop: &[Individual]| {
        pop.iter()
            .map(|ind| ind.fitness)
            .fold(f64::INFINITY, f64::min)
    };
    let initial_best = best_of(&population);

    let mut best_per_generation = Vec::with_capacity(config.generations);
    for _ in 0..config.generations {
        let elite = population
            .iter()
            .min_by(|a, b| a.fitness.total_cmp(&b.fitness))
            .expect("population is non-empty")
            .clone();
        let mut next = Vec::with_capacity(config.pop_size);
        next.push(elite);
        while next.len() < config.pop_size {
            let p1 = tournament(&population, &mut rng);
            let p2 = tournament(&population, &mut rng);
            let (g1, g2) = crossover_all_genes(
                config,
                &population[p1].genes,
                &population[p2].genes,
                &mut rng,
            )?;
            next.push(spawn(g1, &mut rng));
            if next.len() < config.pop_size {
                next.push(spawn(g2, &mut rng));
            }
        }
        population = next;
        best_per_generation.push(best_of(&population));
    }
    Ok(EvolveResult {
        initial_best,
        best_per_generation,
    })
}

/// Size-2 tournament: two positions drawn with replacement, lower fitness
/// wins (first draw wins ties).
fn tournament(population: &[Individual], rng: &mut RandomSource) -> usize {
    let a = rng.int_below(population.len());
    let b = rng.int_below(population.len());
    if population[b].fitness < population[a].fitness {
        b
    } else {
        a
    }
}

fn crossover_all_genes(
    config: &EvolveConfig,
    p1: &[f64],
    p2: &[f64],
    rng: &mut RandomSource,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let alpha = match (config.operator, config.alpha) {
        (_, Some(a)) => a,
        (CellOperator::Lpx, None) => rng.uniform_in(-1.0, 1.0),
        (_, None) => 0.5,
    };
    let mut c1 = Vec::with_capacity(p1.len());
    let mut c2 = Vec::with_capacity(p1.len());
    for i in 0..p1.len() {
        let (o1, o2) = config
            .operator
            .apply(p1[i], p2[i], alpha, config.eta, rng)?;
        c1.push(o1);
        c2.push(o2);
    }
    // Overflowing matings pass the parents through unchanged.
    let finite = |genes: &[f64]| genes.iter().all(|g| g.is_finite());
    if !finite(&c1) || !finite(&c2) {
        return Ok((p1.to_vec(), p2.to_vec()));
    }
    Ok((c1, c2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn summarize_examples() {
        let s = summarize(&[5.0]).unwrap();
        assert_eq!((s.sum, s.mean, s.sd, s.count), (5.0, 5.0, 0.0, 1));

        let s = summarize(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!((s.sum, s.mean, s.sd, s.count), (4.0, 1.0, 0.0, 4));

        let s = summarize(&[0.0, 2.0]).unwrap();
        assert_eq!((s.sum, s.mean, s.sd, s.count), (2.0, 1.0, 1.0, 2));

        assert!(summarize(&[]).is_err());
    }

    #[test]
    fn summarize_moment_identity() {
        // sd^2 + mean^2 == E[v^2]
        let mut rng = RandomSource::from_seed(51);
        for _ in 0..10_000 {
            let n = 1 + rng.int_below(20);
            let values: Vec<f64> = (0..n).map(|_| rng.uniform_in(-10.0, 10.0)).collect();
            let s = summarize(&values).unwrap();
            let second_moment = values.iter().map(|v| v * v).sum::<f64>() / n as f64;
            let lhs = s.sd * s.sd + s.mean * s.mean;
            assert_abs_diff_eq!(
                lhs,
                second_moment,
                epsilon = 1e-9 * second_moment.abs().max(1.0)
            );
        }
    }

    #[test]
    fn run_cell_degenerate_interval_gives_zero() {
        let config = ExperimentConfig {
            generations: 1,
            gene_low: 0.0,
            gene_high: 0.0,
            ..Default::default()
        };
        // degenerate interval is rejected by validate but run_cell itself
        // tolerates it: equal parents reproduce themselves under bx
        let cell = run_cell(CellOperator::Bx, 0.5, TestFunctionId::Tf1, &config).unwrap();
        assert_eq!(cell.stats.sum, 0.0);
        assert_eq!(cell.stats.count, 1);
    }

    #[test]
    fn run_cell_deterministic() {
        let config = ExperimentConfig {
            base_seed: 7,
            ..Default::default()
        };
        let a = run_cell(CellOperator::Lpx, 0.2, TestFunctionId::Tf3, &config).unwrap();
        let b = run_cell(CellOperator::Lpx, 0.2, TestFunctionId::Tf3, &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn run_cell_rejects_illegal_alpha() {
        let config = ExperimentConfig::default();
        assert!(run_cell(CellOperator::Lpx, 1.5, TestFunctionId::Tf1, &config).is_err());
        assert!(run_cell(CellOperator::Bx, -0.2, TestFunctionId::Tf1, &config).is_err());
    }

    #[test]
    fn report_has_one_cell_per_triple() {
        let config = ExperimentConfig {
            base_seed: 3,
            ..Default::default()
        };
        let report = run_experiment(&config).unwrap();
        assert_eq!(report.cells.len(), 27);

        let single = ExperimentConfig {
            operators: vec![CellOperator::Lpx],
            alphas: vec![0.2],
            tfs: vec![TestFunctionId::Tf1],
            base_seed: 3,
            ..Default::default()
        };
        assert_eq!(run_experiment(&single).unwrap().cells.len(), 1);
    }

    #[test]
    fn cells_independent_of_grid_shape() {
        let full = ExperimentConfig {
            base_seed: 11,
            ..Default::default()
        };
        let report = run_experiment(&full).unwrap();
        let subset = ExperimentConfig {
            operators: vec![CellOperator::Sbx],
            alphas: vec![0.5],
            tfs: vec![TestFunctionId::Tf7],
            base_seed: 11,
            ..Default::default()
        };
        let sub_report = run_experiment(&subset).unwrap();
        let from_full = report
            .cell(CellOperator::Sbx, 0.5, TestFunctionId::Tf7)
            .unwrap();
        assert_eq!(from_full, &sub_report.cells[0]);
    }

    #[test]
    fn parallel_report_identical_to_serial() {
        let config = ExperimentConfig {
            base_seed: 13,
            capture_series: true,
            ..Default::default()
        };
        let serial = run_experiment(&config).unwrap();
        let parallel = run_experiment_parallel(&config).unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn series_length_matches_generations() {
        let config = ExperimentConfig {
            generations: 17,
            capture_series: true,
            ..Default::default()
        };
        let cell = run_cell(CellOperator::Bx, 0.2, TestFunctionId::Tf1, &config).unwrap();
        let series = cell.series.unwrap();
        assert_eq!(series.len(), 17);
        assert_eq!(series[0].generation, 1);
        assert_eq!(series[16].generation, 17);
    }

    #[test]
    fn default_grid_ordering_at_seed_7() {
        // Frozen, seed-specific fact: with base seed 7 the LPX cell mean
        // beats both blend and SBX in every (tf, alpha) cell. The ordering
        // is not seed-universal (SBX's heavy-tailed spread lets some cells
        // flip on other seeds), so the regression pins this known-good
        // seed.
        let config = ExperimentConfig {
            base_seed: 7,
            ..Default::default()
        };
        let report = run_experiment(&config).unwrap();
        for &alpha in &[0.2, 0.5, 0.7] {
            for tf in TestFunctionId::ALL {
                let mean = |op| report.cell(op, alpha, tf).unwrap().stats.mean;
                assert!(mean(CellOperator::Lpx) > mean(CellOperator::Bx));
                assert!(mean(CellOperator::Lpx) > mean(CellOperator::Sbx));
            }
        }
    }

    #[test]
    fn evolve_trace_shape_and_monotonicity() {
        for op in CellOperator::ALL {
            for tf in TestFunctionId::ALL {
                let config = EvolveConfig::new(op, tf, 3, 8, 25, 17);
                let result = evolve(&config).unwrap();
                assert_eq!(result.best_per_generation.len(), 25);
                for w in result.best_per_generation.windows(2) {
                    assert!(w[1] <= w[0], "trace increased under elitism for {op}/{tf}");
                }
                assert!(result.best_per_generation[0] <= result.initial_best);
            }
        }
    }

    #[test]
    fn evolve_single_generation() {
        let config = EvolveConfig::new(CellOperator::Sbx, TestFunctionId::Tf1, 2, 4, 1, 5);
        let result = evolve(&config).unwrap();
        assert_eq!(result.best_per_generation.len(), 1);
    }

    #[test]
    fn evolve_rejects_bad_sizes() {
        let mut config = EvolveConfig::new(CellOperator::Sbx, TestFunctionId::Tf1, 2, 5, 1, 5);
        assert!(evolve(&config).is_err());
        config.pop_size = 2;
        assert!(evolve(&config).is_err());
        config.pop_size = 4;
        config.dim = 0;
        assert!(evolve(&config).is_err());
    }

    #[test]
    fn evolve_deterministic() {
        let config = EvolveConfig::new(CellOperator::Lpx, TestFunctionId::Tf3, 4, 10, 30, 23);
        assert_eq!(evolve(&config).unwrap(), evolve(&config).unwrap());
    }
}
