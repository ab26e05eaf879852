//! `xover cross`: apply one crossover operator to explicit parents.

use crate::config::{merge, ConfigMap};
use crate::format::{int_genes, real_genes};
use crate::{CliError, CrossArgs};
use xover::binary::{
    half_uniform, k_point, shuffle_crossover, single_point, three_parent, uniform_coin,
    uniform_masked, CrossoverMask, CutPoints,
};
use xover::perm::{cx, pmx, SegmentRange};
use xover::real::{
    blx_sample, bx_gamma, lpx, rspx, sax_chromosomes, sbx, sbx_spread, wax_chromosomes, GenePair,
};
use xover::repr::GeneMode;
use xover::{BitChromosome, CrossoverParams, PermutationChromosome, RandomSource, RealChromosome};

pub const ACCEPTED_KEYS: &[&str] = &[
    "op",
    "p1",
    "p2",
    "p3",
    "cut",
    "cuts",
    "mask",
    "bias",
    "alpha",
    "beta",
    "eta",
    "mu",
    "r",
    "k",
    "seg",
    "mode",
    "seed",
    "unshuffle",
];

/// Effective options after flag/config merging.
struct Options {
    op: String,
    p1: String,
    p2: String,
    p3: Option<String>,
    cut: Option<usize>,
    cuts: Option<String>,
    mask: Option<String>,
    bias: Option<f64>,
    alpha: Option<f64>,
    beta: Option<f64>,
    eta: Option<f64>,
    mu: Option<f64>,
    r: Option<f64>,
    k: Option<usize>,
    seg: Option<String>,
    mode: Option<String>,
    seed: u64,
    unshuffle: bool,
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{flag} is required")))
}

fn parse_list<T: std::str::FromStr>(raw: &str, flag: &str) -> Result<Vec<T>, CliError>
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

fn operator_error(err: xover::XoverError) -> CliError {
    CliError::Usage(err.to_string())
}

pub fn run(args: CrossArgs, config: &ConfigMap) -> Result<(), CliError> {
    let opts = Options {
        op: required(merge(args.op, config, "op")?, "--op")?,
        p1: required(merge(args.p1, config, "p1")?, "--p1")?,
        p2: required(merge(args.p2, config, "p2")?, "--p2")?,
        p3: merge(args.p3, config, "p3")?,
        cut: merge(args.cut, config, "cut")?,
        cuts: merge(args.cuts, config, "cuts")?,
        mask: merge(args.mask, config, "mask")?,
        bias: merge(args.bias, config, "bias")?,
        alpha: merge(args.alpha, config, "alpha")?,
        beta: merge(args.beta, config, "beta")?,
        eta: merge(args.eta, config, "eta")?,
        mu: merge(args.mu, config, "mu")?,
        r: merge(args.r, config, "r")?,
        k: merge(args.k, config, "k")?,
        seg: merge(args.seg, config, "seg")?,
        mode: merge(args.mode, config, "mode")?,
        seed: merge(args.seed, config, "seed")?.unwrap_or(0),
        unshuffle: merge(args.unshuffle, config, "unshuffle")?.unwrap_or(true),
    };
    let mut rng = RandomSource::from_seed(opts.seed);
    match opts.op.to_ascii_lowercase().as_str() {
        "single" => {
            let (p1, p2) = bit_parents(&opts)?;
            let cut = required(opts.cut, "--cut")?;
            let (o1, o2) = single_point(&p1, &p2, cut).map_err(operator_error)?;
            print_bits(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "kpoint" => {
            let (p1, p2) = bit_parents(&opts)?;
            let raw = required(opts.cuts.as_deref(), "--cuts")?;
            let cuts = CutPoints::new(parse_list(raw, "--cuts")?).map_err(operator_error)?;
            let (o1, o2) = k_point(&p1, &p2, &cuts).map_err(operator_error)?;
            print_bits(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "mask" => {
            let (p1, p2) = bit_parents(&opts)?;
            let raw = required(opts.mask.as_deref(), "--mask")?;
            let mask = CrossoverMask::new(parse_list(raw, "--mask")?).map_err(operator_error)?;
            let (o1, o2) = uniform_masked(&p1, &p2, &mask).map_err(operator_error)?;
            print_bits(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "uniform" => {
            let (p1, p2) = bit_parents(&opts)?;
            let bias = opts.bias.unwrap_or(0.5);
            let (o1, o2) = uniform_coin(&p1, &p2, bias, &mut rng).map_err(operator_error)?;
            print_bits(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "hux" => {
            let (p1, p2) = bit_parents(&opts)?;
            let (o1, o2) = half_uniform(&p1, &p2, &mut rng).map_err(operator_error)?;
            print_bits(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "shx" => {
            let (p1, p2) = bit_parents(&opts)?;
            let cut = required(opts.cut, "--cut")?;
            let (o1, o2) = shuffle_crossover(&p1, &p2, cut, &mut rng, opts.unshuffle)
                .map_err(operator_error)?;
            print_bits(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "tpx" => {
            let (p1, p2) = bit_parents(&opts)?;
            let raw = required(opts.p3.as_deref(), "--p3")?;
            let p3 = BitChromosome::new(parse_list(raw, "--p3")?).map_err(operator_error)?;
            let (o1, o2, o3) = three_parent(&p1, &p2, &p3).map_err(operator_error)?;
            print_bits(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("parent3", &p3),
                ("offspring1", &o1),
                ("offspring2", &o2),
                ("offspring3", &o3),
            ]);
        }
        "rspx" => {
            let (p1, p2) = real_parents(&opts)?;
            let cut = required(opts.cut, "--cut")?;
            let (o1, o2) = rspx(&p1, &p2, cut).map_err(operator_error)?;
            print_reals(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "sax" => {
            let (p1, p2) = real_parents(&opts)?;
            let alpha = required(opts.alpha, "--alpha")?;
            let k = gene_position(&opts, p1.len(), &mut rng)?;
            let (o1, o2) = sax_chromosomes(&p1, &p2, k, alpha).map_err(operator_error)?;
            print_reals(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "wax" => {
            let (p1, p2) = real_parents(&opts)?;
            let alpha = required(opts.alpha, "--alpha")?;
            let beta = required(opts.beta, "--beta")?;
            let k = gene_position(&opts, p1.len(), &mut rng)?;
            let offspring =
                wax_chromosomes(&p1, &p2, k, &[(alpha, beta)]).map_err(operator_error)?;
            print_reals(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &offspring[0]),
            ]);
        }
        "bx" => {
            let (p1, p2) = real_parents(&opts)?;
            let alpha = required(opts.alpha, "--alpha")?;
            let apply = |pair: GenePair, rng: &mut RandomSource| {
                let r = opts.r.unwrap_or_else(|| rng.open_unit_uniform());
                bx_gamma(pair, alpha, r)
            };
            let (o1, o2) = apply_real_pairwise(&opts, &p1, &p2, &mut rng, apply)?;
            print_reals(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "blx" => {
            let (p1, p2) = real_parents(&opts)?;
            let alpha = required(opts.alpha, "--alpha")?;
            let apply = |pair: GenePair, rng: &mut RandomSource| blx_sample(pair, alpha, rng);
            let (o1, o2) = apply_real_pairwise(&opts, &p1, &p2, &mut rng, apply)?;
            print_reals(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "sbx" => {
            let (p1, p2) = real_parents(&opts)?;
            let eta = opts.eta.unwrap_or(2.0);
            let apply = |pair: GenePair, rng: &mut RandomSource| {
                let mu = opts.mu.unwrap_or_else(|| rng.open_unit_uniform());
                sbx(pair, sbx_spread(mu, eta)?)
            };
            let (o1, o2) = apply_real_pairwise(&opts, &p1, &p2, &mut rng, apply)?;
            print_reals(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "lpx" => {
            let (p1, p2) = real_parents(&opts)?;
            let params = CrossoverParams {
                alpha: opts.alpha,
                gene_index: opts.k,
                mode: parse_mode(&opts)?,
                ..Default::default()
            };
            let (o1, o2) = lpx(&p1, &p2, &params, &mut rng).map_err(operator_error)?;
            print_reals(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "pmx" => {
            let (p1, p2) = perm_parents(&opts)?;
            let seg = match opts.seg.as_deref() {
                Some(raw) => {
                    let bounds: Vec<usize> = parse_list(raw, "--seg")?;
                    if bounds.len() != 2 {
                        return Err(CliError::Usage("--seg: expected lo,hi".into()));
                    }
                    SegmentRange::new(bounds[0], bounds[1]).map_err(operator_error)?
                }
                None => {
                    let lo = 1 + rng.int_below(p1.len());
                    let hi = lo + rng.int_below(p1.len() - lo + 1);
                    SegmentRange::new(lo, hi).map_err(operator_error)?
                }
            };
            let (o1, o2) = pmx(&p1, &p2, &seg).map_err(operator_error)?;
            print_perms(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        "cx" => {
            let (p1, p2) = perm_parents(&opts)?;
            let (o1, o2) = cx(&p1, &p2).map_err(operator_error)?;
            print_perms(&[
                ("parent1", &p1),
                ("parent2", &p2),
                ("offspring1", &o1),
                ("offspring2", &o2),
            ]);
        }
        other => {
            return Err(CliError::Usage(format!(
                "--op: unknown operator '{other}' (known: single, kpoint, mask, uniform, hux, shx, tpx, rspx, sax, wax, bx, blx, sbx, lpx, pmx, cx)"
            )));
        }
    }
    Ok(())
}

fn bit_parents(opts: &Options) -> Result<(BitChromosome, BitChromosome), CliError> {
    let p1 = BitChromosome::new(parse_list(&opts.p1, "--p1")?).map_err(operator_error)?;
    let p2 = BitChromosome::new(parse_list(&opts.p2, "--p2")?).map_err(operator_error)?;
    Ok((p1, p2))
}

fn real_parents(opts: &Options) -> Result<(RealChromosome, RealChromosome), CliError> {
    let p1 = RealChromosome::new(parse_list(&opts.p1, "--p1")?).map_err(operator_error)?;
    let p2 = RealChromosome::new(parse_list(&opts.p2, "--p2")?).map_err(operator_error)?;
    Ok((p1, p2))
}

fn perm_parents(
    opts: &Options,
) -> Result<(PermutationChromosome, PermutationChromosome), CliError> {
    let p1 = PermutationChromosome::new(parse_list(&opts.p1, "--p1")?).map_err(operator_error)?;
    let p2 = PermutationChromosome::new(parse_list(&opts.p2, "--p2")?).map_err(operator_error)?;
    Ok((p1, p2))
}

fn gene_position(opts: &Options, len: usize, rng: &mut RandomSource) -> Result<usize, CliError> {
    match opts.k {
        Some(k) if k == 0 || k > len => Err(CliError::Usage(format!(
            "--k: gene index {k} outside 1..={len}"
        ))),
        Some(k) => Ok(k),
        None => Ok(1 + rng.int_below(len)),
    }
}

fn parse_mode(opts: &Options) -> Result<GeneMode, CliError> {
    match opts.mode.as_deref() {
        None | Some("single") => Ok(GeneMode::SingleGene),
        Some("all") => Ok(GeneMode::AllGenes),
        Some(other) => Err(CliError::Usage(format!(
            "--mode: expected 'single' or 'all', got '{other}'"
        ))),
    }
}

/// Apply a gene-level operator at position k (single mode, the default) or
/// across all genes (mode=all), copying untouched genes from each
/// offspring's own parent.
fn apply_real_pairwise(
    opts: &Options,
    p1: &RealChromosome,
    p2: &RealChromosome,
    rng: &mut RandomSource,
    mut op: impl FnMut(GenePair, &mut RandomSource) -> xover::Result<(f64, f64)>,
) -> Result<(RealChromosome, RealChromosome), CliError> {
    if p1.len() != p2.len() {
        return Err(CliError::Usage(format!(
            "--p2: parent lengths differ: {} vs {}",
            p1.len(),
            p2.len()
        )));
    }
    let mut o1 = p1.genes().to_vec();
    let mut o2 = p2.genes().to_vec();
    match parse_mode(opts)? {
        GeneMode::AllGenes => {
            for i in 0..o1.len() {
                let pair = GenePair::new(p1.genes()[i], p2.genes()[i]).map_err(operator_error)?;
                let (a, b) = op(pair, rng).map_err(operator_error)?;
                o1[i] = a;
                o2[i] = b;
            }
        }
        GeneMode::SingleGene => {
            let idx = gene_position(opts, p1.len(), rng)? - 1;
            let pair = GenePair::new(p1.genes()[idx], p2.genes()[idx]).map_err(operator_error)?;
            let (a, b) = op(pair, rng).map_err(operator_error)?;
            o1[idx] = a;
            o2[idx] = b;
        }
    }
    Ok((
        RealChromosome::new(o1).map_err(operator_error)?,
        RealChromosome::new(o2).map_err(operator_error)?,
    ))
}

fn print_bits(rows: &[(&str, &BitChromosome)]) {
    for (label, chromosome) in rows {
        println!("{label}: {}", int_genes(chromosome.genes()));
    }
}

fn print_reals(rows: &[(&str, &RealChromosome)]) {
    for (label, chromosome) in rows {
        println!("{label}: {}", real_genes(chromosome.genes()));
    }
}

fn print_perms(rows: &[(&str, &PermutationChromosome)]) {
    for (label, chromosome) in rows {
        println!("{label}: {}", int_genes(chromosome.genes()));
    }
}
