//! Real-coded crossover operators.
//!
//! The gene-level operators (SAX, WAX, blend, SBX, LPX) act on a
//! [`GenePair`] and return raw offspring gene values; chromosome-level
//! wrappers apply them at one 1-based position `k` or across all genes.
//!
//! SBX follows the spread-factor formulation: for parents `g1`, `g2` and
//! spread `s`,
//!
//! ```text
//! o1 = 0.5 * ((g1 + g2) - s * |g2 - g1|)
//! o2 = 0.5 * ((g1 + g2) + s * |g2 - g1|)
//! ```
//!
//! with `s` drawn through [`sbx_spread`] from a uniform variate and the
//! distribution index `eta`. No clamping is applied by default: offspring
//! may land outside the parents' range (use [`sbx_clamped`] to bound them).
//!
//! LPX derives both offspring from a Lagrangian dual form with a fixed
//! quadratic objective and two linear constraints:
//!
//! ```text
//! o1 = (x1 - x2)^2 + (x2 - 1)^2 - a*[(x1 + 2*x2 - 1) + (2*x1 + x2 - 1)]
//! o2 = same expression with x1 and x2 exchanged
//! ```
//!
//! where the multiplier `a` lies in `[-1, 1]`.

use crate::error::{Result, XoverError};
use crate::repr::{CrossoverParams, GeneMode, RealChromosome};
use crate::rng::RandomSource;

/// One gene from each parent, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenePair {
    pub g1: f64,
    pub g2: f64,
}

impl GenePair {
    pub fn new(g1: f64, g2: f64) -> Result<Self> {
        if !g1.is_finite() {
            return Err(XoverError::NonFiniteParam {
                name: "g1",
                value: g1,
            });
        }
        if !g2.is_finite() {
            return Err(XoverError::NonFiniteParam {
                name: "g2",
                value: g2,
            });
        }
        Ok(Self { g1, g2 })
    }
}

fn check_equal_len(p1: &RealChromosome, p2: &RealChromosome) -> Result<usize> {
    if p1.len() != p2.len() {
        return Err(XoverError::LengthMismatch {
            left: p1.len(),
            right: p2.len(),
        });
    }
    Ok(p1.len())
}

fn check_finite(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(XoverError::NonFiniteParam { name, value });
    }
    Ok(value)
}

fn check_gene_index(k: usize, len: usize) -> Result<usize> {
    if k == 0 || k > len {
        return Err(XoverError::GeneIndexOutOfRange { index: k, len });
    }
    Ok(k - 1)
}

/// Real single-point crossover: segment exchange after the cut, exactly as
/// the binary single-point but on real genes.
pub fn rspx(
    p1: &RealChromosome,
    p2: &RealChromosome,
    cut: usize,
) -> Result<(RealChromosome, RealChromosome)> {
    let n = check_equal_len(p1, p2)?;
    if cut == 0 || cut >= n {
        return Err(XoverError::CutOutOfRange {
            cut,
            max: n.saturating_sub(1),
            len: n,
        });
    }
    let (a, b) = (p1.genes(), p2.genes());
    let o1 = [&a[..cut], &b[cut..]].concat();
    let o2 = [&b[..cut], &a[cut..]].concat();
    Ok((RealChromosome::new(o1)?, RealChromosome::new(o2)?))
}

/// Single arithmetic crossover at one gene: `(1 - alpha)*g1 + alpha*g2`.
pub fn sax(pair: GenePair, alpha: f64) -> Result<f64> {
    check_finite("alpha", alpha)?;
    Ok((1.0 - alpha) * pair.g1 + alpha * pair.g2)
}

/// Apply [`sax`] at gene `k` (1-based). Both offspring receive the blended
/// value there; every other gene copies from the offspring's own parent.
pub fn sax_chromosomes(
    p1: &RealChromosome,
    p2: &RealChromosome,
    k: usize,
    alpha: f64,
) -> Result<(RealChromosome, RealChromosome)> {
    let n = check_equal_len(p1, p2)?;
    let idx = check_gene_index(k, n)?;
    let value = sax(GenePair::new(p1.genes()[idx], p2.genes()[idx])?, alpha)?;
    let mut o1 = p1.genes().to_vec();
    let mut o2 = p2.genes().to_vec();
    o1[idx] = value;
    o2[idx] = value;
    Ok((RealChromosome::new(o1)?, RealChromosome::new(o2)?))
}

/// Whole arithmetic (linear) crossover at one gene: `alpha_m*g1 + beta_m*g2`.
/// One offspring gene per coefficient pair.
pub fn wax(pair: GenePair, alpha_m: f64, beta_m: f64) -> Result<f64> {
    check_finite("alpha_m", alpha_m)?;
    check_finite("beta_m", beta_m)?;
    Ok(alpha_m * pair.g1 + beta_m * pair.g2)
}

/// Apply [`wax`] at gene `k` (1-based) for each coefficient pair, producing
/// one offspring per pair. Untouched genes copy from chromosome 1.
pub fn wax_chromosomes(
    p1: &RealChromosome,
    p2: &RealChromosome,
    k: usize,
    coefficients: &[(f64, f64)],
) -> Result<Vec<RealChromosome>> {
    let n = check_equal_len(p1, p2)?;
    let idx = check_gene_index(k, n)?;
    let pair = GenePair::new(p1.genes()[idx], p2.genes()[idx])?;
    coefficients
        .iter()
        .map(|&(a, b)| {
            let mut genes = p1.genes().to_vec();
            genes[idx] = wax(pair, a, b)?;
            RealChromosome::new(genes)
        })
        .collect()
}

/// Blend crossover sampling interval:
/// `[min(g1,g2) - alpha*d, max(g1,g2) + alpha*d]` with `d = |g2 - g1|`.
pub fn blx_range(pair: GenePair, alpha: f64) -> Result<(f64, f64)> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(XoverError::ParamOutOfRange {
            name: "alpha",
            value: alpha,
            min: 0.0,
            max: f64::INFINITY,
        });
    }
    let d = (pair.g2 - pair.g1).abs();
    let lo = pair.g1.min(pair.g2) - alpha * d;
    let hi = pair.g1.max(pair.g2) + alpha * d;
    Ok((lo, hi))
}

/// Two independent uniform draws from [`blx_range`].
pub fn blx_sample(pair: GenePair, alpha: f64, rng: &mut RandomSource) -> Result<(f64, f64)> {
    let (lo, hi) = blx_range(pair, alpha)?;
    Ok((rng.uniform_in(lo, hi), rng.uniform_in(lo, hi)))
}

/// Deterministic blend crossover through the gamma parameterization:
/// `gamma = (1 + 2*alpha)*r - alpha` with `r` in `(0, 1)`, then
/// `o1 = (1-gamma)*g1 + gamma*g2` and `o2 = (1-gamma)*g2 + gamma*g1`.
/// The offspring sum equals the parent sum.
pub fn bx_gamma(pair: GenePair, alpha: f64, r: f64) -> Result<(f64, f64)> {
    check_finite("alpha", alpha)?;
    if !r.is_finite() || r <= 0.0 || r >= 1.0 {
        return Err(XoverError::ParamOutOfRange {
            name: "r",
            value: r,
            min: 0.0,
            max: 1.0,
        });
    }
    let gamma = (1.0 + 2.0 * alpha) * r - alpha;
    let o1 = (1.0 - gamma) * pair.g1 + gamma * pair.g2;
    let o2 = (1.0 - gamma) * pair.g2 + gamma * pair.g1;
    Ok((o1, o2))
}

/// SBX spread factor for a uniform variate `mu` in `(0, 1)` and
/// distribution index `eta >= 0`:
///
/// ```text
/// s = (2*mu)^(1/(eta+1))            if mu < 0.5
/// s = (1/(2*(1-mu)))^(1/(eta+1))    otherwise
/// ```
///
/// Continuous at `mu = 0.5` with value 1.
pub fn sbx_spread(mu: f64, eta: f64) -> Result<f64> {
    if !mu.is_finite() || mu <= 0.0 || mu >= 1.0 {
        return Err(XoverError::ParamOutOfRange {
            name: "mu",
            value: mu,
            min: 0.0,
            max: 1.0,
        });
    }
    if eta.is_nan() || eta < 0.0 {
        return Err(XoverError::ParamOutOfRange {
            name: "eta",
            value: eta,
            min: 0.0,
            max: f64::INFINITY,
        });
    }
    let exponent = 1.0 / (eta + 1.0);
    if mu < 0.5 {
        Ok((2.0 * mu).powf(exponent))
    } else {
        Ok((1.0 / (2.0 * (1.0 - mu))).powf(exponent))
    }
}

/// One SBX draw: the uniform variate, the index, and the spread factor it
/// produces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SbxDraw {
    pub mu: f64,
    pub eta: f64,
    pub spread: f64,
}

impl SbxDraw {
    pub fn new(mu: f64, eta: f64) -> Result<Self> {
        Ok(Self {
            mu,
            eta,
            spread: sbx_spread(mu, eta)?,
        })
    }

    /// Draw `mu` from the open unit interval and derive the spread.
    pub fn sample(eta: f64, rng: &mut RandomSource) -> Result<Self> {
        Self::new(rng.open_unit_uniform(), eta)
    }
}

/// Simulated binary crossover at one gene with a given spread factor.
/// Offspring straddle the parent midpoint; their sum equals the parent sum
/// and their gap is `spread * |g2 - g1|`. No clamping is applied.
pub fn sbx(pair: GenePair, spread: f64) -> Result<(f64, f64)> {
    if !spread.is_finite() || spread <= 0.0 {
        return Err(XoverError::ParamOutOfRange {
            name: "spread",
            value: spread,
            min: 0.0,
            max: f64::INFINITY,
        });
    }
    let sum = pair.g1 + pair.g2;
    let gap = spread * (pair.g2 - pair.g1).abs();
    Ok((0.5 * (sum - gap), 0.5 * (sum + gap)))
}

/// [`sbx`] followed by clamping both offspring into `[lo, hi]`.
pub fn sbx_clamped(pair: GenePair, spread: f64, lo: f64, hi: f64) -> Result<(f64, f64)> {
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(XoverError::InvalidConfig(format!(
            "clamp interval [{lo}, {hi}] is empty"
        )));
    }
    let (o1, o2) = sbx(pair, spread)?;
    Ok((o1.clamp(lo, hi), o2.clamp(lo, hi)))
}

/// Probability density of the SBX spread factor (diagnostic):
/// `0.5*(eta+1)*s^eta` for `s <= 1` (contracting), otherwise
/// `0.5*(eta+1)/s^(eta+2)` (expanding). Integrates to 1 over `(0, inf)`.
pub fn sbx_density(spread: f64, eta: f64) -> Result<f64> {
    if !spread.is_finite() || spread <= 0.0 {
        return Err(XoverError::ParamOutOfRange {
            name: "spread",
            value: spread,
            min: 0.0,
            max: f64::INFINITY,
        });
    }
    if eta.is_nan() || eta < 0.0 {
        return Err(XoverError::ParamOutOfRange {
            name: "eta",
            value: eta,
            min: 0.0,
            max: f64::INFINITY,
        });
    }
    if spread <= 1.0 {
        Ok(0.5 * (eta + 1.0) * spread.powf(eta))
    } else {
        Ok(0.5 * (eta + 1.0) / spread.powf(eta + 2.0))
    }
}

/// The pieces of the Lagrangian dual form behind one LPX offspring:
/// objective value, both constraint values, and the multiplier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpxComponents {
    pub f_value: f64,
    pub g1_value: f64,
    pub g2_value: f64,
    pub alpha: f64,
}

impl LpxComponents {
    /// Evaluate the fixed objective `f = (x1-x2)^2 + (x2-1)^2` and the
    /// constraints `g1 = x1 + 2*x2 - 1`, `g2 = 2*x1 + x2 - 1`.
    pub fn evaluate(x1: f64, x2: f64, alpha: f64) -> Result<Self> {
        check_finite("x1", x1)?;
        check_finite("x2", x2)?;
        if !(-1.0..=1.0).contains(&alpha) {
            return Err(XoverError::ParamOutOfRange {
                name: "alpha",
                value: alpha,
                min: -1.0,
                max: 1.0,
            });
        }
        Ok(Self {
            f_value: (x1 - x2).powi(2) + (x2 - 1.0).powi(2),
            g1_value: x1 + 2.0 * x2 - 1.0,
            g2_value: 2.0 * x1 + x2 - 1.0,
            alpha,
        })
    }

    /// The dual value `f - alpha*(g1 + g2)`.
    pub fn offspring_value(&self) -> f64 {
        self.f_value - self.alpha * (self.g1_value + self.g2_value)
    }
}

/// Lagrangian problem crossover at one gene pair. Offspring 1 is the dual
/// value at `(x1, x2)`; offspring 2 is the dual value with the arguments
/// exchanged. The multiplier must lie in `[-1, 1]`.
pub fn lpx_pair(x1: f64, x2: f64, alpha: f64) -> Result<(f64, f64)> {
    let first = LpxComponents::evaluate(x1, x2, alpha)?;
    let second = LpxComponents::evaluate(x2, x1, alpha)?;
    Ok((first.offspring_value(), second.offspring_value()))
}

/// Chromosome-level LPX.
///
/// In single-gene mode the pair at position `k` (params.gene_index, drawn
/// uniformly when absent) is recombined and every other gene copies from
/// the offspring's own parent. In all-genes mode every position is
/// recombined with the same multiplier. When `params.alpha` is absent the
/// multiplier is drawn once per call, uniformly from `[-1, 1]`.
pub fn lpx(
    p1: &RealChromosome,
    p2: &RealChromosome,
    params: &CrossoverParams,
    rng: &mut RandomSource,
) -> Result<(RealChromosome, RealChromosome)> {
    let n = check_equal_len(p1, p2)?;
    params.validate(n)?;
    let alpha = match params.alpha {
        Some(a) => {
            if !(-1.0..=1.0).contains(&a) {
                return Err(XoverError::ParamOutOfRange {
                    name: "alpha",
                    value: a,
                    min: -1.0,
                    max: 1.0,
                });
            }
            a
        }
        None => rng.uniform_in(-1.0, 1.0),
    };
    match params.mode {
        GeneMode::SingleGene => {
            let k = match params.gene_index {
                Some(k) => k,
                None => 1 + rng.int_below(n),
            };
            let idx = check_gene_index(k, n)?;
            let (v1, v2) = lpx_pair(p1.genes()[idx], p2.genes()[idx], alpha)?;
            let mut o1 = p1.genes().to_vec();
            let mut o2 = p2.genes().to_vec();
            o1[idx] = v1;
            o2[idx] = v2;
            Ok((RealChromosome::new(o1)?, RealChromosome::new(o2)?))
        }
        GeneMode::AllGenes => {
            let mut o1 = Vec::with_capacity(n);
            let mut o2 = Vec::with_capacity(n);
            for i in 0..n {
                let (v1, v2) = lpx_pair(p1.genes()[i], p2.genes()[i], alpha)?;
                o1.push(v1);
                o2.push(v2);
            }
            Ok((RealChromosome::new(o1)?, RealChromosome::new(o2)?))
        }
    }
}
