//! Chromosome representations and shared operator parameters.
//!
//! Three gene encodings cover every operator in the crate: real-valued,
//! bit-valued, and permutation-coded. All three are immutable values that
//! validate their invariants at construction time. Gene positions are
//! 1-based throughout the public API.

use crate::error::{Result, XoverError};

/// Ordered sequence of finite real-valued genes, length >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RealChromosome {
    genes: Vec<f64>,
}

impl RealChromosome {
    pub fn new(genes: Vec<f64>) -> Result<Self> {
        if genes.is_empty() {
            return Err(XoverError::EmptyChromosome);
        }
        for (i, &g) in genes.iter().enumerate() {
            if !g.is_finite() {
                return Err(XoverError::NonFiniteGene {
                    index: i + 1,
                    value: g,
                });
            }
        }
        Ok(Self { genes })
    }

    pub fn genes(&self) -> &[f64] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    /// Always false: chromosomes hold at least one gene.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Ordered sequence of 0/1 genes, length >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitChromosome {
    genes: Vec<u8>,
}

impl BitChromosome {
    pub fn new(genes: Vec<u8>) -> Result<Self> {
        if genes.is_empty() {
            return Err(XoverError::EmptyChromosome);
        }
        for (i, &g) in genes.iter().enumerate() {
            if g > 1 {
                return Err(XoverError::InvalidBit {
                    index: i + 1,
                    value: g,
                });
            }
        }
        Ok(Self { genes })
    }

    pub fn genes(&self) -> &[u8] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    /// Always false: chromosomes hold at least one gene.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Ordered sequence of distinct labels forming a permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationChromosome {
    genes: Vec<usize>,
}

impl PermutationChromosome {
    pub fn new(genes: Vec<usize>) -> Result<Self> {
        if genes.is_empty() {
            return Err(XoverError::EmptyChromosome);
        }
        if !validate_permutation(&genes) {
            return Err(XoverError::InvalidPermutation { len: genes.len() });
        }
        Ok(Self { genes })
    }

    pub fn genes(&self) -> &[usize] {
        &self.genes
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    /// Always false: chromosomes hold at least one gene.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// True iff `genes` is exactly the label set `{1..n}` with each label once.
pub fn validate_permutation(genes: &[usize]) -> bool {
    let n = genes.len();
    let mut seen = vec![false; n];
    for &g in genes {
        if g == 0 || g > n || seen[g - 1] {
            return false;
        }
        seen[g - 1] = true;
    }
    true
}

/// How a gene-level real-coded operator is applied across a chromosome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GeneMode {
    /// Recombine one gene position; all other genes copy from the
    /// offspring's own parent.
    #[default]
    SingleGene,
    /// Recombine every gene position.
    AllGenes,
}

/// Shared parameter block for the real-coded operators.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossoverParams {
    /// Blend / multiplier parameter. When absent, operators that need it
    /// draw one from their documented range.
    pub alpha: Option<f64>,
    /// SBX distribution index, >= 0.
    pub eta: f64,
    /// 1-based gene position for single-gene application. When absent in
    /// single-gene mode, a position is drawn uniformly.
    pub gene_index: Option<usize>,
    pub mode: GeneMode,
}

impl Default for CrossoverParams {
    fn default() -> Self {
        Self {
            alpha: None,
            eta: 2.0,
            gene_index: None,
            mode: GeneMode::SingleGene,
        }
    }
}

impl CrossoverParams {
    /// Check the parameter block against a chromosome length.
    pub fn validate(&self, len: usize) -> Result<()> {
        if self.eta.is_nan() || self.eta < 0.0 {
            return Err(XoverError::ParamOutOfRange {
                name: "eta",
                value: self.eta,
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        if let Some(k) = self.gene_index {
            if k == 0 || k > len {
                return Err(XoverError::GeneIndexOutOfRange { index: k, len });
            }
        }
        if let Some(a) = self.alpha {
            if !a.is_finite() {
                return Err(XoverError::NonFiniteParam {
                    name: "alpha",
                    value: a,
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_chromosome_rejects_non_finite() {
        assert!(RealChromosome::new(vec![0.1, f64::NAN]).is_err());
        assert!(RealChromosome::new(vec![f64::INFINITY]).is_err());
        assert!(RealChromosome::new(vec![]).is_err());
        assert!(RealChromosome::new(vec![0.1, -2.0]).is_ok());
    }

    #[test]
    fn bit_chromosome_rejects_non_bits() {
        assert!(BitChromosome::new(vec![0, 1, 2]).is_err());
        assert!(BitChromosome::new(vec![]).is_err());
        assert!(BitChromosome::new(vec![0, 1, 1, 0]).is_ok());
    }

    #[test]
    fn validate_permutation_examples() {
        assert!(validate_permutation(&[1, 2, 3]));
        assert!(!validate_permutation(&[1, 1, 3]));
        assert!(validate_permutation(&[2, 3, 1]));
        assert!(!validate_permutation(&[0, 1]));
        assert!(!validate_permutation(&[2, 3]));
    }

    /// Brute-force oracle: count occurrences of every label.
    fn permutation_oracle(genes: &[usize]) -> bool {
        let n = genes.len();
        (1..=n).all(|label| genes.iter().filter(|&&g| g == label).count() == 1)
    }

    #[test]
    fn validate_permutation_matches_oracle_exhaustively() {
        // All sequences of length 1..=6 over labels {1..6}.
        for len in 1..=6usize {
            let mut seq = vec![1usize; len];
            loop {
                assert_eq!(
                    validate_permutation(&seq),
                    permutation_oracle(&seq),
                    "disagree on {seq:?}"
                );
                // odometer increment over labels 1..=6
                let mut pos = 0;
                loop {
                    if pos == len {
                        break;
                    }
                    if seq[pos] < 6 {
                        seq[pos] += 1;
                        break;
                    }
                    seq[pos] = 1;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
            }
        }
    }

    #[test]
    fn params_validate_ranges() {
        let p = CrossoverParams {
            eta: -1.0,
            ..Default::default()
        };
        assert!(p.validate(3).is_err());
        let p = CrossoverParams {
            gene_index: Some(4),
            ..Default::default()
        };
        assert!(p.validate(3).is_err());
        assert!(p.validate(4).is_ok());
    }
}
