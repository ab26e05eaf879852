//! Unimodal benchmark test functions used by the experiment harness.

use crate::error::{Result, XoverError};
use crate::rng::RandomSource;
use std::fmt;
use std::str::FromStr;

/// The three benchmark functions, by id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunctionId {
    Tf1,
    Tf3,
    Tf7,
}

impl TestFunctionId {
    pub const ALL: [TestFunctionId; 3] = [Self::Tf1, Self::Tf3, Self::Tf7];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Tf1 => "tf1",
            Self::Tf3 => "tf3",
            Self::Tf7 => "tf7",
        }
    }

    /// Evaluate on `genes`, validating that inputs and the result are
    /// finite. TF7 consumes exactly one noise draw from `rng`.
    pub fn evaluate(&self, genes: &[f64], rng: &mut RandomSource) -> Result<f64> {
        let noise = match self {
            Self::Tf7 => Some(rng.unit_uniform()),
            _ => None,
        };
        self.evaluate_with_noise(genes, noise)
    }

    /// Evaluate with TF7's noise term fixed (`None` means deterministic
    /// mode, noise 0).
    pub fn evaluate_with_noise(&self, genes: &[f64], noise: Option<f64>) -> Result<f64> {
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
        let value = match self {
            Self::Tf1 => tf1(genes),
            Self::Tf3 => tf3(genes),
            Self::Tf7 => tf7_deterministic(genes) + noise.unwrap_or(0.0),
        };
        if !value.is_finite() {
            return Err(XoverError::NonFiniteGene { index: 0, value });
        }
        Ok(value)
    }
}

impl fmt::Display for TestFunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TestFunctionId {
    type Err = XoverError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tf1" => Ok(Self::Tf1),
            "tf3" => Ok(Self::Tf3),
            "tf7" => Ok(Self::Tf7),
            other => Err(XoverError::InvalidConfig(format!(
                "unknown test function '{other}' (expected tf1, tf3, or tf7)"
            ))),
        }
    }
}

/// Sphere: sum of squared genes.
pub fn tf1(genes: &[f64]) -> f64 {
    genes.iter().map(|x| x * x).sum()
}

/// Sum of squared prefix sums.
pub fn tf3(genes: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for &x in genes {
        prefix += x;
        total += prefix * prefix;
    }
    total
}

/// Noisy quartic without the noise term: sum of `i * x_i^4` with 1-based i.
pub fn tf7_deterministic(genes: &[f64]) -> f64 {
    genes
        .iter()
        .enumerate()
        .map(|(i, &x)| (i + 1) as f64 * x.powi(4))
        .sum()
}

/// Noisy quartic: the deterministic part plus one uniform draw from [0, 1).
pub fn tf7(genes: &[f64], rng: &mut RandomSource) -> f64 {
    tf7_deterministic(genes) + rng.unit_uniform()
}
