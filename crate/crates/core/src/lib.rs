//! Crossover operator toolkit for evolutionary algorithms.
//!
//! The crate collects the classic recombination operators in their three
//! encodings plus a Lagrangian-dual-based real-coded operator, together
//! with the benchmark functions and the seeded experiment harness used to
//! compare them:
//!
//! - [`binary`]: single-point, k-point, uniform (coin and mask forms),
//!   half-uniform, shuffle, and three-parent crossover on bit chromosomes.
//! - [`real`]: real single-point, single/whole arithmetic, blend (range
//!   and gamma forms), simulated binary, and Lagrangian problem crossover.
//! - [`perm`]: partially mapped and cycle crossover on permutations.
//! - [`benchmarks`]: the TF1/TF3/TF7 unimodal test functions.
//! - [`experiment`]: seeded benchmark grids with sum/mean/SD reporting and
//!   a minimal generational GA driver.
//!
//! Every stochastic operator takes an explicit [`RandomSource`]; identical
//! seeds give bit-identical results on every platform.

pub mod benchmarks;
pub mod binary;
pub mod error;
pub mod experiment;
pub mod perm;
pub mod real;
pub mod repr;
pub mod rng;

pub use error::{Result, XoverError};
pub use repr::{
    validate_permutation, BitChromosome, CrossoverParams, GeneMode, PermutationChromosome,
    RealChromosome,
};
pub use rng::{derive_cell_seed, RandomSource};
