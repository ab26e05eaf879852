//! Shared fixtures for the criterion benches.

use xover::{BitChromosome, PermutationChromosome, RandomSource, RealChromosome};

pub fn random_bits(n: usize, seed: u64) -> BitChromosome {
    let mut rng = RandomSource::from_seed(seed);
    BitChromosome::new((0..n).map(|_| u8::from(rng.bit(0.5))).collect()).unwrap()
}

pub fn random_reals(n: usize, seed: u64) -> RealChromosome {
    let mut rng = RandomSource::from_seed(seed);
    RealChromosome::new((0..n).map(|_| rng.unit_uniform()).collect()).unwrap()
}

pub fn random_permutation(n: usize, seed: u64) -> PermutationChromosome {
    let mut rng = RandomSource::from_seed(seed);
    let genes: Vec<usize> = rng.permutation_of(n).into_iter().map(|i| i + 1).collect();
    PermutationChromosome::new(genes).unwrap()
}
