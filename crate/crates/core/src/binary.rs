//! Binary-form crossover operators.
//!
//! All operators are pure functions from parents (plus explicit cut points,
//! masks, or a [`RandomSource`]) to offspring. Cut positions are 1-based: a
//! cut at `c` splits between gene `c` and gene `c+1`.

use crate::error::{Result, XoverError};
use crate::repr::BitChromosome;
use crate::rng::RandomSource;

/// Strictly increasing cut positions, each in `[1, n-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPoints {
    positions: Vec<usize>,
}

impl CutPoints {
    /// Positions must be strictly increasing; the `[1, n-1]` bound is
    /// checked against the parents at crossover time.
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(XoverError::CutsNotIncreasing);
        }
        Ok(Self { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    fn check_len(&self, n: usize) -> Result<()> {
        for &c in &self.positions {
            check_cut(c, n)?;
        }
        Ok(())
    }
}

/// Per-position parent-selection mask, same length as the parents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossoverMask {
    bits: Vec<u8>,
}

impl CrossoverMask {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(XoverError::InvalidBit {
                    index: i + 1,
                    value: b,
                });
            }
        }
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }
}

fn check_equal_len(p1: &BitChromosome, p2: &BitChromosome) -> Result<usize> {
    if p1.len() != p2.len() {
        return Err(XoverError::LengthMismatch {
            left: p1.len(),
            right: p2.len(),
        });
    }
    Ok(p1.len())
}

fn check_cut(cut: usize, n: usize) -> Result<()> {
    if cut == 0 || cut >= n {
        return Err(XoverError::CutOutOfRange {
            cut,
            max: n.saturating_sub(1),
            len: n,
        });
    }
    Ok(())
}

/// Single-point crossover: genes after the cut are exchanged.
pub fn single_point(
    p1: &BitChromosome,
    p2: &BitChromosome,
    cut: usize,
) -> Result<(BitChromosome, BitChromosome)> {
    let n = check_equal_len(p1, p2)?;
    check_cut(cut, n)?;
    let (a, b) = (p1.genes(), p2.genes());
    let o1 = [&a[..cut], &b[cut..]].concat();
    let o2 = [&b[..cut], &a[cut..]].concat();
    Ok((BitChromosome::new(o1)?, BitChromosome::new(o2)?))
}

/// k-point crossover: segments between consecutive cuts alternate source
/// parent, starting with parent 1 for offspring 1. With a single cut this
/// is exactly [`single_point`].
pub fn k_point(
    p1: &BitChromosome,
    p2: &BitChromosome,
    cuts: &CutPoints,
) -> Result<(BitChromosome, BitChromosome)> {
    let n = check_equal_len(p1, p2)?;
    cuts.check_len(n)?;
    let (a, b) = (p1.genes(), p2.genes());
    let mut o1 = Vec::with_capacity(n);
    let mut o2 = Vec::with_capacity(n);
    let mut from_first = true;
    let mut start = 0;
    let bounds = cuts.positions().iter().copied().chain(std::iter::once(n));
    for end in bounds {
        if from_first {
            o1.extend_from_slice(&a[start..end]);
            o2.extend_from_slice(&b[start..end]);
        } else {
            o1.extend_from_slice(&b[start..end]);
            o2.extend_from_slice(&a[start..end]);
        }
        from_first = !from_first;
        start = end;
    }
    Ok((BitChromosome::new(o1)?, BitChromosome::new(o2)?))
}

/// Mask-driven uniform crossover: offspring 1 takes parent 1 wherever the
/// mask bit is 1 and parent 2 elsewhere; offspring 2 is complementary.
///
/// Covers both the coin-flip form (caller builds the mask from biased coin
/// flips, see [`uniform_coin`]) and the constructed-mask form where any
/// region-based mask is supplied directly.
pub fn uniform_masked(
    p1: &BitChromosome,
    p2: &BitChromosome,
    mask: &CrossoverMask,
) -> Result<(BitChromosome, BitChromosome)> {
    let n = check_equal_len(p1, p2)?;
    if mask.bits().len() != n {
        return Err(XoverError::MaskLengthMismatch {
            mask: mask.bits().len(),
            len: n,
        });
    }
    let (a, b) = (p1.genes(), p2.genes());
    let mut o1 = Vec::with_capacity(n);
    let mut o2 = Vec::with_capacity(n);
    for i in 0..n {
        if mask.bits()[i] == 1 {
            o1.push(a[i]);
            o2.push(b[i]);
        } else {
            o1.push(b[i]);
            o2.push(a[i]);
        }
    }
    Ok((BitChromosome::new(o1)?, BitChromosome::new(o2)?))
}

/// Coin-flip uniform crossover: one mask bit per position, set with
/// probability `bias` in favor of parent 1, then applied as in
/// [`uniform_masked`].
pub fn uniform_coin(
    p1: &BitChromosome,
    p2: &BitChromosome,
    bias: f64,
    rng: &mut RandomSource,
) -> Result<(BitChromosome, BitChromosome)> {
    if !(0.0..=1.0).contains(&bias) {
        return Err(XoverError::ParamOutOfRange {
            name: "bias",
            value: bias,
            min: 0.0,
            max: 1.0,
        });
    }
    let n = check_equal_len(p1, p2)?;
    let bits = (0..n).map(|_| u8::from(rng.bit(bias))).collect();
    uniform_masked(p1, p2, &CrossoverMask::new(bits)?)
}

/// Half-uniform crossover: exactly `floor(H/2)` of the `H` differing
/// positions, chosen uniformly without replacement, are exchanged.
pub fn half_uniform(
    p1: &BitChromosome,
    p2: &BitChromosome,
    rng: &mut RandomSource,
) -> Result<(BitChromosome, BitChromosome)> {
    let n = check_equal_len(p1, p2)?;
    let (a, b) = (p1.genes(), p2.genes());
    let mut differing: Vec<usize> = (0..n).filter(|&i| a[i] != b[i]).collect();
    let exchange = differing.len() / 2;
    // Partial Fisher-Yates: the first `exchange` entries end up a uniform
    // sample without replacement.
    for i in 0..exchange {
        let j = i + rng.int_below(differing.len() - i);
        differing.swap(i, j);
    }
    let mut o1 = a.to_vec();
    let mut o2 = b.to_vec();
    for &i in &differing[..exchange] {
        o1[i] = b[i];
        o2[i] = a[i];
    }
    Ok((BitChromosome::new(o1)?, BitChromosome::new(o2)?))
}

/// Shuffle crossover: scramble gene positions within each side of the cut
/// (one shared position permutation per side, applied to both parents),
/// exchange the sides as in [`single_point`], then optionally invert the
/// scrambling on the offspring.
pub fn shuffle_crossover(
    p1: &BitChromosome,
    p2: &BitChromosome,
    cut: usize,
    rng: &mut RandomSource,
    unshuffle: bool,
) -> Result<(BitChromosome, BitChromosome)> {
    let n = check_equal_len(p1, p2)?;
    check_cut(cut, n)?;
    // Left-side permutation is drawn first, then the right side.
    let left = rng.permutation_of(cut);
    let right = rng.permutation_of(n - cut);

    let apply = |genes: &[u8]| -> Vec<u8> {
        let mut out = Vec::with_capacity(n);
        out.extend(left.iter().map(|&j| genes[j]));
        out.extend(right.iter().map(|&j| genes[cut + j]));
        out
    };
    let s1 = BitChromosome::new(apply(p1.genes()))?;
    let s2 = BitChromosome::new(apply(p2.genes()))?;
    let (o1, o2) = single_point(&s1, &s2, cut)?;
    if !unshuffle {
        return Ok((o1, o2));
    }

    let mut inv_left = vec![0; cut];
    for (i, &j) in left.iter().enumerate() {
        inv_left[j] = i;
    }
    let mut inv_right = vec![0; n - cut];
    for (i, &j) in right.iter().enumerate() {
        inv_right[j] = i;
    }
    let invert = |genes: &[u8]| -> Vec<u8> {
        let mut out = Vec::with_capacity(n);
        out.extend(inv_left.iter().map(|&j| genes[j]));
        out.extend(inv_right.iter().map(|&j| genes[cut + j]));
        out
    };
    Ok((
        BitChromosome::new(invert(o1.genes()))?,
        BitChromosome::new(invert(o2.genes()))?,
    ))
}

/// Three-parent crossover. Offspring j is built from the ordered parent
/// combination (A, B, C) in {(p1,p2,p3), (p1,p3,p2), (p2,p3,p1)}: at each
/// position, take A's bit where A and B agree, otherwise take C's bit.
/// For bits this reduces to the positionwise majority of the three parents.
pub fn three_parent(
    p1: &BitChromosome,
    p2: &BitChromosome,
    p3: &BitChromosome,
) -> Result<(BitChromosome, BitChromosome, BitChromosome)> {
    let n = check_equal_len(p1, p2)?;
    if p3.len() != n {
        return Err(XoverError::LengthMismatch {
            left: n,
            right: p3.len(),
        });
    }
    let combine =
        |a: &BitChromosome, b: &BitChromosome, c: &BitChromosome| -> Result<BitChromosome> {
            let genes = (0..n)
                .map(|i| {
                    if a.genes()[i] == b.genes()[i] {
                        a.genes()[i]
                    } else {
                        c.genes()[i]
                    }
                })
                .collect();
            BitChromosome::new(genes)
        };
    Ok((
        combine(p1, p2, p3)?,
        combine(p1, p3, p2)?,
        combine(p2, p3, p1)?,
    ))
}
