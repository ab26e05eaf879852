//! Order-coded crossover operators: PMX and CX.
//!
//! Both operators guarantee valid permutations out for valid permutations
//! in. Segment bounds are 1-based and inclusive.

use crate::error::{Result, XoverError};
use crate::repr::PermutationChromosome;

/// Inclusive 1-based position range `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentRange {
    lo: usize,
    hi: usize,
}

impl SegmentRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(XoverError::SegmentOutOfRange { lo, hi, len: 0 });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.hi > n {
            return Err(XoverError::SegmentOutOfRange {
                lo: self.lo,
                hi: self.hi,
                len: n,
            });
        }
        Ok(())
    }
}

fn check_equal_len(p1: &PermutationChromosome, p2: &PermutationChromosome) -> Result<usize> {
    if p1.len() != p2.len() {
        return Err(XoverError::LengthMismatch {
            left: p1.len(),
            right: p2.len(),
        });
    }
    Ok(p1.len())
}

/// Build one PMX child: copy `keeper`'s segment, fill the rest from
/// `donor`, repairing duplicates by following the segment's positionwise
/// mapping until a value absent from the copied segment appears.
fn pmx_child(keeper: &[usize], donor: &[usize], lo: usize, hi: usize) -> Vec<usize> {
    let n = keeper.len();
    // segment_pos[v] = Some(j) iff keeper[j] == v for some j in the segment
    let mut segment_pos = vec![None; n + 1];
    for j in (lo - 1)..hi {
        segment_pos[keeper[j]] = Some(j);
    }
    let mut child = vec![0; n];
    child[(lo - 1)..hi].copy_from_slice(&keeper[(lo - 1)..hi]);
    for i in (0..(lo - 1)).chain(hi..n) {
        let mut v = donor[i];
        while let Some(j) = segment_pos[v] {
            v = donor[j];
        }
        child[i] = v;
    }
    child
}

/// Partially mapped crossover. Offspring 1 keeps parent 1's segment and
/// takes parent 2's values elsewhere, repaired through the segment mapping;
/// offspring 2 is symmetric with the roles exchanged.
pub fn pmx(
    p1: &PermutationChromosome,
    p2: &PermutationChromosome,
    seg: &SegmentRange,
) -> Result<(PermutationChromosome, PermutationChromosome)> {
    let n = check_equal_len(p1, p2)?;
    seg.check_len(n)?;
    let o1 = pmx_child(p1.genes(), p2.genes(), seg.lo, seg.hi);
    let o2 = pmx_child(p2.genes(), p1.genes(), seg.lo, seg.hi);
    Ok((
        PermutationChromosome::new(o1)?,
        PermutationChromosome::new(o2)?,
    ))
}

/// Cycle crossover. Positions are decomposed into cycles: starting from the
/// lowest unvisited position, repeatedly move to the position holding (in
/// parent 1) the value parent 2 shows at the current position, until the
/// walk returns. Odd-numbered cycles go to offspring 1 from parent 1,
/// even-numbered from parent 2; offspring 2 is complementary.
pub fn cx(
    p1: &PermutationChromosome,
    p2: &PermutationChromosome,
) -> Result<(PermutationChromosome, PermutationChromosome)> {
    let n = check_equal_len(p1, p2)?;
    let (a, b) = (p1.genes(), p2.genes());
    let mut pos_in_a = vec![0; n + 1];
    for (i, &v) in a.iter().enumerate() {
        pos_in_a[v] = i;
    }
    let mut o1 = vec![0; n];
    let mut o2 = vec![0; n];
    let mut visited = vec![false; n];
    let mut odd_cycle = true;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut pos = start;
        loop {
            visited[pos] = true;
            if odd_cycle {
                o1[pos] = a[pos];
                o2[pos] = b[pos];
            } else {
                o1[pos] = b[pos];
                o2[pos] = a[pos];
            }
            pos = pos_in_a[b[pos]];
            if pos == start {
                break;
            }
        }
        odd_cycle = !odd_cycle;
    }
    Ok((
        PermutationChromosome::new(o1)?,
        PermutationChromosome::new(o2)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomSource;

    fn pc(genes: &[usize]) -> PermutationChromosome {
        PermutationChromosome::new(genes.to_vec()).unwrap()
    }

    fn random_perm(n: usize, rng: &mut RandomSource) -> PermutationChromosome {
        let genes: Vec<usize> = rng.permutation_of(n).into_iter().map(|i| i + 1).collect();
        PermutationChromosome::new(genes).unwrap()
    }

    #[test]
    fn pmx_identical_parents() {
        let p = pc(&[3, 1, 4, 2, 5]);
        let seg = SegmentRange::new(2, 4).unwrap();
        let (o1, o2) = pmx(&p, &p, &seg).unwrap();
        assert_eq!((o1, o2), (p.clone(), p));
    }

    #[test]
    fn pmx_hand_traced_example() {
        // Mapping repair traced by hand: offspring1 keeps [2,3] of p1;
        // position 4 wants p2's 2, which maps through the segment to 4.
        let p1 = pc(&[1, 2, 3, 4, 5]);
        let p2 = pc(&[5, 4, 3, 2, 1]);
        let seg = SegmentRange::new(2, 3).unwrap();
        let (o1, o2) = pmx(&p1, &p2, &seg).unwrap();
        assert_eq!(o1.genes(), &[5, 2, 3, 4, 1]);
        assert_eq!(o2.genes(), &[1, 4, 3, 2, 5]);
    }

    #[test]
    fn pmx_whole_segment_returns_parents() {
        let p1 = pc(&[2, 4, 1, 3]);
        let p2 = pc(&[3, 1, 4, 2]);
        let seg = SegmentRange::new(1, 4).unwrap();
        let (o1, o2) = pmx(&p1, &p2, &seg).unwrap();
        assert_eq!((o1, o2), (p1, p2));
    }

    #[test]
    fn pmx_rejects_bad_segment() {
        let p = pc(&[1, 2, 3]);
        assert!(SegmentRange::new(0, 2).is_err());
        assert!(SegmentRange::new(3, 2).is_err());
        let seg = SegmentRange::new(2, 4).unwrap();
        assert!(pmx(&p, &p, &seg).is_err());
    }

    #[test]
    fn pmx_validity_and_segment_fidelity() {
        let mut rng = RandomSource::from_seed(31);
        for _ in 0..10_000 {
            let n = 2 + rng.int_below(11);
            let p1 = random_perm(n, &mut rng);
            let p2 = random_perm(n, &mut rng);
            let lo = 1 + rng.int_below(n);
            let hi = lo + rng.int_below(n - lo + 1);
            let seg = SegmentRange::new(lo, hi).unwrap();
            let (o1, o2) = pmx(&p1, &p2, &seg).unwrap();
            assert_eq!(&o1.genes()[lo - 1..hi], &p1.genes()[lo - 1..hi]);
            assert_eq!(&o2.genes()[lo - 1..hi], &p2.genes()[lo - 1..hi]);
        }
    }

    #[test]
    fn cx_identical_parents() {
        let p = pc(&[2, 1, 3]);
        let (o1, o2) = cx(&p, &p).unwrap();
        assert_eq!((o1, o2), (p.clone(), p));
    }

    #[test]
    fn cx_two_cycles_alternate() {
        let p1 = pc(&[1, 2, 3, 4]);
        let p2 = pc(&[2, 1, 4, 3]);
        let (o1, o2) = cx(&p1, &p2).unwrap();
        assert_eq!(o1.genes(), &[1, 2, 4, 3]);
        assert_eq!(o2.genes(), &[2, 1, 3, 4]);
    }

    #[test]
    fn cx_single_cycle_returns_parents() {
        let p1 = pc(&[1, 2]);
        let p2 = pc(&[2, 1]);
        let (o1, o2) = cx(&p1, &p2).unwrap();
        assert_eq!((o1, o2), (p1, p2));
    }

    #[test]
    fn cx_positional_provenance() {
        let mut rng = RandomSource::from_seed(32);
        for _ in 0..10_000 {
            let n = 2 + rng.int_below(11);
            let p1 = random_perm(n, &mut rng);
            let p2 = random_perm(n, &mut rng);
            let (o1, o2) = cx(&p1, &p2).unwrap();
            for i in 0..n {
                assert!(o1.genes()[i] == p1.genes()[i] || o1.genes()[i] == p2.genes()[i]);
                assert!(o2.genes()[i] == p1.genes()[i] || o2.genes()[i] == p2.genes()[i]);
            }
        }
    }

    /// Independent oracle: enumerate cycles by explicit set-following over
    /// position sets, then assign alternately.
    fn cx_oracle(p1: &[usize], p2: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let n = p1.len();
        let mut assigned: Vec<Option<bool>> = vec![None; n]; // Some(true) = from p1 for child1
        let mut cycle_index = 0;
        while let Some(start) = (0..n).find(|&i| assigned[i].is_none()) {
            cycle_index += 1;
            let mut members = std::collections::BTreeSet::new();
            let mut pos = start;
            while members.insert(pos) {
                let value = p2[pos];
                pos = p1.iter().position(|&v| v == value).unwrap();
            }
            for &m in &members {
                assigned[m] = Some(cycle_index % 2 == 1);
            }
        }
        let mut c1 = vec![0; n];
        let mut c2 = vec![0; n];
        for i in 0..n {
            if assigned[i] == Some(true) {
                c1[i] = p1[i];
                c2[i] = p2[i];
            } else {
                c1[i] = p2[i];
                c2[i] = p1[i];
            }
        }
        (c1, c2)
    }

    #[test]
    fn cx_matches_brute_force_oracle() {
        let mut rng = RandomSource::from_seed(33);
        for _ in 0..1_000 {
            let n = 2 + rng.int_below(5);
            let p1 = random_perm(n, &mut rng);
            let p2 = random_perm(n, &mut rng);
            let (o1, o2) = cx(&p1, &p2).unwrap();
            let (e1, e2) = cx_oracle(p1.genes(), p2.genes());
            assert_eq!(o1.genes(), &e1[..]);
            assert_eq!(o2.genes(), &e2[..]);
        }
    }
}
