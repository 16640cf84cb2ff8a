//! Exactly uniform sampling of alignments.
//!
//! A backward walk over the counting table picks each column with
//! probability `a(m - s) / a(m)` at the current residual `m`, which makes
//! every alignment equally likely. Randomness comes from a caller-supplied
//! generator; the convenience entry point seeds a ChaCha stream so results
//! are reproducible across platforms.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::step::{AlignmentMatrix, LengthTuple, StepVector, ValidatedStepSet};

use super::table::CountTable;

/// Reusable sampler for one `(step set, lengths)` pair; filling the counting
/// table once up front makes repeated draws cheap.
pub struct Sampler {
    dimension: usize,
    steps: Vec<StepVector>,
    table: CountTable,
    target: LengthTuple,
}

impl Sampler {
    pub fn new(steps: &ValidatedStepSet, lengths: &LengthTuple) -> Result<Self> {
        let table = CountTable::fill(steps, lengths)?;
        if table.corner().is_zero() {
            return Err(Error::NoAlignmentExists);
        }
        Ok(Sampler {
            dimension: steps.dimension(),
            steps: steps.materialize(lengths)?,
            table,
            target: lengths.clone(),
        })
    }

    /// Draws one alignment, consuming randomness from `rng`.
    pub fn sample<R: RngCore>(&self, rng: &mut R) -> AlignmentMatrix {
        let mut residual: Vec<u32> = self.target.lengths().to_vec();
        let mut columns_rev: Vec<StepVector> = Vec::new();
        while residual.iter().any(|&r| r > 0) {
            let total = self.table.get(&residual).expect("residual stays in the box");
            let draw = uniform_below(total, rng);
            let mut cumulative = BigUint::zero();
            let mut chosen = None;
            for step in &self.steps {
                if !step.fits_within(&residual) {
                    continue;
                }
                let remaining: Vec<u32> =
                    residual.iter().zip(step.entries()).map(|(&r, &s)| r - s).collect();
                cumulative += self.table.get(&remaining).expect("inside the box");
                if draw < cumulative {
                    chosen = Some(step.clone());
                    break;
                }
            }
            let step = chosen.expect("weights sum to the table entry");
            for (r, &s) in residual.iter_mut().zip(step.entries()) {
                *r -= s;
            }
            columns_rev.push(step);
        }
        columns_rev.reverse();
        AlignmentMatrix::from_columns(self.dimension, &columns_rev)
    }

    /// Draws one alignment from a fresh deterministic stream for the seed.
    pub fn sample_seeded(&self, seed: u64) -> AlignmentMatrix {
        self.sample(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Draws `n` alignments from one deterministic stream for the seed.
    pub fn sample_many(&self, seed: u64, n: usize) -> Vec<AlignmentMatrix> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n).map(|_| self.sample(&mut rng)).collect()
    }
}

/// Draws one alignment uniformly at random, deterministically for the seed.
pub fn sample_uniform(
    steps: &ValidatedStepSet,
    lengths: &LengthTuple,
    seed: u64,
) -> Result<AlignmentMatrix> {
    Ok(Sampler::new(steps, lengths)?.sample_seeded(seed))
}

/// Uniform big integer in `[0, bound)` by rejection on the top bit window.
fn uniform_below<R: RngCore>(bound: &BigUint, rng: &mut R) -> BigUint {
    debug_assert!(!bound.is_zero());
    if *bound == BigUint::one() {
        return BigUint::zero();
    }
    let bits = bound.bits();
    let bytes = bits.div_ceil(8) as usize;
    let top_mask: u8 = if bits.is_multiple_of(8) { 0xff } else { (1u8 << (bits % 8)) - 1 };
    let mut buf = vec![0u8; bytes];
    loop {
        rng.fill_bytes(&mut buf);
        buf[bytes - 1] &= top_mask;
        let candidate = BigUint::from_bytes_le(&buf);
        if candidate < *bound {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::dsl::parse_step_set;
    use crate::engine::enumerate::enumerate;
    use crate::step::is_alignment;

    fn set(expr: &str) -> ValidatedStepSet {
        parse_step_set(expr).unwrap().validate().unwrap()
    }

    #[test]
    fn samples_are_alignments_and_deterministic() {
        let s = set("{(1,1),(1,2),(2,1)}");
        let l = LengthTuple::new(vec![4, 5]);
        let a = sample_uniform(&s, &l, 7).unwrap();
        let b = sample_uniform(&s, &l, 7).unwrap();
        assert_eq!(a, b);
        assert!(is_alignment(&a, &s, &l).unwrap());
    }

    #[test]
    fn unique_alignment_is_always_returned() {
        let s = set("{(1,1)}");
        let l = LengthTuple::new(vec![3, 3]);
        let want = AlignmentMatrix::new(2, 3, vec![1, 1, 1, 1, 1, 1]).unwrap();
        for seed in 0..5 {
            assert_eq!(sample_uniform(&s, &l, seed).unwrap(), want);
        }
    }

    #[test]
    fn impossible_lengths_error() {
        let s = set("{(2,2)}");
        let err = sample_uniform(&s, &LengthTuple::new(vec![3, 3]), 0).unwrap_err();
        assert_eq!(err, Error::NoAlignmentExists);
    }

    #[test]
    fn zero_tuple_samples_empty_matrix() {
        let s = set("unit(2)");
        let got = sample_uniform(&s, &LengthTuple::new(vec![0, 0]), 0).unwrap();
        assert_eq!(got, AlignmentMatrix::empty(2));
    }

    #[test]
    fn pairwise_frequencies_are_near_uniform() {
        let s = set("unit(2)");
        let l = LengthTuple::new(vec![1, 1]);
        let sampler = Sampler::new(&s, &l).unwrap();
        let mut freq: HashMap<AlignmentMatrix, u32> = HashMap::new();
        for seed in 0..1000 {
            *freq.entry(sampler.sample_seeded(seed)).or_default() += 1;
        }
        assert_eq!(freq.len(), 3);
        for &n in freq.values() {
            assert!((250..420).contains(&n), "frequency {} far from 1000/3", n);
        }
    }

    #[test]
    fn every_alignment_is_reachable() {
        let s = set("{(1,1),(1,2),(2,1)}");
        let l = LengthTuple::new(vec![4, 5]);
        let universe = enumerate(&s, &l).unwrap();
        let sampler = Sampler::new(&s, &l).unwrap();
        let mut seen: HashMap<AlignmentMatrix, u32> = HashMap::new();
        for seed in 0..500 {
            *seen.entry(sampler.sample_seeded(seed)).or_default() += 1;
        }
        assert_eq!(seen.len(), universe.len());
        for m in seen.keys() {
            assert!(universe.contains(m));
        }
    }
}
