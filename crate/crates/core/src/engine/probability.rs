//! Step-sum probabilities.
//!
//! For `k` independent draws, each uniform on a finite step set `S`, the
//! probability that the draws sum to `(l1, ..., lN)` is
//! `a(l1, ..., lN; k) / |S|^k`, an exact rational.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::step::{LengthTuple, ValidatedStepSet};

use super::table::count_with_parts;

/// Probability that `k` uniform draws from `steps` sum to `lengths`,
/// as a reduced rational. The step set must be finite.
pub fn prob_sum(steps: &ValidatedStepSet, k: u64, lengths: &LengthTuple) -> Result<BigRational> {
    let size = steps.cardinality().ok_or(Error::InfiniteStepSet)?;
    let favourable = count_with_parts(steps, lengths, k)?;
    let denominator = BigUint::from(size).pow(k as u32);
    Ok(BigRational::new(BigInt::from(favourable), BigInt::from(denominator)))
}
