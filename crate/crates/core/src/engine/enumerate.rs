//! Exhaustive enumeration of alignments, used as a correctness oracle.
//!
//! Matrices come out in lexicographic order of their column sequences (with
//! steps compared as vectors), exactly once each. Counts explode quickly, so
//! enumeration refuses to start when the exact count exceeds a cap.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::step::{AlignmentMatrix, LengthTuple, StepVector, ValidatedStepSet};

use super::table::count;

/// Default cap on the number of matrices an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Enumerates all alignments of the given lengths, up to the default cap.
pub fn enumerate(steps: &ValidatedStepSet, lengths: &LengthTuple) -> Result<Vec<AlignmentMatrix>> {
    enumerate_capped(steps, lengths, DEFAULT_ENUMERATION_CAP)
}

/// Enumerates all alignments, refusing with the exact count attached when it
/// exceeds `cap`.
pub fn enumerate_capped(
    steps: &ValidatedStepSet,
    lengths: &LengthTuple,
    cap: u64,
) -> Result<Vec<AlignmentMatrix>> {
    let total = count(steps, lengths)?;
    if total.to_u64().is_none_or(|t| t > cap) {
        return Err(Error::EnumerationCapExceeded { count: total, cap });
    }
    let expected = total.to_u64().unwrap() as usize;

    let materialized = steps.materialize(lengths)?;
    let mut out = Vec::with_capacity(expected);
    let mut residual: Vec<u32> = lengths.lengths().to_vec();
    let mut columns: Vec<StepVector> = Vec::new();
    extend(steps.dimension(), &materialized, &mut residual, &mut columns, &mut out);
    debug_assert_eq!(out.len(), expected);
    Ok(out)
}

fn extend(
    rows: usize,
    steps: &[StepVector],
    residual: &mut Vec<u32>,
    columns: &mut Vec<StepVector>,
    out: &mut Vec<AlignmentMatrix>,
) {
    if residual.iter().all(|&r| r == 0) {
        out.push(AlignmentMatrix::from_columns(rows, columns));
        return;
    }
    for step in steps {
        if !step.fits_within(residual) {
            continue;
        }
        for (r, &s) in residual.iter_mut().zip(step.entries()) {
            *r -= s;
        }
        columns.push(step.clone());
        extend(rows, steps, residual, columns, out);
        columns.pop();
        for (r, &s) in residual.iter_mut().zip(step.entries()) {
            *r += s;
        }
    }
}
