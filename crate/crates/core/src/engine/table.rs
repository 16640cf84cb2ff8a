//! Ground-truth counting.
//!
//! The number of alignments satisfies
//! `a(m) = sum over steps s of a(m - s)` with `a(0,...,0) = 1` and `a = 0`
//! off the non-negative orthant, so a single pass over the box in
//! lexicographic order fills the whole table. Tables are exact big integers
//! and can be cached keyed by `(step set, box)` so that sweeps reuse work.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grid::{walk_box, Grid};
use crate::step::{LengthTuple, StepVector, ValidatedStepSet};

/// A filled counting table over a box: entry `m` is the number of alignments
/// of lengths `m`, for every `m <= box`.
#[derive(Debug, Clone)]
pub struct CountTable {
    grid: Grid,
}

impl CountTable {
    /// Fills the table for the given step set over the box.
    pub fn fill(steps: &ValidatedStepSet, bounds: &LengthTuple) -> Result<CountTable> {
        if steps.dimension() != bounds.dimension() {
            return Err(Error::DimensionMismatch {
                expected: steps.dimension(),
                found: bounds.dimension(),
            });
        }
        let materialized = steps.materialize(bounds)?;
        let mut grid = Grid::zeros(bounds);
        let offsets: Vec<(usize, StepVector)> =
            materialized.into_iter().map(|s| (grid.step_offset(s.entries()), s)).collect();
        let dims = grid.dims().to_vec();
        walk_box(&dims, |flat, idx| {
            if flat == 0 {
                grid.values[0] = BigUint::one();
                return;
            }
            let mut total = BigUint::zero();
            for (offset, step) in &offsets {
                if step.fits_within(idx) {
                    total += &grid.values[flat - offset];
                }
            }
            grid.values[flat] = total;
        });
        Ok(CountTable { grid })
    }

    pub fn bounds(&self) -> &LengthTuple {
        self.grid.bounds()
    }

    /// Count at a multi-index inside the box.
    pub fn get(&self, lengths: &[u32]) -> Option<&BigUint> {
        self.grid.get(lengths)
    }

    /// Count at the corner of the box.
    pub fn corner(&self) -> &BigUint {
        self.grid.get(self.grid.bounds().lengths()).expect("corner is in the box")
    }

    /// Diagonal values `a(l, ..., l)` for `l = 0..=max`, where `max` is the
    /// smallest box bound.
    pub fn diagonal(&self) -> Vec<BigUint> {
        let max = self.bounds().lengths().iter().copied().min().unwrap_or(0);
        let n = self.bounds().dimension();
        (0..=max).map(|l| self.get(&vec![l; n]).unwrap().clone()).collect()
    }
}

/// Number of alignments of the given lengths. Exact; fills a fresh table
/// sized to the query.
pub fn count(steps: &ValidatedStepSet, lengths: &LengthTuple) -> Result<BigUint> {
    Ok(CountTable::fill(steps, lengths)?.corner().clone())
}

/// Number of alignments with exactly `k` columns, via the same recurrence
/// layered by column count.
pub fn count_with_parts(steps: &ValidatedStepSet, lengths: &LengthTuple, k: u64) -> Result<BigUint> {
    let table = parts_table(steps, lengths, k)?;
    Ok(table.corner().clone())
}

/// Table of alignment counts with exactly `k` columns, over the box.
pub fn parts_table(steps: &ValidatedStepSet, bounds: &LengthTuple, k: u64) -> Result<CountTable> {
    if steps.dimension() != bounds.dimension() {
        return Err(Error::DimensionMismatch {
            expected: steps.dimension(),
            found: bounds.dimension(),
        });
    }
    let materialized = steps.materialize(bounds)?;
    let mut layer = Grid::zeros(bounds);
    layer.values[0] = BigUint::one();
    let offsets: Vec<(usize, StepVector)> =
        materialized.into_iter().map(|s| (layer.step_offset(s.entries()), s)).collect();
    let dims = layer.dims().to_vec();
    for _ in 0..k {
        let mut next = Grid::zeros(bounds);
        walk_box(&dims, |flat, idx| {
            let mut total = BigUint::zero();
            for (offset, step) in &offsets {
                if step.fits_within(idx) {
                    total += &layer.values[flat - offset];
                }
            }
            next.values[flat] = total;
        });
        layer = next;
    }
    Ok(CountTable { grid: layer })
}

/// Cache of filled tables keyed by `(step set, box)`. Lookup-or-compute is
/// guarded by a lock, so the cache can be shared across threads.
#[derive(Debug, Default)]
pub struct TableCache {
    map: Mutex<HashMap<(ValidatedStepSet, LengthTuple), Arc<CountTable>>>,
}

impl TableCache {
    pub fn new() -> Self {
        TableCache::default()
    }

    /// Returns the table for `(steps, bounds)`, filling it on first use.
    pub fn table(&self, steps: &ValidatedStepSet, bounds: &LengthTuple) -> Result<Arc<CountTable>> {
        let key = (steps.clone(), bounds.clone());
        if let Some(t) = self.map.lock().unwrap().get(&key) {
            return Ok(Arc::clone(t));
        }
        let filled = Arc::new(CountTable::fill(steps, bounds)?);
        let mut map = self.map.lock().unwrap();
        let entry = map.entry(key).or_insert_with(|| Arc::clone(&filled));
        Ok(Arc::clone(entry))
    }

    pub fn count(&self, steps: &ValidatedStepSet, lengths: &LengthTuple) -> Result<BigUint> {
        Ok(self.table(steps, lengths)?.corner().clone())
    }
}
