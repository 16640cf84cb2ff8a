//! Dense storage for values indexed by multi-indices inside a box
//! `0..=b1 x ... x 0..=bN`, shared by the counting table and the truncated
//! power series.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::step::LengthTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Grid {
    bounds: LengthTuple,
    dims: Vec<usize>,
    strides: Vec<usize>,
    pub(crate) values: Vec<BigUint>,
}

impl Grid {
    pub fn zeros(bounds: &LengthTuple) -> Self {
        let dims: Vec<usize> = bounds.lengths().iter().map(|&l| l as usize + 1).collect();
        let mut strides = vec![0usize; dims.len()];
        let mut acc = 1usize;
        for i in (0..dims.len()).rev() {
            strides[i] = acc;
            acc *= dims[i];
        }
        Grid { bounds: bounds.clone(), dims, strides, values: vec![BigUint::zero(); acc] }
    }

    pub fn bounds(&self) -> &LengthTuple {
        &self.bounds
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn flat_index(&self, idx: &[u32]) -> Option<usize> {
        if idx.len() != self.dims.len() {
            return None;
        }
        let mut flat = 0usize;
        for (i, &v) in idx.iter().enumerate() {
            if v as usize >= self.dims[i] {
                return None;
            }
            flat += v as usize * self.strides[i];
        }
        Some(flat)
    }

    pub fn get(&self, idx: &[u32]) -> Option<&BigUint> {
        self.flat_index(idx).map(|f| &self.values[f])
    }

    /// Flat offset of a step vector: the distance between `m` and `m - s`
    /// whenever the subtraction stays componentwise non-negative.
    pub fn step_offset(&self, step: &[u32]) -> usize {
        step.iter().zip(&self.strides).map(|(&s, &st)| s as usize * st).sum()
    }
}

/// Visits every multi-index of the box `0..dims[0] x ... x 0..dims[N-1]` in
/// lexicographic order, passing the flat index and the multi-index. The flat
/// order matches [`Grid`] storage, so `m - s` always precedes `m`.
pub(crate) fn walk_box(dims: &[usize], mut f: impl FnMut(usize, &[u32])) {
    let volume: usize = dims.iter().product();
    let mut current = vec![0u32; dims.len()];
    for flat in 0..volume {
        f(flat, &current);
        for i in (0..dims.len()).rev() {
            current[i] += 1;
            if (current[i] as usize) < dims[i] {
                break;
            }
            current[i] = 0;
        }
    }
}
