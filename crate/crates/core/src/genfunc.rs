//! Truncated multivariate power series for alignment counts.
//!
//! The counts have the generating function `1 / (1 - P(z))` where `P` is the
//! sum of the monomials `z^s` over the steps `s`, and the counts at exactly
//! `k` columns have `P(z)^k`. Both are expanded here by truncated polynomial
//! arithmetic over a box: `1/(1 - P)` as the geometric accumulation
//! `f <- 1 + P * f`, and `P^k` by repeated multiplication. Every monomial
//! exceeding the box in any coordinate is dropped immediately, and all
//! coefficients stay exact big integers. This gives a check on the counting
//! table that does not share its code path.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::grid::{walk_box, Grid};
use crate::step::{LengthTuple, StepVector, ValidatedStepSet};

/// Coefficient table of a truncated power series over a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesBox {
    grid: Grid,
}

impl SeriesBox {
    pub fn bounds(&self) -> &LengthTuple {
        self.grid.bounds()
    }

    /// Coefficient at a multi-index inside the box.
    pub fn coefficient(&self, idx: &[u32]) -> Option<&BigUint> {
        self.grid.get(idx)
    }

    /// Visits every `(multi-index, coefficient)` pair in lexicographic order.
    pub fn for_each(&self, mut f: impl FnMut(&[u32], &BigUint)) {
        let dims = self.grid.dims().to_vec();
        walk_box(&dims, |flat, idx| f(idx, &self.grid.values[flat]));
    }
}

/// Expands `1 / (1 - P(z))` over the box. The coefficient at every
/// multi-index `m <= box` is the number of alignments of lengths `m`.
pub fn series_coefficients(steps: &ValidatedStepSet, bounds: &LengthTuple) -> Result<SeriesBox> {
    let (offsets, dims) = monomials(steps, bounds)?;
    // Every step raises the total degree, so the expansion stabilizes after
    // `sum(bounds)` rounds of f <- 1 + P * f.
    let rounds = bounds.total();
    let mut f = Grid::zeros(bounds);
    f.values[0] = BigUint::one();
    for _ in 0..rounds {
        let mut next = Grid::zeros(bounds);
        multiply_accumulate(&offsets, &dims, &f, &mut next);
        next.values[0] += BigUint::one();
        f = next;
    }
    Ok(SeriesBox { grid: f })
}

/// Expands `P(z)^k` over the box. The coefficient at `m` is the number of
/// alignments of lengths `m` with exactly `k` columns.
pub fn fixed_k_coefficients(
    steps: &ValidatedStepSet,
    bounds: &LengthTuple,
    k: u64,
) -> Result<SeriesBox> {
    let (offsets, dims) = monomials(steps, bounds)?;
    let mut power = Grid::zeros(bounds);
    power.values[0] = BigUint::one();
    for _ in 0..k {
        let mut next = Grid::zeros(bounds);
        multiply_accumulate(&offsets, &dims, &power, &mut next);
        power = next;
    }
    Ok(SeriesBox { grid: power })
}

/// Sparse monomials of `P` as (flat offset, step) pairs, plus the grid shape.
type Monomials = (Vec<(usize, StepVector)>, Vec<usize>);

fn monomials(steps: &ValidatedStepSet, bounds: &LengthTuple) -> Result<Monomials> {
    if steps.dimension() != bounds.dimension() {
        return Err(Error::DimensionMismatch {
            expected: steps.dimension(),
            found: bounds.dimension(),
        });
    }
    let grid = Grid::zeros(bounds);
    let offsets = steps
        .materialize(bounds)?
        .into_iter()
        .map(|s| (grid.step_offset(s.entries()), s))
        .collect();
    Ok((offsets, grid.dims().to_vec()))
}

/// `out += P * f`, truncated to the box: for each monomial `z^s` of `P`,
/// shift `f` by `s` and accumulate.
fn multiply_accumulate(
    offsets: &[(usize, StepVector)],
    dims: &[usize],
    f: &Grid,
    out: &mut Grid,
) {
    walk_box(dims, |flat, idx| {
        for (offset, step) in offsets {
            if step.fits_within(idx) {
                out.values[flat] += &f.values[flat - offset];
            }
        }
    });
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::dsl::parse_step_set;
    use crate::engine::{count, count_with_parts};

    fn set(expr: &str) -> ValidatedStepSet {
        parse_step_set(expr).unwrap().validate().unwrap()
    }

    #[test]
    fn constant_term_is_one() {
        let s = set("natpos(2)");
        let series = series_coefficients(&s, &LengthTuple::new(vec![3, 3])).unwrap();
        assert_eq!(*series.coefficient(&[0, 0]).unwrap(), BigUint::one());
    }

    #[test]
    fn central_pairwise_coefficient() {
        let s = set("unit(2)");
        let series = series_coefficients(&s, &LengthTuple::new(vec![2, 2])).unwrap();
        assert_eq!(*series.coefficient(&[2, 2]).unwrap(), BigUint::from(13u32));
    }

    #[test]
    fn agrees_with_table_on_the_whole_box() {
        for expr in ["unit(2)", "{(1,1),(1,2),(2,1)}", "halfopen2", "natpos(2)"] {
            let s = set(expr);
            let bounds = LengthTuple::new(vec![5, 5]);
            let series = series_coefficients(&s, &bounds).unwrap();
            series.for_each(|idx, coeff| {
                let direct = count(&s, &LengthTuple::new(idx.to_vec())).unwrap();
                assert_eq!(*coeff, direct, "{} at {:?}", expr, idx);
            });
        }
    }

    #[test]
    fn fixed_k_zero_is_the_empty_product() {
        let s = set("unit(2)");
        let series = fixed_k_coefficients(&s, &LengthTuple::new(vec![2, 2]), 0).unwrap();
        assert_eq!(*series.coefficient(&[0, 0]).unwrap(), BigUint::one());
        let mut nonzero = 0;
        series.for_each(|_, c| {
            if !c.is_zero() {
                nonzero += 1;
            }
        });
        assert_eq!(nonzero, 1);
    }

    #[test]
    fn fixed_k_matches_parts_counts() {
        let s = set("{(1,1),(1,2),(2,1)}");
        let bounds = LengthTuple::new(vec![4, 5]);
        let k3 = fixed_k_coefficients(&s, &bounds, 3).unwrap();
        assert_eq!(*k3.coefficient(&[4, 5]).unwrap(), BigUint::from(3u32));
        let s2 = set("unit(2)");
        let b2 = LengthTuple::new(vec![2, 2]);
        let k2 = fixed_k_coefficients(&s2, &b2, 2).unwrap();
        assert_eq!(*k2.coefficient(&[1, 1]).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn layers_sum_to_the_series() {
        let s = set("unit(2)");
        let bounds = LengthTuple::new(vec![4, 4]);
        let series = series_coefficients(&s, &bounds).unwrap();
        let mut sums = vec![BigUint::zero(); 25];
        for k in 0..=bounds.total() {
            let layer = fixed_k_coefficients(&s, &bounds, k).unwrap();
            let mut i = 0;
            layer.for_each(|_, c| {
                sums[i] += c;
                i += 1;
            });
        }
        let mut i = 0;
        series.for_each(|idx, c| {
            assert_eq!(sums[i], *c, "at {:?}", idx);
            i += 1;
        });
        // Spot-check against the layered table count as well.
        assert_eq!(
            *fixed_k_coefficients(&s, &bounds, 3).unwrap().coefficient(&[2, 2]).unwrap(),
            count_with_parts(&s, &LengthTuple::new(vec![2, 2]), 3).unwrap()
        );
    }
}
