//! Counting by multiplicities of column types.
//!
//! Grouping equal columns turns the count into a sum of multinomial
//! coefficients `C(k; r_1, ..., r_t)` over all multiplicity vectors
//! `(r_1, ..., r_t)` with `sum r_i = k` and `sum s_i * r_i = (l_1, ..., lN)`.
//! Every step has column sum at least 1, so `k` is bounded by `l_1 + ... + lN`
//! and the outer sum is finite.
//!
//! The search walks multiplicity vectors depth-first with pruning on partial
//! sums, building each multinomial incrementally as a product of binomials
//! (no factorials). Steps are visited in decreasing column-sum order so that
//! everything too large for the residual is skipped in one binary-search
//! jump. Arithmetic runs in checked `u128` while it fits (it does for all
//! boxes of interest) and falls back to big integers on overflow.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numutil::PascalTable;
use crate::step::{LengthTuple, StepVector, ValidatedStepSet};

/// Number of alignments, evaluated as the multinomial sum over multiplicity
/// vectors. Agrees with the table-based count; kept independent of it as a
/// cross-check.
pub fn count_multinomial(steps: &ValidatedStepSet, lengths: &LengthTuple) -> Result<BigUint> {
    if steps.dimension() != lengths.dimension() {
        return Err(Error::DimensionMismatch {
            expected: steps.dimension(),
            found: lengths.dimension(),
        });
    }
    let mut order = steps.materialize(lengths)?;
    order.sort_by(|a, b| b.column_sum().cmp(&a.column_sum()).then_with(|| b.cmp(a)));
    let column_sums: Vec<u64> = order.iter().map(|s| s.column_sum()).collect();
    let coverage = suffix_coverage(&order);
    let max_parts = lengths.total() as usize;

    // C(33-ish, k) and all partial multinomials fit u128; larger boxes go
    // straight to big integers.
    if max_parts <= 33 {
        if let Some(total) = fast_search(&order, &column_sums, &coverage, lengths, max_parts) {
            return Ok(total);
        }
    }
    Ok(big_search(&order, &column_sums, &coverage, lengths, max_parts))
}

fn suffix_coverage(steps: &[StepVector]) -> Vec<u64> {
    let mut coverage = vec![0u64; steps.len() + 1];
    for i in (0..steps.len()).rev() {
        let mut mask = coverage[i + 1];
        for (c, &e) in steps[i].entries().iter().enumerate() {
            if e > 0 {
                mask |= 1u64 << c;
            }
        }
        coverage[i] = mask;
    }
    coverage
}

fn residual_covered(residual: &[u32], mask: u64) -> bool {
    residual.iter().enumerate().all(|(c, &r)| r == 0 || mask & (1u64 << c) != 0)
}

struct FastSearch<'a> {
    steps: &'a [StepVector],
    column_sums: &'a [u64],
    coverage: &'a [u64],
    pascal: Vec<Vec<u128>>,
    residual: Vec<u32>,
    total: u128,
}

/// Checked `u128` pass; `None` on any overflow.
fn fast_search(
    steps: &[StepVector],
    column_sums: &[u64],
    coverage: &[u64],
    lengths: &LengthTuple,
    max_parts: usize,
) -> Option<BigUint> {
    use num_traits::ToPrimitive;
    let pascal_big = PascalTable::with_rows(max_parts);
    let mut pascal = Vec::with_capacity(max_parts + 1);
    for n in 0..=max_parts {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            row.push(pascal_big.at(n, k).to_u128()?);
        }
        pascal.push(row);
    }
    let sigma = lengths.total();
    let mut search = FastSearch {
        steps,
        column_sums,
        coverage,
        pascal,
        residual: lengths.lengths().to_vec(),
        total: 0,
    };
    search.descend(0, 0, 1, sigma).ok()?;
    Some(BigUint::from(search.total))
}

impl FastSearch<'_> {
    fn descend(&mut self, index: usize, parts: usize, coeff: u128, sigma: u64) -> std::result::Result<(), ()> {
        if sigma == 0 {
            self.total = self.total.checked_add(coeff).ok_or(())?;
            return Ok(());
        }
        // Steps ahead are sorted by decreasing column sum; jump past those
        // that cannot fit any residual of total sigma.
        let jump = self.column_sums[index..].partition_point(|&s| s > sigma);
        let start = index + jump;
        if !residual_covered(&self.residual, self.coverage[start]) {
            return Ok(());
        }
        for j in start..self.steps.len() {
            let step = &self.steps[j];
            if !step.fits_within(&self.residual) {
                continue;
            }
            let weight = self.column_sums[j];
            let mut multiplicity = 0usize;
            loop {
                for (r, &s) in self.residual.iter_mut().zip(step.entries()) {
                    *r -= s;
                }
                multiplicity += 1;
                let with_more = coeff
                    .checked_mul(self.pascal[parts + multiplicity][multiplicity])
                    .ok_or(())?;
                self.descend(
                    j + 1,
                    parts + multiplicity,
                    with_more,
                    sigma - weight * multiplicity as u64,
                )?;
                if !step.fits_within(&self.residual) {
                    break;
                }
            }
            for (r, &s) in self.residual.iter_mut().zip(step.entries()) {
                *r += s * multiplicity as u32;
            }
        }
        Ok(())
    }
}

struct BigSearch<'a> {
    steps: &'a [StepVector],
    column_sums: &'a [u64],
    coverage: &'a [u64],
    pascal: PascalTable,
    residual: Vec<u32>,
    total: BigUint,
}

fn big_search(
    steps: &[StepVector],
    column_sums: &[u64],
    coverage: &[u64],
    lengths: &LengthTuple,
    max_parts: usize,
) -> BigUint {
    let mut search = BigSearch {
        steps,
        column_sums,
        coverage,
        pascal: PascalTable::with_rows(max_parts),
        residual: lengths.lengths().to_vec(),
        total: BigUint::zero(),
    };
    search.descend(0, 0, BigUint::from(1u32), lengths.total());
    search.total
}

impl BigSearch<'_> {
    fn descend(&mut self, index: usize, parts: usize, coeff: BigUint, sigma: u64) {
        if sigma == 0 {
            self.total += coeff;
            return;
        }
        let jump = self.column_sums[index..].partition_point(|&s| s > sigma);
        let start = index + jump;
        if !residual_covered(&self.residual, self.coverage[start]) {
            return;
        }
        for j in start..self.steps.len() {
            let step = &self.steps[j];
            if !step.fits_within(&self.residual) {
                continue;
            }
            let weight = self.column_sums[j];
            let mut multiplicity = 0usize;
            loop {
                for (r, &s) in self.residual.iter_mut().zip(step.entries()) {
                    *r -= s;
                }
                multiplicity += 1;
                let with_more = &coeff * self.pascal.at(parts + multiplicity, multiplicity);
                self.descend(j + 1, parts + multiplicity, with_more, sigma - weight * multiplicity as u64);
                if !step.fits_within(&self.residual) {
                    break;
                }
            }
            for (r, &s) in self.residual.iter_mut().zip(step.entries()) {
                *r += s * multiplicity as u32;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_step_set;
    use crate::engine::table::count;

    fn set(expr: &str) -> ValidatedStepSet {
        parse_step_set(expr).unwrap().validate().unwrap()
    }

    #[test]
    fn example_set_totals_seven() {
        let s = set("{(1,1),(1,2),(2,1)}");
        let l = LengthTuple::new(vec![4, 5]);
        assert_eq!(count_multinomial(&s, &l).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn zero_tuple_has_only_the_empty_multiplicity_vector() {
        let s = set("natpos(3)");
        let l = LengthTuple::new(vec![0, 0, 0]);
        assert_eq!(count_multinomial(&s, &l).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn central_pairwise_value() {
        let s = set("unit(2)");
        let l = LengthTuple::new(vec![2, 2]);
        assert_eq!(count_multinomial(&s, &l).unwrap(), BigUint::from(13u32));
    }

    #[test]
    fn agrees_with_table_on_infinite_family() {
        let s = set("natpos(2)");
        for l1 in 0..=5u32 {
            for l2 in 0..=5u32 {
                let l = LengthTuple::new(vec![l1, l2]);
                assert_eq!(
                    count_multinomial(&s, &l).unwrap(),
                    count(&s, &l).unwrap(),
                    "mismatch at ({}, {})",
                    l1,
                    l2
                );
            }
        }
    }

    #[test]
    fn big_path_agrees_with_fast_path() {
        // Force the big path by exceeding the u128 cutoff.
        let s = set("{(1)}");
        let l = LengthTuple::new(vec![40]);
        assert_eq!(count_multinomial(&s, &l).unwrap(), BigUint::from(1u32));
        let s2 = set("{(1),(2)}");
        let l2 = LengthTuple::new(vec![40]);
        assert_eq!(count_multinomial(&s2, &l2).unwrap(), crate::numutil::fibonacci(41));
    }
}
