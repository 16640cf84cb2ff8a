//! Restricted integer compositions and product ("independence") step sets.
//!
//! `c(l; k)` counts ordered ways to write `l` as a sum of exactly `k` parts
//! drawn from a base set. For parts from all positive integers this is
//! `C(l-1, k-1)`; allowing zero parts gives `C(l+k-1, k-1)`. When the step
//! set is a cartesian product of base sets, alignments factor coordinatewise
//! into compositions sharing the part count `k`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numutil::binomial;
use crate::step::{BaseSet, LengthTuple, StepSet};

/// Number of compositions of `l` into exactly `k` parts from `base`.
pub fn compositions_with_parts(base: &BaseSet, l: u64, k: u64) -> BigUint {
    if l == 0 && k == 0 {
        return BigUint::one();
    }
    match base {
        BaseSet::NatPos => binomial(l as i64 - 1, k as i64 - 1),
        BaseSet::Nat => binomial(l as i64 + k as i64 - 1, k as i64 - 1),
        BaseSet::Finite(members) => {
            // DP over (remaining sum, parts used).
            let l = l as usize;
            let mut layer = vec![BigUint::zero(); l + 1];
            layer[0] = BigUint::one();
            for _ in 0..k {
                let mut next = vec![BigUint::zero(); l + 1];
                for total in 0..=l {
                    if layer[total].is_zero() {
                        continue;
                    }
                    for &p in members {
                        let p = p as usize;
                        if total + p <= l {
                            let add = layer[total].clone();
                            next[total + p] += add;
                        }
                    }
                }
                layer = next;
            }
            layer[l].clone()
        }
    }
}

/// Count for a product step set, computed coordinatewise:
/// `sum over k of product over i of c_{bases[i]}(l_i; k)`.
///
/// At least one base must exclude 0 so that the part count is bounded.
pub fn count_independent(bases: &[BaseSet], lengths: &LengthTuple) -> Result<BigUint> {
    if bases.len() != lengths.dimension() {
        return Err(Error::DimensionMismatch {
            expected: bases.len(),
            found: lengths.dimension(),
        });
    }
    let k_bound = bases
        .iter()
        .zip(lengths.lengths())
        .filter(|(b, _)| !b.contains_zero())
        .map(|(_, &l)| l as u64)
        .min()
        .ok_or(Error::UnboundedParts)?;
    let mut total = BigUint::zero();
    for k in 0..=k_bound {
        let mut term = BigUint::one();
        for (base, &l) in bases.iter().zip(lengths.lengths()) {
            term *= compositions_with_parts(base, l as u64, k);
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    Ok(total)
}

/// Number of matrices with `n_rows` rows, non-negative entries summing to
/// `n`, and no zero column: alignment counts for the all-non-zero-steps
/// family summed over all splits of `n` among the rows.
pub fn matrix_compositions(n_rows: usize, n: u32) -> Result<BigUint> {
    let steps = StepSet::AllPositiveWeak { dimension: n_rows }.validate()?;
    let bounds = LengthTuple::new(vec![n; n_rows]);
    let table = super::table::CountTable::fill(&steps, &bounds)?;
    let mut total = BigUint::zero();
    let mut split = vec![0u32; n_rows];
    sum_over_simplex(&table, n, 0, &mut split, &mut total);
    Ok(total)
}

fn sum_over_simplex(
    table: &super::table::CountTable,
    remaining: u32,
    coord: usize,
    split: &mut Vec<u32>,
    total: &mut BigUint,
) {
    if coord + 1 == split.len() {
        split[coord] = remaining;
        *total += table.get(split).expect("inside the box");
        return;
    }
    for v in 0..=remaining {
        split[coord] = v;
        sum_over_simplex(table, remaining - v, coord + 1, split, total);
    }
}

#[cfg(test)]
mod tests {
    use super::super::table::count;
    use super::*;

    fn product_count_matches(bases: &[BaseSet], lengths: &LengthTuple) -> Result<bool> {
        let direct = count_independent(bases, lengths)?;
        let via_table = count(&StepSet::Product { bases: bases.to_vec() }.validate()?, lengths)?;
        Ok(direct == via_table)
    }

    #[test]
    fn natpos_closed_form() {
        assert_eq!(compositions_with_parts(&BaseSet::NatPos, 4, 2), BigUint::from(3u32));
        assert_eq!(compositions_with_parts(&BaseSet::NatPos, 0, 0), BigUint::one());
        assert_eq!(compositions_with_parts(&BaseSet::NatPos, 0, 2), BigUint::zero());
        assert_eq!(compositions_with_parts(&BaseSet::NatPos, 3, 5), BigUint::zero());
    }

    #[test]
    fn nat_closed_form() {
        // Weak compositions of 2 into 3 parts: C(4, 2) = 6.
        assert_eq!(compositions_with_parts(&BaseSet::Nat, 2, 3), BigUint::from(6u32));
        assert_eq!(compositions_with_parts(&BaseSet::Nat, 0, 4), BigUint::one());
        assert_eq!(compositions_with_parts(&BaseSet::Nat, 3, 0), BigUint::zero());
    }

    #[test]
    fn finite_base_dp() {
        // 5 = 1+2+2 = 2+1+2 = 2+2+1.
        let base = BaseSet::finite(vec![1, 2]);
        assert_eq!(compositions_with_parts(&base, 5, 3), BigUint::from(3u32));
        assert_eq!(compositions_with_parts(&base, 0, 0), BigUint::one());
        assert_eq!(compositions_with_parts(&base, 7, 2), BigUint::zero());
    }

    #[test]
    fn independence_matches_table() {
        let bases = vec![BaseSet::finite(vec![1, 2]), BaseSet::finite(vec![1, 2])];
        let l = LengthTuple::new(vec![4, 5]);
        assert!(product_count_matches(&bases, &l).unwrap());
        let halfopen = vec![BaseSet::NatPos, BaseSet::Nat];
        assert!(product_count_matches(&halfopen, &LengthTuple::new(vec![2, 2])).unwrap());
        assert_eq!(
            count_independent(&halfopen, &LengthTuple::new(vec![0, 0])).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn unbounded_parts_rejected() {
        let bases = vec![BaseSet::Nat, BaseSet::Nat];
        let err = count_independent(&bases, &LengthTuple::new(vec![1, 1])).unwrap_err();
        assert_eq!(err, Error::UnboundedParts);
    }

    #[test]
    fn matrix_compositions_single_row_doubles() {
        for n in 1..=8u32 {
            assert_eq!(
                matrix_compositions(1, n).unwrap(),
                crate::numutil::pow2(n as u64 - 1),
                "row case at n = {}",
                n
            );
        }
        assert_eq!(matrix_compositions(3, 0).unwrap(), BigUint::one());
    }

    #[test]
    fn matrix_compositions_two_rows_of_two() {
        // Brute force: k=1 columns (2,0),(1,1),(0,2); k=2 ordered pairs of
        // the two unit columns: 4. Total 7.
        assert_eq!(matrix_compositions(2, 2).unwrap(), BigUint::from(7u32));
    }
}
