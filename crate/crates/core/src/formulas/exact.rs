//! Exact closed forms for the catalogued cases. All sums use the vanishing
//! binomial convention, so stated ranges may safely overshoot.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numutil::{binomial, factorial, fibonacci, pow2};
use crate::step::LengthTuple;

use super::FormulaId;

/// Closed forms for single-sequence (composition) counts. At `l = 0` every
/// evaluator returns 1, the empty composition, even where the literal
/// Fibonacci form would not.
pub fn comp_closed(id: FormulaId, l: u64) -> Result<BigUint> {
    if l == 0 {
        return Ok(BigUint::one());
    }
    match id {
        FormulaId::CompAll => Ok(pow2(l - 1)),
        FormulaId::Comp12 => Ok(fibonacci(l + 1)),
        FormulaId::CompGe2 => Ok(fibonacci(l - 1)),
        FormulaId::CompOdd => Ok(fibonacci(l)),
        other => Err(Error::UnknownFormula(format!("{} is not a composition closed form", other))),
    }
}

/// The two exact forms for pairwise counts with skips and matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DelannoyVariant {
    /// `sum over d of 2^d C(l1, d) C(l2, d)`
    Powers,
    /// `sum over d of (l1 + l2 - d)! / (d! (l1 - d)! (l2 - d)!)`
    Trinomial,
}

pub fn delannoy_exact(l1: u64, l2: u64, variant: DelannoyVariant) -> BigUint {
    let mut total = BigUint::zero();
    for d in 0..=l1.min(l2) {
        match variant {
            DelannoyVariant::Powers => {
                total += pow2(d) * binomial_u(l1, d) * binomial_u(l2, d);
            }
            DelannoyVariant::Trinomial => {
                total += factorial(l1 + l2 - d) / (factorial(d) * factorial(l1 - d) * factorial(l2 - d));
            }
        }
    }
    total
}

fn binomial_u(n: u64, k: u64) -> BigUint {
    crate::numutil::binomial_u(n, k)
}

/// Count for `S = {(1,1),(1,2),(2,1)}`:
/// `sum over k of C(k, 2k - l1) C(2k - l1, l2 - k)`.
pub fn star(l1: u64, l2: u64) -> BigUint {
    let (l1, l2) = (l1 as i64, l2 as i64);
    let mut total = BigUint::zero();
    for k in 0..=l1 {
        total += binomial(k, 2 * k - l1) * binomial(2 * k - l1, l2 - k);
    }
    total
}

/// Same count by inclusion/exclusion over columns forced to contain a 2:
/// `sum over k from ceil(max/2) to min, sum over j of
/// (-1)^j C(k, j) C(k - j, l1 - k - j) C(k - j, l2 - k - j)`.
pub fn starstar(l1: u64, l2: u64) -> BigUint {
    let (l1, l2) = (l1 as i64, l2 as i64);
    let lo = (l1.max(l2) + 1) / 2;
    let hi = l1.min(l2);
    let mut total = BigInt::zero();
    for k in lo..=hi {
        for j in 0..=k {
            let term = BigInt::from(binomial(k, j))
                * BigInt::from(binomial(k - j, l1 - k - j))
                * BigInt::from(binomial(k - j, l2 - k - j));
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total.to_biguint().expect("inclusion/exclusion yields a non-negative count")
}

/// Count for `S = {1,2} x {1,2}`: compositions of each length into a common
/// number of parts from {1,2}, `sum over k of C(k, l1 - k) C(k, l2 - k)`.
pub fn whitney_exact(l1: u64, l2: u64) -> BigUint {
    let (l1, l2) = (l1 as i64, l2 as i64);
    let mut total = BigUint::zero();
    for k in 0..=l1.min(l2) {
        total += binomial(k, l1 - k) * binomial(k, l2 - k);
    }
    total
}

/// Count for `S = {(x,y) | x >= 1, y >= 0}`:
/// `sum over k of C(l1 - 1, k - 1) C(l2 + k - 1, k - 1)`.
pub fn halfopen_exact(l1: u64, l2: u64) -> BigUint {
    if l1 == 0 && l2 == 0 {
        return BigUint::one();
    }
    let (l1, l2) = (l1 as i64, l2 as i64);
    let mut total = BigUint::zero();
    for k in 1..=l1 {
        total += binomial(l1 - 1, k - 1) * binomial(l2 + k - 1, k - 1);
    }
    total
}

/// Count for `S = {1,2,3} x {1,2,3}` as a product of composition counts
/// with a common number of parts.
pub fn box13_exact(l1: u64, l2: u64) -> BigUint {
    if l1 == 0 && l2 == 0 {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    for k in 1..=l1.min(l2) {
        total += comp123(l1, k) * comp123(l2, k);
    }
    total
}

/// Compositions of `l` into `k` parts from {1,2,3}:
/// `sum over i of C(k, i) C(k - i, l - k - 2i)`.
fn comp123(l: u64, k: u64) -> BigUint {
    let (l, k) = (l as i64, k as i64);
    let mut total = BigUint::zero();
    for i in 0..=k {
        total += binomial(k, i) * binomial(k - i, l - k - 2 * i);
    }
    total
}

/// Classical alignment count by inclusion/exclusion:
/// `sum over k from max(l) to sum(l), sum over j of
/// (-1)^j C(k, j) product over i of C(k - j, l_i)`.
pub fn slowinski(lengths: &LengthTuple) -> BigUint {
    let l = lengths.lengths();
    let k_lo = l.iter().copied().max().unwrap_or(0) as i64;
    let k_hi = lengths.total() as i64;
    let mut total = BigInt::zero();
    for k in k_lo..=k_hi {
        for j in 0..=k {
            let mut product = BigInt::from(binomial(k, j));
            if product.is_zero() {
                continue;
            }
            for &li in l {
                product *= BigInt::from(binomial(k - j, li as i64));
                if product.is_zero() {
                    break;
                }
            }
            if j % 2 == 0 {
                total += product;
            } else {
                total -= product;
            }
        }
    }
    total.to_biguint().expect("inclusion/exclusion yields a non-negative count")
}

/// Count when every non-zero step of naturals is allowed:
/// `sum over k up to sum(l), sum over i of
/// (-1)^i C(k, i) product over j of C(l_j + k - i - 1, l_j)`.
pub fn andrews(lengths: &LengthTuple) -> BigUint {
    if lengths.is_zero() {
        return BigUint::one();
    }
    let l = lengths.lengths();
    let k_hi = lengths.total() as i64;
    let mut total = BigInt::zero();
    for k in 0..=k_hi {
        for i in 0..=k {
            let mut product = BigInt::from(binomial(k, i));
            if product.is_zero() {
                continue;
            }
            for &lj in l {
                product *= BigInt::from(binomial(lj as i64 + k - i - 1, lj as i64));
                if product.is_zero() {
                    break;
                }
            }
            if i % 2 == 0 {
                total += product;
            } else {
                total -= product;
            }
        }
    }
    total.to_biguint().expect("inclusion/exclusion yields a non-negative count")
}

/// Count for `S = {1,2}^N`: `sum over k of product over i of C(k, l_i - k)`.
pub fn box12_exact(lengths: &LengthTuple) -> BigUint {
    let l = lengths.lengths();
    if lengths.is_zero() {
        return BigUint::one();
    }
    let min = l.iter().copied().min().unwrap() as i64;
    let mut total = BigUint::zero();
    for k in 0..=min {
        let mut product = BigUint::one();
        for &li in l {
            product *= binomial(k, li as i64 - k);
            if product.is_zero() {
                break;
            }
        }
        total += product;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(l: &[u32]) -> LengthTuple {
        LengthTuple::new(l.to_vec())
    }

    #[test]
    fn composition_closed_forms() {
        assert_eq!(comp_closed(FormulaId::CompAll, 5).unwrap(), BigUint::from(16u32));
        assert_eq!(comp_closed(FormulaId::Comp12, 5).unwrap(), BigUint::from(8u32));
        assert_eq!(comp_closed(FormulaId::CompGe2, 2).unwrap(), BigUint::one());
        assert_eq!(comp_closed(FormulaId::CompGe2, 1).unwrap(), BigUint::zero());
        assert_eq!(comp_closed(FormulaId::CompOdd, 4).unwrap(), BigUint::from(3u32));
        for id in [FormulaId::CompAll, FormulaId::Comp12, FormulaId::CompGe2, FormulaId::CompOdd] {
            assert_eq!(comp_closed(id, 0).unwrap(), BigUint::one());
        }
        assert!(comp_closed(FormulaId::Star, 3).is_err());
    }

    #[test]
    fn delannoy_variants_agree() {
        for l1 in 0..=30u64 {
            for l2 in 0..=30u64 {
                assert_eq!(
                    delannoy_exact(l1, l2, DelannoyVariant::Powers),
                    delannoy_exact(l1, l2, DelannoyVariant::Trinomial),
                    "at ({}, {})",
                    l1,
                    l2
                );
            }
        }
        assert_eq!(delannoy_exact(0, 0, DelannoyVariant::Powers), BigUint::one());
        assert_eq!(delannoy_exact(2, 2, DelannoyVariant::Powers), BigUint::from(13u32));
        assert_eq!(delannoy_exact(3, 3, DelannoyVariant::Trinomial), BigUint::from(63u32));
    }

    #[test]
    fn star_values() {
        assert_eq!(star(4, 5), BigUint::from(7u32));
        assert_eq!(star(5, 4), BigUint::from(7u32));
        assert_eq!(star(0, 0), BigUint::one());
        assert_eq!(star(1, 0), BigUint::zero());
        assert_eq!(star(2, 2), BigUint::one());
    }

    #[test]
    fn star_and_starstar_agree() {
        for l1 in 0..=30u64 {
            for l2 in 0..=30u64 {
                assert_eq!(star(l1, l2), starstar(l1, l2), "at ({}, {})", l1, l2);
            }
        }
        assert_eq!(starstar(4, 5), BigUint::from(7u32));
        assert_eq!(starstar(0, 0), BigUint::one());
    }

    #[test]
    fn whitney_small_values() {
        assert_eq!(whitney_exact(0, 0), BigUint::one());
        assert_eq!(whitney_exact(1, 1), BigUint::one());
        assert_eq!(whitney_exact(2, 2), BigUint::from(2u32));
        // Off-diagonal: three (1,2)-compositions of 4 and of 5 share k = 3,
        // the all-ones row of 4 pairs with four rows of 5 at k = 4.
        assert_eq!(whitney_exact(4, 5), BigUint::from(13u32));
        assert_eq!(whitney_exact(10, 10), BigUint::from(2317u32));
    }

    #[test]
    fn halfopen_values() {
        assert_eq!(halfopen_exact(0, 0), BigUint::one());
        assert_eq!(halfopen_exact(1, 0), BigUint::one());
        assert_eq!(halfopen_exact(0, 3), BigUint::zero());
        assert_eq!(halfopen_exact(2, 2), BigUint::from(4u32));
    }

    #[test]
    fn box13_values() {
        assert_eq!(box13_exact(0, 0), BigUint::one());
        assert_eq!(box13_exact(1, 1), BigUint::one());
        assert_eq!(box13_exact(3, 3), BigUint::from(6u32));
    }

    #[test]
    fn slowinski_values() {
        assert_eq!(slowinski(&tuple(&[1, 2, 3])), BigUint::from(239u32));
        assert_eq!(slowinski(&tuple(&[1, 1, 1])), BigUint::from(13u32));
        assert_eq!(slowinski(&tuple(&[1, 1])), BigUint::from(3u32));
        assert_eq!(slowinski(&tuple(&[0, 0, 0])), BigUint::one());
        assert_eq!(
            slowinski(&tuple(&[10, 10, 10])),
            BigUint::from(9850349744182729u64)
        );
    }

    #[test]
    fn andrews_values() {
        assert_eq!(andrews(&tuple(&[3])), BigUint::from(4u32));
        assert_eq!(andrews(&tuple(&[0, 0])), BigUint::one());
        assert_eq!(andrews(&tuple(&[0, 2])), BigUint::from(2u32));
        // 2^{l-1} for one sequence.
        for l in 1..=10u32 {
            assert_eq!(andrews(&tuple(&[l])), pow2(l as u64 - 1));
        }
    }

    #[test]
    fn box12_values() {
        assert_eq!(box12_exact(&tuple(&[0, 0, 0])), BigUint::one());
        assert_eq!(box12_exact(&tuple(&[10, 10, 10])), BigUint::from(68933u32));
        assert_eq!(box12_exact(&tuple(&[4, 5])), whitney_exact(4, 5));
    }
}
