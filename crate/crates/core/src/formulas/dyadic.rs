//! Infinite binomial sums with power-of-two weights, evaluated with exact
//! rational partial sums.
//!
//! Both sums here converge to integers: the classical alignment count
//! `sum over mu of C(mu, l1) ... C(mu, lN) / 2^(mu+1)`, and its diagonal
//! companion `sum over mu of C(mu, l)^N 2^(l - mu - 2)` for the family of
//! all non-zero steps. The term ratio
//! `t(mu+1)/t(mu) = (1/2) * product of (mu+1)/(mu+1-l_i)` decreases toward
//! 1/2, so once it drops below 3/4 the tail is dominated by a geometric
//! series and is at most three times the current term. Accumulation stops
//! when that bound is below 1e-9, far inside the 1e-6 rounding budget, and
//! the partial sum is rounded to the nearest integer.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numutil::binomial_u;
use crate::step::LengthTuple;

const TAIL_BOUND: f64 = 1e-9;

/// Classical alignment count as a dyadic sum; equals the count for the
/// columns `{0,1}^N - {0}`.
pub fn dyadic_sum(lengths: &LengthTuple) -> BigUint {
    dyadic_sum_with_residual(lengths).0
}

/// Same, also reporting the distance between the partial sum and the
/// returned integer.
pub fn dyadic_sum_with_residual(lengths: &LengthTuple) -> (BigUint, f64) {
    // t(mu) = prod_i C(mu, l_i) / 2^(mu+1)
    accumulate(lengths.lengths(), 0)
}

/// Diagonal count for all non-zero steps of naturals:
/// `sum over mu of C(mu, l)^N 2^(l - mu - 2)`, which equals
/// `2^(l-1)` times the classical diagonal count.
pub fn duchi_diag(l: u64, dimension: usize) -> Result<BigUint> {
    duchi_diag_with_residual(l, dimension).map(|(v, _)| v)
}

pub fn duchi_diag_with_residual(l: u64, dimension: usize) -> Result<(BigUint, f64)> {
    if l == 0 {
        return Err(Error::DomainError("duchi_diag is stated for l >= 1".into()));
    }
    if dimension == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    // t(mu) = C(mu, l)^N * 2^(l - mu - 2) = C(mu, l)^N * 2^((l-1) - mu - 1)
    let lengths = vec![l as u32; dimension];
    Ok(accumulate(&lengths, l as i64 - 1))
}

/// Evaluates `sum over mu of prod_i C(mu, l_i) * 2^(shift - mu - 1)`
/// exactly, stopping on the geometric tail bound, and rounds to the nearest
/// integer.
fn accumulate(lengths: &[u32], shift: i64) -> (BigUint, f64) {
    let start = lengths.iter().copied().max().unwrap_or(0) as u64;
    let mut sum = BigRational::zero();
    let mut mu = start;
    loop {
        let term = term_at(lengths, shift, mu);
        sum += &term;
        // Ratio of the next term to this one; decreasing in mu.
        let ratio = 0.5
            * lengths
                .iter()
                .map(|&l| (mu + 1) as f64 / ((mu + 1) as f64 - l as f64))
                .product::<f64>();
        if ratio < 0.75 {
            let t = term.to_f64().unwrap_or(f64::INFINITY);
            if 3.0 * t < TAIL_BOUND {
                break;
            }
        }
        mu += 1;
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let nearest = (&sum + half).floor().to_integer();
    let residual = (&sum - BigRational::from_integer(nearest.clone()))
        .abs()
        .to_f64()
        .unwrap_or(f64::NAN);
    let value = nearest.to_biguint().expect("partial sums of a positive series");
    (value, residual)
}

fn term_at(lengths: &[u32], shift: i64, mu: u64) -> BigRational {
    let mut numerator = BigInt::one();
    for &l in lengths {
        numerator *= BigInt::from(binomial_u(mu, l as u64));
    }
    let exponent = shift - mu as i64 - 1;
    if exponent >= 0 {
        BigRational::from_integer(numerator << exponent as u64)
    } else {
        BigRational::new(numerator, BigInt::one() << (-exponent) as u64)
    }
}
