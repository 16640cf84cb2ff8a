//! Exact integer helpers shared by the counting engine and the closed-form
//! evaluators. The binomial convention throughout the crate is
//! `C(n, k) = 0` unless `0 <= k <= n` with `n >= 0`; many of the alternating
//! sums rely on out-of-range terms vanishing.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient with the vanishing convention for out-of-range
/// arguments (negative `n` or `k`, or `k > n`).
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    binomial_u(n as u64, k as u64)
}

/// Binomial coefficient for non-negative arguments; 0 when `k > n`.
pub fn binomial_u(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 1..=k {
        result = result * BigUint::from(n - k + i) / BigUint::from(i);
    }
    result
}

pub fn factorial(n: u64) -> BigUint {
    let mut result = BigUint::one();
    for i in 2..=n {
        result *= BigUint::from(i);
    }
    result
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

pub fn pow2(n: u64) -> BigUint {
    BigUint::one() << n
}

/// Precomputed Pascal triangle, used where binomials are taken in a tight
/// loop with small arguments.
pub struct PascalTable {
    rows: Vec<Vec<BigUint>>,
}

impl PascalTable {
    pub fn with_rows(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        PascalTable { rows }
    }

    /// `C(n, k)`; panics if `n` exceeds the precomputed depth.
    pub fn at(&self, n: usize, k: usize) -> &BigUint {
        &self.rows[n][k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_u(5, 2), BigUint::from(10u32));
        assert_eq!(binomial_u(0, 0), BigUint::from(1u32));
        assert_eq!(binomial_u(10, 5), BigUint::from(252u32));
        assert_eq!(binomial_u(3, 7), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(4, -1), BigUint::zero());
        assert_eq!(binomial(52, 5), BigUint::from(2598960u64));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(20), BigUint::from(2432902008176640000u64));
    }

    #[test]
    fn fibonacci_values() {
        let want: [u32; 11] = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(fibonacci(n as u64), BigUint::from(w));
        }
    }

    #[test]
    fn pascal_matches_direct() {
        let p = PascalTable::with_rows(20);
        for n in 0..=20u64 {
            for k in 0..=n {
                assert_eq!(*p.at(n as usize, k as usize), binomial_u(n, k));
            }
        }
    }
}
