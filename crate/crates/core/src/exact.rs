//! Exact integer and rational primitives: big rationals, binomial
//! coefficients, factorials, Bernoulli numbers.
//!
//! Everything here is pure and exact. `Rational` is kept in lowest terms
//! with a positive denominator by `num-rational` itself, so equality is
//! structural.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact arbitrary-precision rational, always in lowest terms, denominator
/// positive, zero stored as `0/1`.
pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Binomial coefficient `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > n as i64 {
        return BigInt::zero();
    }
    let k = (k as u32).min(n - k as u32);
    // c stays integral at every step: after multiplying by (n - k + i) the
    // product of i consecutive integers is divisible by i!.
    let mut c = BigInt::one();
    for i in 1..=k {
        c = c * BigInt::from(n - k + i) / BigInt::from(i);
    }
    c
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// Bernoulli numbers `B_0 ..= B_max` under the convention `B_1 = -1/2`,
/// from the recurrence `sum_{j=0}^{n} C(n+1, j) B_j = 0` with `B_0 = 1`.
///
/// O(n^2) exact rational operations; callers that need many values should
/// keep the table instead of calling [`bernoulli`] repeatedly.
pub fn bernoulli_table(max: u32) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(max as usize + 1);
    table.push(Rational::one());
    for n in 1..=max {
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += Rational::from_integer(binomial(n + 1, j as i64)) * b;
        }
        table.push(-acc / Rational::from_integer(BigInt::from(n + 1)));
    }
    table
}

/// Bernoulli number `B_n` (`B_1 = -1/2`). Recomputes the recurrence up to
/// `n`; see [`bernoulli_table`] for bulk use.
pub fn bernoulli(n: u32) -> Rational {
    bernoulli_table(n).pop().expect("table is never empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        for n in 0..10u32 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(10, 5), BigInt::from(252));
    }

    #[test]
    fn binomial_rows_sum_to_powers_of_two() {
        for n in 1..=64u32 {
            let sum: BigInt = (0..=n as i64).map(|k| binomial(n, k)).sum();
            assert_eq!(sum, BigInt::one() << n);
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        // iterated-product oracle
        let mut expected = BigInt::one();
        for i in 1..=12u32 {
            expected *= BigInt::from(i);
        }
        assert_eq!(factorial(12), expected);
        assert_eq!(factorial(12), BigInt::from(479_001_600u64));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), rat(-1, 2));
        // recurrence by hand: B_2 from C(3,0)B_0 + C(3,1)B_1 + C(3,2)B_2 = 0
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_indices_vanish() {
        let table = bernoulli_table(41);
        for n in (3..=41u32).step_by(2) {
            assert!(table[n as usize].is_zero(), "B_{n} should vanish");
        }
    }
}
