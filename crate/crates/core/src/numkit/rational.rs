// SPDX-License-Identifier: Apache-2.0

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact ratio of arbitrary-precision integers, always kept in lowest terms
/// with a positive denominator.
pub type BigRational = num_rational::BigRational;

/// Builds `numer / denom` in canonical form.
///
/// Panics if `denom` is zero; use [`checked_div`] for fallible division.
pub fn rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

pub fn rational_add(a: &BigRational, b: &BigRational) -> BigRational {
    a + b
}

pub fn rational_sub(a: &BigRational, b: &BigRational) -> BigRational {
    a - b
}

pub fn rational_mul(a: &BigRational, b: &BigRational) -> BigRational {
    a * b
}

pub fn rational_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    checked_div(a, b)
}

pub fn checked_div(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// `n!! = n (n - 2) (n - 4) ...`, with the empty product `1` for `n <= 0`
/// (so `0!! = (-1)!! = 1`).
pub fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    product_range(1, n)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Product of the integers in `lo..=hi`, split as a balanced tree.
pub(crate) fn product_range(lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    if hi - lo < 16 {
        let mut acc = BigUint::one();
        for k in lo..=hi {
            acc *= k;
        }
        return acc;
    }
    let mid = lo + (hi - lo) / 2;
    product_range(lo, mid) * product_range(mid + 1, hi)
}

/// Product of a list of factors, split as a balanced tree.
pub(crate) fn product_tree(factors: &[BigUint]) -> BigUint {
    match factors.len() {
        0 => BigUint::one(),
        1 => factors[0].clone(),
        n => product_tree(&factors[..n / 2]) * product_tree(&factors[n / 2..]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_double_factorial(n: u64) -> u128 {
        (1..=n).filter(|k| k % 2 == n % 2).map(u128::from).product()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            rational_add(&rational(1, 6), &rational(-1, 30)),
            rational(2, 15)
        );
        assert_eq!(
            rational_mul(&rational(4, 3), &rational(16, 15)),
            rational(64, 45)
        );
        assert!(rational_mul(&rational(7, 9), &BigRational::zero()).is_zero());
        assert_eq!(
            rational_sub(&rational(1, 2), &rational(1, 3)),
            rational(1, 6)
        );
        assert_eq!(
            rational_div(&rational(1, 2), &rational(3, 4)).unwrap(),
            rational(2, 3)
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            checked_div(&rational(1, 2), &BigRational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn double_factorial_examples() {
        assert_eq!(double_factorial(7), BigUint::from(105u32));
        assert_eq!(double_factorial(6), BigUint::from(48u32));
        assert_eq!(double_factorial(0), BigUint::one());
        assert_eq!(double_factorial(-1), BigUint::one());
        for n in 0..=30 {
            assert_eq!(
                double_factorial(n as i64),
                BigUint::from(brute_double_factorial(n))
            );
        }
    }

    #[test]
    fn double_factorials_multiply_to_factorial() {
        for n in 1..=100u64 {
            let lhs = double_factorial(n as i64) * double_factorial(n as i64 - 1);
            let brute: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(lhs, brute, "n = {n}");
            assert_eq!(factorial(n), brute);
        }
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = alloc::vec![BigUint::one()];
        for n in 1..=40u64 {
            let mut next = alloc::vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize]);
            }
        }
        assert!(binomial(3, 4).is_zero());
    }
}
