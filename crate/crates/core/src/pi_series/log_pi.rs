// SPDX-License-Identifier: Apache-2.0

//! `log(pi/2) = sum_{k>=1} zeta(2k) / (4^k k)
//!            = -sum_{k>=1} (-1)^k B_{2k} pi^{2k} / (2k (2k)!)`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bernoulli_zeta::{bernoulli_numbers, pi_even_power, zeta_even_closed_form_with};
use crate::numkit::{BigRational, ErrorBoundedValue, MethodId, PrecisionReal};
use crate::{Error, Result};

/// Largest `K` accepted by the partial sums.
pub const MAX_LOG_PI_TERMS: u32 = 250;

fn check_terms(k: u32) -> Result<()> {
    if k == 0 || k > MAX_LOG_PI_TERMS {
        return Err(Error::invalid(alloc::format!(
            "log(pi/2) partial sums need 1 <= K <= {MAX_LOG_PI_TERMS}"
        )));
    }
    Ok(())
}

/// `zeta(2k) / (4^k k)` for `k = 1..=K`.
pub fn log_pi_zeta_terms(k_max: u32, digits: u32) -> Result<Vec<PrecisionReal>> {
    check_terms(k_max)?;
    let table = bernoulli_numbers(2 * k_max as usize)?;
    (1..=k_max)
        .map(|k| {
            let zeta = zeta_even_closed_form_with(&table, k, digits + 3)?;
            let scale = (BigInt::from(1u8) << (2 * k as usize)) * k;
            Ok(zeta.value.estimate.div_int(scale).with_digits(digits))
        })
        .collect()
}

/// `-(-1)^k B_{2k} pi^{2k} / (2k (2k)!)` for `k = 1..=K`.
pub fn log_pi_bernoulli_terms(k_max: u32, digits: u32) -> Result<Vec<PrecisionReal>> {
    check_terms(k_max)?;
    let table = bernoulli_numbers(2 * k_max as usize)?;
    let mut factorial = BigInt::from(1u8);
    let mut terms = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        factorial *= (2 * k - 1) * (2 * k);
        let b = table.values()[2 * k as usize].clone();
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let coefficient = b * BigRational::new(BigInt::from(sign), &factorial * (2 * k));
        let term = pi_even_power(k, digits + 3).mul_rational(&coefficient);
        terms.push(term.with_digits(digits));
    }
    Ok(terms)
}

/// `S_1, ..., S_K` of the zeta form.
pub fn log_pi_partial_sums(k_max: u32, digits: u32) -> Result<Vec<PrecisionReal>> {
    let work = digits + 5;
    let mut acc = PrecisionReal::zero(work);
    Ok(log_pi_zeta_terms(k_max, work)?
        .into_iter()
        .map(|t| {
            acc = &acc + &t;
            acc.with_digits(digits)
        })
        .collect())
}

/// `(2 * 4^{-K} / K) * 4/3`: every `zeta(2k)` is at most 2 and the tail is
/// dominated by a geometric series of ratio 1/4.
pub fn log_pi_tail_bound(k_max: u32, digits: u32) -> PrecisionReal {
    let denom = (BigInt::from(1u8) << (2 * k_max as usize)) * (3 * k_max);
    PrecisionReal::from_rational(&BigRational::new(BigInt::from(8u8), denom), digits)
}

fn sum_with_bound(
    terms: Vec<PrecisionReal>,
    k_max: u32,
    digits: u32,
    method: MethodId,
) -> ErrorBoundedValue {
    let work = terms.first().map_or(digits, PrecisionReal::digits);
    let total = terms
        .iter()
        .fold(PrecisionReal::zero(work), |acc, t| &acc + t);
    let estimate = total.with_digits(digits);
    let bound = log_pi_tail_bound(k_max, digits) + estimate.ulp();
    ErrorBoundedValue::new(estimate, bound, method, u64::from(k_max))
}

pub fn log_pi_over_2_zeta(k_max: u32, digits: u32) -> Result<ErrorBoundedValue> {
    let terms = log_pi_zeta_terms(k_max, digits + 5)?;
    Ok(sum_with_bound(terms, k_max, digits, MethodId::LogPiZeta))
}

pub fn log_pi_over_2_bernoulli(k_max: u32, digits: u32) -> Result<ErrorBoundedValue> {
    let terms = log_pi_bernoulli_terms(k_max, digits + 5)?;
    Ok(sum_with_bound(
        terms,
        k_max,
        digits,
        MethodId::LogPiBernoulli,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::Constant;

    #[test]
    fn examples() {
        let s1 = log_pi_over_2_zeta(1, 10).unwrap();
        assert_eq!(s1.estimate.to_string(), "0.4112335167");
        let s2 = log_pi_over_2_zeta(2, 10).unwrap();
        assert_eq!(s2.estimate.to_string(), "0.4450561178");
        let b1 = log_pi_over_2_bernoulli(1, 10).unwrap();
        assert_eq!(b1.estimate, s1.estimate);
        let target = Constant::LogPiOver2.value(50);
        let s20 = log_pi_over_2_zeta(20, 50).unwrap();
        assert!((&s20.estimate - &target).abs().to_f64() <= 2e-12);
        assert!(s20.contains(&target));
        assert!(log_pi_over_2_zeta(0, 10).is_err());
        assert!(log_pi_over_2_zeta(251, 10).is_err());
    }

    #[test]
    fn forms_agree_term_by_term() {
        let z = log_pi_zeta_terms(40, 50).unwrap();
        let b = log_pi_bernoulli_terms(40, 50).unwrap();
        for (k, (a, c)) in z.iter().zip(&b).enumerate() {
            assert!((a - c).abs() <= a.ulp(), "k = {}", k + 1);
        }
    }

    #[test]
    fn each_term_gains_a_base_four_digit() {
        let target = Constant::LogPiOver2.value(50);
        let sums = log_pi_partial_sums(41, 50).unwrap();
        for k in 2..=40 {
            let before = (&sums[k - 1] - &target).abs();
            let after = (&sums[k] - &target).abs();
            assert!(after.mul_int(4) <= before, "K = {k}");
        }
    }
}
