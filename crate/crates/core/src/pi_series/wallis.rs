// SPDX-License-Identifier: Apache-2.0

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::numkit::{product_tree, BigRational, ErrorBoundedValue, MethodId, PrecisionReal};
use crate::student_t::{constant_squared, StudentTParams};
use crate::{Error, Result};

/// Largest partial-product index accepted by the estimators.
pub const MAX_WALLIS_TERMS: u64 = 1_000_000;

/// `P_m = prod_{n=1}^{m} (2n)(2n) / ((2n-1)(2n+1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct WallisPartial {
    pub m: u64,
    pub exact: BigRational,
    pub numeric: PrecisionReal,
}

fn check_terms(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::invalid("the Wallis product needs m >= 1"));
    }
    if m > MAX_WALLIS_TERMS {
        return Err(Error::TermCapExceeded {
            cap: MAX_WALLIS_TERMS,
        });
    }
    Ok(())
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut q = p * p;
        while q <= n {
            composite[q] = true;
            q += p;
        }
    }
    primes
}

/// Exponent of `p` in `n!`.
fn legendre(mut n: u64, p: u64) -> i64 {
    let mut e = 0;
    while n > 0 {
        n /= p;
        e += n as i64;
    }
    e
}

fn valuation(mut n: u64, p: u64) -> i64 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// `P_m` in lowest terms without any gcd.
///
/// `P_m = 2^{4m} (m!)^4 / (((2m)!)^2 (2m + 1))`, so the exponent of each
/// prime follows from Legendre's formula and the two sides never share one.
pub fn wallis_exact(m: u64) -> Result<BigRational> {
    check_terms(m)?;
    let mut numer = Vec::new();
    let mut denom = Vec::new();
    for p in primes_up_to(2 * m + 1) {
        let mut e = 4 * legendre(m, p) - 2 * legendre(2 * m, p) - valuation(2 * m + 1, p);
        if p == 2 {
            e += 4 * m as i64;
        }
        let power = BigUint::from(p).pow(e.unsigned_abs() as u32);
        match e.signum() {
            1 => numer.push(power),
            -1 => denom.push(power),
            _ => {}
        }
    }
    Ok(BigRational::new_raw(
        BigInt::from(product_tree(&numer)),
        BigInt::from(product_tree(&denom)),
    ))
}

pub fn wallis_partial(m: u64, digits: u32) -> Result<WallisPartial> {
    let exact = wallis_exact(m)?;
    let numeric = PrecisionReal::from_rational(&exact, digits);
    Ok(WallisPartial { m, exact, numeric })
}

/// Exact partial products `P_1, P_2, ...` by running multiplication.
#[derive(Debug, Clone)]
pub struct WallisProducts {
    n: u64,
    product: BigRational,
}

impl WallisProducts {
    pub fn new() -> Self {
        Self {
            n: 0,
            product: BigRational::one(),
        }
    }
}

impl Default for WallisProducts {
    fn default() -> Self {
        Self::new()
    }
}

fn factor(n: u64) -> BigRational {
    let s = BigInt::from(4 * n * n);
    BigRational::new(s.clone(), s - 1)
}

impl Iterator for WallisProducts {
    type Item = (u64, BigRational);

    fn next(&mut self) -> Option<Self::Item> {
        self.n += 1;
        self.product *= factor(self.n);
        Some((self.n, self.product.clone()))
    }
}

/// `P_1, P_2, ...` at `digits` precision.
///
/// The product runs in fixed point with `digits + 16` fractional digits and
/// truncating division, so after `m` factors it is low by less than
/// `m * 10^-(digits + 16)`, far below an ulp for `m <= MAX_WALLIS_TERMS`.
#[derive(Debug, Clone)]
pub struct WallisNumeric {
    n: u64,
    digits: u32,
    scale: i64,
    product: BigUint,
}

impl WallisNumeric {
    pub fn new(digits: u32) -> Self {
        let scale = digits + 16;
        Self {
            n: 0,
            digits,
            scale: -i64::from(scale),
            product: BigUint::from(10u8).pow(scale),
        }
    }
}

impl WallisNumeric {
    fn step(&mut self) {
        self.n += 1;
        let s = 4 * u128::from(self.n) * u128::from(self.n);
        self.product = &self.product * s / (s - 1);
    }

    fn current(&self) -> PrecisionReal {
        PrecisionReal::from_parts(BigInt::from(self.product.clone()), self.scale, self.digits)
    }
}

impl Iterator for WallisNumeric {
    type Item = (u64, PrecisionReal);

    fn next(&mut self) -> Option<Self::Item> {
        self.step();
        Some((self.n, self.current()))
    }
}

/// `P_m` as an estimate of `pi/2`.
///
/// From `P_m < pi/2 < P_m (2m + 1)/(2m)` the bound is `P_m / (2m)`, plus an
/// ulp for rounding.
pub fn wallis_estimate(m: u64, digits: u32) -> Result<ErrorBoundedValue> {
    check_terms(m)?;
    let mut product = WallisNumeric::new(digits);
    for _ in 0..m {
        product.step();
    }
    let estimate = product.current();
    let bound = estimate.div_int(2 * m) + estimate.ulp();
    Ok(ErrorBoundedValue::new(estimate, bound, MethodId::Wallis, m))
}

/// `P_m == m / ((4m + 2) c_{2m}^2)` in exact arithmetic, with `c_{2m}^2`
/// taken from the Gamma-function form of the t normalization constant.
pub fn wallis_identity_check(m: u64) -> Result<bool> {
    let product = wallis_exact(m)?;
    let squared = constant_squared(StudentTParams::new(2 * m)?);
    debug_assert_eq!(squared.pi_power, 0);
    let rhs = BigRational::new(BigInt::from(m), BigInt::from(4 * m + 2)) / squared.rational_part;
    Ok(product == rhs)
}

/// `pi` as `1 / (2 c_{2m}^2) = (2m + 1) P_m / m`, which overshoots by less
/// than `estimate / (2m + 1)`.
pub fn student_t_limit_pi(m: u64, digits: u32) -> Result<ErrorBoundedValue> {
    check_terms(m)?;
    let squared = constant_squared(StudentTParams::new(2 * m)?);
    let inverse = BigRational::one() / (squared.rational_part * BigInt::from(2));
    let estimate = PrecisionReal::from_rational(&inverse, digits);
    let bound = estimate.div_int(2 * m + 1) + estimate.ulp();
    Ok(ErrorBoundedValue::new(
        estimate,
        bound,
        MethodId::StudentTLimit,
        m,
    ))
}

/// `1/(2 c_{2m}^2)` for `m = 1, 2, ...` at `digits` precision, from
/// `c_{2m+2}^2 / c_{2m}^2 = ((2m+1)/(2m+2))^2 (m+1)/m` in fixed point with
/// the same truncation allowance as [`WallisNumeric`].
#[derive(Debug, Clone)]
pub struct StudentTLimitSequence {
    m: u64,
    digits: u32,
    scale: i64,
    value: BigUint,
}

impl StudentTLimitSequence {
    pub fn new(digits: u32) -> Self {
        let scale = digits + 16;
        Self {
            m: 0,
            digits,
            scale: -i64::from(scale),
            // 1/(2 c_2^2) = 4
            value: BigUint::from(10u8).pow(scale) * 4u8,
        }
    }
}

impl Iterator for StudentTLimitSequence {
    type Item = (u64, PrecisionReal);

    fn next(&mut self) -> Option<Self::Item> {
        if self.m > 0 {
            let m = u128::from(self.m);
            let up = (2 * m + 2) * (2 * m + 2) * m;
            let down = (2 * m + 1) * (2 * m + 1) * (m + 1);
            self.value = &self.value * up / down;
        }
        self.m += 1;
        let value =
            PrecisionReal::from_parts(BigInt::from(self.value.clone()), self.scale, self.digits);
        Some((self.m, value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::{rational, Constant};
    use num_integer::Integer;

    #[test]
    fn partial_examples() {
        assert_eq!(wallis_exact(1).unwrap(), rational(4, 3));
        assert_eq!(wallis_exact(2).unwrap(), rational(64, 45));
        assert_eq!(wallis_exact(3).unwrap(), rational(256, 175));
        assert!(wallis_exact(0).is_err());
        let p = wallis_partial(1, 12).unwrap();
        assert_eq!(p.numeric.to_string(), "1.33333333333");
    }

    #[test]
    fn prime_route_matches_running_product() {
        for (m, running) in WallisProducts::new().take(300) {
            let direct = wallis_exact(m).unwrap();
            assert!(direct.numer().gcd(direct.denom()).is_one());
            assert_eq!(direct, running, "m = {m}");
        }
    }

    #[test]
    fn numeric_route_tracks_exact() {
        let exact: Vec<_> = WallisProducts::new().take(200).collect();
        for ((m, num), (_, ex)) in WallisNumeric::new(40).take(200).zip(&exact) {
            assert_eq!(num, PrecisionReal::from_rational(ex, 40), "m = {m}");
        }
    }

    #[test]
    fn identity_examples() {
        for m in [1, 2, 3, 100] {
            assert!(wallis_identity_check(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn estimates_bracket_pi() {
        let pi = Constant::Pi.value(50);
        for m in [1, 2, 10, 500] {
            let w = wallis_estimate(m, 50).unwrap();
            assert!(w.contains(&pi.div_int(2)), "wallis m = {m}");
            let s = student_t_limit_pi(m, 50).unwrap();
            assert!(s.contains(&pi), "student m = {m}");
            assert!(s.estimate > pi);
        }
        for (m, approx) in StudentTLimitSequence::new(40).take(120) {
            assert_eq!(
                approx,
                student_t_limit_pi(m, 40).unwrap().estimate,
                "m = {m}"
            );
        }
        assert_eq!(
            student_t_limit_pi(1, 10).unwrap().estimate.to_string(),
            "4.000000000"
        );
    }
}
