// SPDX-License-Identifier: Apache-2.0

//! Exact Bernoulli numbers and the even zeta values `zeta(2k)`, both by
//! direct summation and by the closed form
//! `zeta(2k) = -(-4)^k B_{2k} / (2 (2k)!) * pi^{2k}`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::numkit::{
    factorial, BigRational, Constant, ErrorBoundedValue, FixedPointSum, MethodId, PrecisionReal,
};
use crate::{Error, Result};

/// Largest index [`bernoulli_numbers`] will build.
pub const MAX_BERNOULLI_INDEX: usize = 500;
/// Largest `k` accepted by the closed form.
pub const MAX_CLOSED_FORM_K: u32 = 250;
/// Term cap for [`zeta_even_direct`].
pub const DIRECT_TERM_CAP: u64 = 100_000_000;

/// `B_0 ..= B_{k_max}` with `B_1 = -1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.values.get(k)
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Bernoulli numbers from `sum_{j=0}^{m} C(m+1, j) B_j = 0`, the identity
/// obtained by multiplying `t/(e^t - 1)` by `e^t - 1` and matching Taylor
/// coefficients.
pub fn bernoulli_numbers(k_max: usize) -> Result<BernoulliTable> {
    if k_max > MAX_BERNOULLI_INDEX {
        return Err(Error::invalid(format!(
            "Bernoulli table is capped at index {MAX_BERNOULLI_INDEX}"
        )));
    }
    let mut values: Vec<BigRational> = Vec::with_capacity(k_max + 1);
    values.push(BigRational::one());
    for m in 1..=k_max {
        let n = m as u64 + 1;
        let mut coeff = BigUint::one();
        // Sum kept as numer / denom over a running lcm, reduced once.
        let mut numer = BigInt::zero();
        let mut denom = BigInt::one();
        for (j, b) in values.iter().enumerate() {
            if j > 0 {
                coeff = coeff * (n - j as u64 + 1) / j as u64;
            }
            if b.is_zero() {
                continue;
            }
            let g = denom.gcd(b.denom());
            let scale = b.denom() / &g;
            numer = numer * &scale + b.numer() * BigInt::from(coeff.clone()) * (&denom / &g);
            denom *= scale;
        }
        values.push(BigRational::new(-numer, denom * BigInt::from(n)));
    }
    Ok(BernoulliTable { values })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaSource {
    DirectSeries,
    BernoulliClosedForm,
}

/// `zeta(argument)` at an even argument.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaValue {
    pub argument: u32,
    pub value: ErrorBoundedValue,
    pub source: ZetaSource,
}

/// `h(N) = (N^{1-s} - (N+1)^{1-s}) / (2 (s - 1))`, half the width of the
/// integral bracket on the tail `sum_{n > N} n^{-s}`.
fn tail_half_width(n: u64, s: u32) -> BigRational {
    let e = s - 1;
    let lo = BigInt::from(n).pow(e);
    let hi = BigInt::from(n + 1).pow(e);
    BigRational::new(&hi - &lo, lo * hi * BigInt::from(2 * e))
}

/// Midpoint of the tail bracket `[int_{N+1}^inf, int_N^inf] x^{-s} dx`.
fn tail_midpoint(n: u64, s: u32) -> BigRational {
    let e = s - 1;
    let lo = BigInt::from(n).pow(e);
    let hi = BigInt::from(n + 1).pow(e);
    BigRational::new(&hi + &lo, lo * hi * BigInt::from(2 * e))
}

/// Smallest `N` with `h(N) <= tol`, or `None` past the term cap.
fn terms_for_tolerance(s: u32, tol: &BigRational) -> Option<u64> {
    if tail_half_width(DIRECT_TERM_CAP, s) > *tol {
        return None;
    }
    let tol_f = tol
        .to_f64()
        .unwrap_or(f64::MIN_POSITIVE)
        .max(f64::MIN_POSITIVE);
    let guess = libm::ceil(libm::pow(1.0 / (2.0 * tol_f), 1.0 / f64::from(s)));
    let mut hi = (guess as u64).clamp(1, DIRECT_TERM_CAP);
    while tail_half_width(hi, s) > *tol {
        hi = (hi * 2).min(DIRECT_TERM_CAP);
    }
    let mut lo = 1;
    if tail_half_width(lo, s) <= *tol {
        return Some(lo);
    }
    // h(lo) > tol >= h(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if tail_half_width(mid, s) <= *tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// `zeta(2k)` as the partial sum through `N` plus the midpoint of the
/// integral-comparison bracket on the remaining tail.
///
/// `N` is the smallest count for which half the bracket width is at most
/// `tol`; the reported bound is that half width plus the accumulated
/// rounding. The result carries the precision of `tol`.
pub fn zeta_even_direct(k: u32, tol: &PrecisionReal) -> Result<ZetaValue> {
    if k == 0 {
        return Err(Error::invalid("zeta_even_direct needs k >= 1"));
    }
    if !tol.is_positive() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let digits = tol.digits();
    let s = 2 * k;
    let n_terms = terms_for_tolerance(s, &tol.to_rational()).ok_or(Error::TermCapExceeded {
        cap: DIRECT_TERM_CAP,
    })?;

    let mut sum = FixedPointSum::new(digits + 12);
    let one = BigInt::one();
    for n in 1..=n_terms {
        match n.checked_pow(s) {
            Some(p) => sum.add_unit_fraction(false, p),
            None => sum.add_quotient(&one, &BigInt::from(n).pow(s)),
        }
    }
    let work = digits + 5;
    let tail = PrecisionReal::from_rational(&tail_midpoint(n_terms, s), work);
    let estimate = (&sum.value(work) + &tail).with_digits(digits);
    let bound = &PrecisionReal::from_rational(&tail_half_width(n_terms, s), work)
        + &sum.truncation_bound(work)
        + estimate.ulp();
    Ok(ZetaValue {
        argument: s,
        value: ErrorBoundedValue::new(
            estimate,
            bound.with_digits(digits),
            MethodId::ZetaDirect,
            n_terms,
        ),
        source: ZetaSource::DirectSeries,
    })
}

/// Exact `-(-4)^k B_{2k} / (2 (2k)!)`, the rational multiplier of
/// `pi^{2k}` in `zeta(2k)`.
pub fn zeta_closed_form_coefficient(table: &BernoulliTable, k: u32) -> Result<BigRational> {
    let b = table
        .get(2 * k as usize)
        .ok_or_else(|| Error::invalid(format!("Bernoulli table does not reach B_{}", 2 * k)))?;
    let four_k = BigInt::from(4u8).pow(k);
    let signed = if k.is_multiple_of(2) { -four_k } else { four_k };
    let denom = BigInt::from(factorial(2 * u64::from(k))) * 2;
    Ok(b * BigRational::new(signed, denom))
}

/// `pi^{2k}` at `digits` precision from the reference pi.
pub(crate) fn pi_even_power(k: u32, digits: u32) -> PrecisionReal {
    Constant::Pi
        .value(digits + 5)
        .powi(2 * i64::from(k))
        .with_digits(digits)
}

/// Closed-form `zeta(2k)` using a prebuilt table.
pub fn zeta_even_closed_form_with(
    table: &BernoulliTable,
    k: u32,
    digits: u32,
) -> Result<ZetaValue> {
    if k == 0 || k > MAX_CLOSED_FORM_K {
        return Err(Error::invalid(format!(
            "closed form supports 1 <= k <= {MAX_CLOSED_FORM_K}"
        )));
    }
    let coefficient = zeta_closed_form_coefficient(table, k)?;
    let value = pi_even_power(k, digits + 5)
        .mul_rational(&coefficient)
        .with_digits(digits);
    let bound = value.ulp();
    Ok(ZetaValue {
        argument: 2 * k,
        value: ErrorBoundedValue::new(value, bound, MethodId::ZetaClosedForm, 1),
        source: ZetaSource::BernoulliClosedForm,
    })
}

/// Closed-form `zeta(2k)` for `1 <= k <= 250`.
pub fn zeta_even_closed_form(k: u32, digits: u32) -> Result<ZetaValue> {
    let table = bernoulli_numbers(2 * k as usize)?;
    zeta_even_closed_form_with(&table, k, digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::rational;

    /// Akiyama-Tanigawa, which yields `B_1 = +1/2`.
    fn akiyama_tanigawa(n: usize) -> Vec<BigRational> {
        let mut a: Vec<BigRational> = Vec::new();
        let mut out = Vec::new();
        for m in 0..=n {
            a.push(rational(1, m as i64 + 1));
            for j in (1..=m).rev() {
                a[j - 1] = BigRational::from_integer((j as i64).into()) * (&a[j - 1] - &a[j]);
            }
            out.push(a[0].clone());
        }
        out
    }

    #[test]
    fn bernoulli_examples() {
        let t = bernoulli_numbers(10).unwrap();
        assert_eq!(t.get(0), Some(&BigRational::one()));
        assert_eq!(t.get(1), Some(&rational(-1, 2)));
        assert_eq!(t.get(2), Some(&rational(1, 6)));
        assert_eq!(t.get(4), Some(&rational(-1, 30)));
        assert_eq!(t.get(6), Some(&rational(1, 42)));
        assert_eq!(t.max_index(), 10);
        assert!(bernoulli_numbers(501).is_err());
    }

    #[test]
    fn bernoulli_matches_independent_algorithm() {
        let t = bernoulli_numbers(80).unwrap();
        let oracle = akiyama_tanigawa(80);
        for k in 0..=80 {
            let want = if k == 1 {
                -oracle[1].clone()
            } else {
                oracle[k].clone()
            };
            assert_eq!(t.get(k).unwrap(), &want, "B_{k}");
        }
    }

    #[test]
    fn odd_bernoulli_vanish_and_even_alternate() {
        let t = bernoulli_numbers(200).unwrap();
        for k in (3..=200).step_by(2) {
            assert!(t.get(k).unwrap().is_zero(), "B_{k}");
        }
        for k in 1..100 {
            let a = t.get(2 * k).unwrap();
            let b = t.get(2 * k + 2).unwrap();
            assert!(
                (a * b) < BigRational::zero(),
                "signs of B_{} and B_{}",
                2 * k,
                2 * k + 2
            );
        }
    }

    #[test]
    fn closed_form_coefficients() {
        let t = bernoulli_numbers(20).unwrap();
        assert_eq!(zeta_closed_form_coefficient(&t, 1).unwrap(), rational(1, 6));
        assert_eq!(
            zeta_closed_form_coefficient(&t, 2).unwrap(),
            rational(1, 90)
        );
        assert_eq!(
            zeta_closed_form_coefficient(&t, 3).unwrap(),
            rational(1, 945)
        );
        for k in 1..=10 {
            assert!(zeta_closed_form_coefficient(&t, k).unwrap() > BigRational::zero());
        }
    }

    #[test]
    fn closed_form_values() {
        let z2 = zeta_even_closed_form(1, 30).unwrap();
        assert_eq!(z2.argument, 2);
        assert_eq!(z2.source, ZetaSource::BernoulliClosedForm);
        assert_eq!(
            z2.value.estimate.to_string(),
            "1.64493406684822643647241516665"
        );
        let z4 = zeta_even_closed_form(2, 20).unwrap();
        assert_eq!(z4.value.estimate.to_string(), "1.0823232337111381915");
        assert!(zeta_even_closed_form(0, 20).is_err());
        assert!(zeta_even_closed_form(251, 20).is_err());
    }

    #[test]
    fn direct_examples() {
        let tol = PrecisionReal::parse("1e-12", 50).unwrap();
        let z2 = zeta_even_direct(1, &tol).unwrap();
        assert!(z2.value.estimate.to_string().starts_with("1.644934066848"));
        assert!(z2.value.abs_error_bound <= tol.mul_int(2));
        let z4 = zeta_even_direct(2, &tol).unwrap();
        assert!(z4.value.estimate.to_string().starts_with("1.08232323371"));
        let z20 = zeta_even_direct(10, &tol).unwrap();
        assert!(z20.value.estimate.to_string().starts_with("1.00000095396"));
    }

    #[test]
    fn direct_respects_term_cap() {
        let tol = PrecisionReal::parse("1e-20", 50).unwrap();
        assert_eq!(
            zeta_even_direct(1, &tol),
            Err(Error::TermCapExceeded {
                cap: DIRECT_TERM_CAP
            })
        );
    }

    #[test]
    fn chosen_term_count_is_minimal() {
        let tol = rational(1, 1_000_000);
        let n = terms_for_tolerance(4, &tol).unwrap();
        assert!(tail_half_width(n, 4) <= tol);
        assert!(tail_half_width(n - 1, 4) > tol);
    }
}
