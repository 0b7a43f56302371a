// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;

use super::real::{pow10, PrecisionReal};

/// Fixed-point accumulator for long series of small rational terms.
///
/// Each term is truncated to `10^-scale_digits`, so the accumulated value
/// differs from the exact sum by less than `terms_added * 10^-scale_digits`.
#[derive(Debug, Clone)]
pub struct FixedPointSum {
    scale_digits: u32,
    unit: BigInt,
    total: BigInt,
    terms: u64,
}

impl FixedPointSum {
    pub fn new(scale_digits: u32) -> Self {
        Self {
            scale_digits,
            unit: BigInt::from(pow10(scale_digits)),
            total: BigInt::from(0u8),
            terms: 0,
        }
    }

    /// Adds `sign / denom`.
    pub fn add_unit_fraction(&mut self, negative: bool, denom: u64) {
        let term = &self.unit / denom;
        if negative {
            self.total -= term;
        } else {
            self.total += term;
        }
        self.terms += 1;
    }

    /// Adds `numer / denom` for arbitrary-size integers (`denom > 0`).
    pub fn add_quotient(&mut self, numer: &BigInt, denom: &BigInt) {
        self.total += numer * &self.unit / denom;
        self.terms += 1;
    }

    pub fn terms(&self) -> u64 {
        self.terms
    }

    pub fn value(&self, digits: u32) -> PrecisionReal {
        PrecisionReal::from_parts(self.total.clone(), -(self.scale_digits as i64), digits)
    }

    /// Upper bound on the accumulated truncation error.
    pub fn truncation_bound(&self, digits: u32) -> PrecisionReal {
        PrecisionReal::from_parts(
            BigInt::from(self.terms.max(1)),
            -(self.scale_digits as i64),
            digits,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_sum_within_truncation_bound() {
        let mut sum = FixedPointSum::new(30);
        for n in 1..=10u64 {
            sum.add_unit_fraction(false, n);
        }
        // H_10 = 7381/2520
        let exact = PrecisionReal::from_rational(&crate::numkit::rational(7381, 2520), 40);
        let got = sum.value(40);
        assert!((&got - &exact).abs() <= sum.truncation_bound(40));
        assert_eq!(sum.terms(), 10);
    }
}
