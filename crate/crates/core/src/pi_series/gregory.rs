// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;

use crate::numkit::{ErrorBoundedValue, FixedPointSum, MethodId, PrecisionReal};
use crate::{Error, Result};

/// Largest `N` accepted by [`gregory_leibniz`].
pub const MAX_GREGORY_TERMS: u64 = 100_000_000;

fn fixed_scale(digits: u32, n: u64) -> u32 {
    digits + 7 + n.max(1).ilog10()
}

/// Partial sums `S_N = sum_{n=0}^{N} (-1)^n / (2n + 1)` for `N = 0, 1, ...`.
///
/// Sums are accumulated in fixed point sized for up to `max_n` terms, so
/// every yielded value is within one ulp of the exact rational partial sum.
#[derive(Debug, Clone)]
pub struct GregoryLeibnizPartials {
    n: u64,
    digits: u32,
    sum: FixedPointSum,
}

impl GregoryLeibnizPartials {
    pub fn new(digits: u32, max_n: u64) -> Self {
        Self {
            n: 0,
            digits,
            sum: FixedPointSum::new(fixed_scale(digits, max_n)),
        }
    }
}

impl Iterator for GregoryLeibnizPartials {
    type Item = (u64, PrecisionReal);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.n;
        self.sum.add_unit_fraction(n % 2 == 1, 2 * n + 1);
        self.n += 1;
        Some((n, self.sum.value(self.digits)))
    }
}

/// `S_N` as an estimate of `pi/4`, with bound `1/(2N + 3)`, the first
/// omitted term.
pub fn gregory_leibniz(n: u64, digits: u32) -> Result<ErrorBoundedValue> {
    if n > MAX_GREGORY_TERMS {
        return Err(Error::TermCapExceeded {
            cap: MAX_GREGORY_TERMS,
        });
    }
    let mut sum = FixedPointSum::new(fixed_scale(digits, n));
    for k in 0..=n {
        sum.add_unit_fraction(k % 2 == 1, 2 * k + 1);
    }
    let bound = PrecisionReal::one(digits).div_int(BigInt::from(2 * n + 3));
    Ok(ErrorBoundedValue::new(
        sum.value(digits),
        bound,
        MethodId::GregoryLeibniz,
        n + 1,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::Constant;

    #[test]
    fn examples() {
        let g0 = gregory_leibniz(0, 10).unwrap();
        assert_eq!(g0.estimate.to_string(), "1.000000000");
        assert_eq!(g0.abs_error_bound.to_string(), "0.3333333333");
        let g1 = gregory_leibniz(1, 10).unwrap();
        assert_eq!(g1.estimate.to_string(), "0.6666666667");
        assert_eq!(g1.abs_error_bound.to_string(), "0.2000000000");
    }

    #[test]
    fn partials_alternate_around_quarter_pi() {
        let quarter = Constant::Pi.value(40).div_int(4).with_digits(30);
        let sums: alloc::vec::Vec<_> = GregoryLeibnizPartials::new(30, 2000).take(2000).collect();
        for (n, s) in &sums {
            assert_eq!(*s > quarter, n % 2 == 0, "N = {n}");
        }
        let direct = gregory_leibniz(1999, 30).unwrap();
        assert_eq!(sums[1999].1, direct.estimate);
        assert!(direct.contains(&quarter));
    }
}
