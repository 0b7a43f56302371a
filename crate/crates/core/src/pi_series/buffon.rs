// SPDX-License-Identifier: Apache-2.0

//! Buffon's needle. The angle is drawn with the reference `pi`, so this
//! checks the crossing probability `2l/(pi d)` rather than deriving `pi`
//! from scratch.

use alloc::format;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::numkit::{Constant, ErrorBoundedValue, MethodId, PrecisionReal};
use crate::{Error, Result};

/// Generator behind every simulation: ChaCha with 8 rounds, seeded through
/// `SeedableRng::seed_from_u64`.
pub const BUFFON_RNG: &str = "ChaCha8";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuffonConfig {
    needle_length: f64,
    line_gap: f64,
    throws: u64,
    rng_seed: u64,
}

impl BuffonConfig {
    pub fn new(needle_length: f64, line_gap: f64, throws: u64, rng_seed: u64) -> Result<Self> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(needle_length) || !positive(line_gap) {
            return Err(Error::invalid(
                "needle length and line gap must be positive and finite",
            ));
        }
        if needle_length > line_gap {
            return Err(Error::invalid(format!(
                "needle length {needle_length} exceeds line gap {line_gap}; \
                 the crossing model requires l <= d"
            )));
        }
        if throws == 0 {
            return Err(Error::invalid("at least one throw is required"));
        }
        Ok(Self {
            needle_length,
            line_gap,
            throws,
            rng_seed,
        })
    }

    pub fn needle_length(&self) -> f64 {
        self.needle_length
    }

    pub fn line_gap(&self) -> f64 {
        self.line_gap
    }

    pub fn throws(&self) -> u64 {
        self.throws
    }

    pub fn rng_seed(&self) -> u64 {
        self.rng_seed
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BuffonEstimate {
    /// `pi` estimate with a three-standard-error bound.
    pub value: ErrorBoundedValue,
    pub crossings: u64,
}

/// Uniform on `[0, 1)` from the top 53 bits.
fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Counts crossings over `config.throws` needles and returns
/// `pi_hat = 2 l n / (d c)`.
///
/// The bound is `3 pi_hat sqrt((1 - p) / (p n))` with `p = c / n`, the
/// binomial standard error of the crossing rate carried through
/// `pi_hat = (2l/d) / p`.
pub fn buffon_estimate(config: &BuffonConfig, digits: u32) -> Result<BuffonEstimate> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    let half_pi = Constant::Pi.value(20).to_f64() / 2.0;
    let half_gap = config.line_gap / 2.0;
    let half_needle = config.needle_length / 2.0;
    let mut crossings = 0u64;
    for _ in 0..config.throws {
        let offset = unit(&mut rng) * half_gap;
        let angle = unit(&mut rng) * half_pi;
        if half_needle * libm::sin(angle) >= offset {
            crossings += 1;
        }
    }
    if crossings == 0 {
        return Err(Error::ZeroCrossings {
            throws: config.throws,
        });
    }
    let n = config.throws;
    let work = digits + 4;
    let estimate = (PrecisionReal::from_f64(config.needle_length, work).mul_int(2 * n)
        / (PrecisionReal::from_f64(config.line_gap, work).mul_int(crossings)))
    .with_digits(digits);
    let p = crossings as f64 / n as f64;
    let sigma = estimate.to_f64() * libm::sqrt((1.0 - p) / (p * n as f64));
    let bound = PrecisionReal::from_f64(3.0 * sigma, digits);
    Ok(BuffonEstimate {
        value: ErrorBoundedValue::new(estimate, bound, MethodId::BuffonMC, n),
        crossings,
    })
}
