// SPDX-License-Identifier: Apache-2.0

//! Exact and precision-parameterized building blocks for Wallis's product,
//! Gamma/Beta identities, Student-t normalization, Bernoulli numbers and
//! even zeta values, and the `log(pi/2)` series.
//!
//! Everything here is pure computation over immutable values. The crate is
//! `no_std` and only needs `alloc`; IO, reporting and the command-line front
//! end live in the companion `wallis` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod bernoulli_zeta;
pub mod gamma;
pub mod numkit;
pub mod pi_series;
pub mod quadrature;
pub mod student_t;

pub use error::Error;
pub use numkit::{BigRational, ErrorBoundedValue, MethodId, PrecisionReal};

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Working precision, in significant decimal digits, used when a caller does
/// not pick one.
pub const DEFAULT_DIGITS: u32 = 50;
