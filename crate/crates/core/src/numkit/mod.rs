// SPDX-License-Identifier: Apache-2.0

//! Arithmetic substrate: exact rationals, decimal reals at a chosen number of
//! significant digits, and the reference constants that errors are measured
//! against.

mod bounded;
mod constants;
mod fixed;
mod rational;
mod real;

pub use bounded::{ErrorBoundedValue, MethodId};
pub use constants::{
    pi_over_2, pi_over_4, reference_constant, Constant, MAX_REFERENCE_DIGITS, TABLE_DIGITS,
};
pub use fixed::FixedPointSum;
pub(crate) use rational::product_tree;
pub use rational::{
    binomial, checked_div, double_factorial, factorial, rational, rational_add, rational_div,
    rational_mul, rational_sub, BigRational,
};
pub use real::PrecisionReal;
