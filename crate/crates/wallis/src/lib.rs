// SPDX-License-Identifier: Apache-2.0

//! Verification suites, convergence tables and the `wallis` command line,
//! built on [`wallis_core`].

pub mod cli;
pub mod report;
pub mod table;
pub mod verify;
