// SPDX-License-Identifier: Apache-2.0

use core::fmt;
use core::str::FromStr;

use super::real::PrecisionReal;
use crate::Error;

/// Estimators the crate implements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodId {
    Wallis,
    GregoryLeibniz,
    LogPiZeta,
    LogPiBernoulli,
    StudentTLimit,
    BuffonMC,
    ZetaDirect,
    ZetaClosedForm,
    DensityQuadrature,
}

impl MethodId {
    /// Estimators exposed on the command line.
    pub const COMMAND_LINE: [MethodId; 6] = [
        MethodId::Wallis,
        MethodId::GregoryLeibniz,
        MethodId::LogPiZeta,
        MethodId::LogPiBernoulli,
        MethodId::StudentTLimit,
        MethodId::BuffonMC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodId::Wallis => "wallis",
            MethodId::GregoryLeibniz => "gregory-leibniz",
            MethodId::LogPiZeta => "log-pi-zeta",
            MethodId::LogPiBernoulli => "log-pi-bernoulli",
            MethodId::StudentTLimit => "student-t-limit",
            MethodId::BuffonMC => "buffon-mc",
            MethodId::ZetaDirect => "zeta-direct",
            MethodId::ZetaClosedForm => "zeta-closed-form",
            MethodId::DensityQuadrature => "density-quadrature",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        MethodId::COMMAND_LINE
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown method `{}`", s)))
    }
}

/// An estimate together with a rigorous bound on its absolute error.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorBoundedValue {
    pub estimate: PrecisionReal,
    pub abs_error_bound: PrecisionReal,
    pub method: MethodId,
    pub terms_used: u64,
}

impl ErrorBoundedValue {
    pub fn new(
        estimate: PrecisionReal,
        abs_error_bound: PrecisionReal,
        method: MethodId,
        terms_used: u64,
    ) -> Self {
        debug_assert!(!abs_error_bound.is_negative());
        Self {
            estimate,
            abs_error_bound: abs_error_bound.abs(),
            method,
            terms_used,
        }
    }

    /// True when `value` lies within the stated bound of the estimate.
    pub fn contains(&self, value: &PrecisionReal) -> bool {
        (&self.estimate - value).abs() <= self.abs_error_bound
    }
}
