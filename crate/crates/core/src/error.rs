// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown reference constant `{0}`")]
    UnknownConstant(String),

    #[error("requested {requested} digits, at most {max} are available")]
    PrecisionTooHigh { requested: u32, max: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("Gauss-Legendre quadrature did not converge with {nodes} nodes (last change {last_change:e})")]
    QuadratureNotConverged { nodes: usize, last_change: f64 },

    #[error("series needs more than {cap} terms to reach the requested tolerance")]
    TermCapExceeded { cap: u64 },

    #[error("no needle crossed a line in {throws} throws; more throws are needed")]
    ZeroCrossings { throws: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
