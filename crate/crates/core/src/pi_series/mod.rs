// SPDX-License-Identifier: Apache-2.0

//! Estimators of `pi` and `log(pi/2)`.

mod buffon;
mod gregory;
mod log_pi;
mod wallis;

pub use buffon::{buffon_estimate, BuffonConfig, BuffonEstimate, BUFFON_RNG};
pub use gregory::{gregory_leibniz, GregoryLeibnizPartials, MAX_GREGORY_TERMS};
pub use log_pi::{
    log_pi_bernoulli_terms, log_pi_over_2_bernoulli, log_pi_over_2_zeta, log_pi_partial_sums,
    log_pi_tail_bound, log_pi_zeta_terms, MAX_LOG_PI_TERMS,
};
pub use wallis::{
    student_t_limit_pi, wallis_estimate, wallis_exact, wallis_identity_check, wallis_partial,
    StudentTLimitSequence, WallisNumeric, WallisPartial, WallisProducts, MAX_WALLIS_TERMS,
};
