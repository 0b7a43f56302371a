// SPDX-License-Identifier: Apache-2.0

//! Convergence tables: partial values of an estimator against its
//! reference constant, written as CSV.

use std::io::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use wallis_core::numkit::{pi_over_2, pi_over_4, Constant};
use wallis_core::pi_series::{
    log_pi_partial_sums, GregoryLeibnizPartials, StudentTLimitSequence, WallisNumeric,
    MAX_GREGORY_TERMS, MAX_LOG_PI_TERMS, MAX_WALLIS_TERMS,
};
use wallis_core::{MethodId, PrecisionReal};

pub const CSV_HEADER: &str = "index,partial_value,abs_error,digits_b10,digits_b4";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRecord {
    pub index: u64,
    pub partial_value: String,
    pub abs_error: String,
    pub digits_b10: u32,
    pub digits_b4: u32,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TableError {
    #[error("max-terms and step must both be at least 1")]
    EmptyRange,
    #[error("{0} is a Monte Carlo estimator and has no convergence table; use `buffon`")]
    Unsupported(MethodId),
    #[error("{method} tables are capped at {cap} terms")]
    TermCap { method: MethodId, cap: u64 },
    #[error(transparent)]
    Core(#[from] wallis_core::Error),
}

/// Largest term count accepted for `method`, or `None` if it has no
/// series form.
pub fn term_cap(method: MethodId) -> Option<u64> {
    match method {
        MethodId::Wallis | MethodId::StudentTLimit => Some(MAX_WALLIS_TERMS),
        MethodId::GregoryLeibniz => Some(MAX_GREGORY_TERMS),
        MethodId::LogPiZeta | MethodId::LogPiBernoulli => Some(u64::from(MAX_LOG_PI_TERMS)),
        _ => None,
    }
}

/// The constant `method` converges to, at `digits`.
pub fn reference_value(method: MethodId, digits: u32) -> Option<PrecisionReal> {
    match method {
        MethodId::Wallis => Some(pi_over_2(digits)),
        MethodId::GregoryLeibniz => Some(pi_over_4(digits)),
        MethodId::LogPiZeta | MethodId::LogPiBernoulli => Some(Constant::LogPiOver2.value(digits)),
        MethodId::StudentTLimit | MethodId::BuffonMC => Some(Constant::Pi.value(digits)),
        _ => None,
    }
}

/// `floor(-log_base(err))` clamped at 0: the largest `j` with
/// `err * base^j <= 1`. For zero error, the digits resolvable at `digits`
/// decimal places.
pub fn correct_digits(err: &PrecisionReal, base: u32, digits: u32) -> u32 {
    let one = BigRational::one();
    let base_big = BigInt::from(base);
    if err.is_zero() {
        let limit = BigInt::from(10u8).pow(digits);
        let mut j = 0;
        while base_big.pow(j + 1) <= limit {
            j += 1;
        }
        return j;
    }
    let e = err.abs().to_rational();
    if e >= one {
        return 0;
    }
    let fits = |j: u32| &e * BigRational::from_integer(base_big.pow(j)) <= one;
    let guess = (-err.abs().to_f64().log(f64::from(base))).floor();
    let mut j = if guess.is_finite() && guess > 0.0 {
        guess as u32
    } else {
        0
    };
    while j > 0 && !fits(j) {
        j -= 1;
    }
    while fits(j + 1) {
        j += 1;
    }
    j
}

fn record(
    index: u64,
    value: PrecisionReal,
    reference: &PrecisionReal,
    digits: u32,
) -> ConvergenceRecord {
    let err = (&value - reference).abs();
    ConvergenceRecord {
        index,
        partial_value: value.to_decimal_string(),
        abs_error: err.to_decimal_string(),
        digits_b10: correct_digits(&err, 10, digits),
        digits_b4: correct_digits(&err, 4, digits),
    }
}

/// Rows at indices `step, 2 step, ...` up to `max_terms`.
///
/// The index is the term count `m` for the products and `K` for the
/// `log(pi/2)` series; for Gregory-Leibniz it is the last summation index
/// `N`, matching `compute --terms N`.
pub fn convergence_table(
    method: MethodId,
    max_terms: u64,
    step: u64,
    digits: u32,
) -> Result<Vec<ConvergenceRecord>, TableError> {
    if max_terms == 0 || step == 0 {
        return Err(TableError::EmptyRange);
    }
    let cap = term_cap(method).ok_or(TableError::Unsupported(method))?;
    if max_terms > cap {
        return Err(TableError::TermCap { method, cap });
    }
    let reference = reference_value(method, digits).expect("series methods have references");
    let sampled = |i: u64| i.is_multiple_of(step);
    let take = max_terms as usize;
    let rows = match method {
        MethodId::Wallis => WallisNumeric::new(digits)
            .take(take)
            .filter(|(m, _)| sampled(*m))
            .map(|(m, v)| record(m, v, &reference, digits))
            .collect(),
        MethodId::StudentTLimit => StudentTLimitSequence::new(digits)
            .take(take)
            .filter(|(m, _)| sampled(*m))
            .map(|(m, v)| record(m, v, &reference, digits))
            .collect(),
        MethodId::GregoryLeibniz => GregoryLeibnizPartials::new(digits, max_terms)
            .take(take + 1)
            .filter(|(n, _)| *n > 0 && sampled(*n))
            .map(|(n, v)| record(n, v, &reference, digits))
            .collect(),
        MethodId::LogPiZeta | MethodId::LogPiBernoulli => {
            // Both forms share partial sums term for term; the zeta form is
            // the one tabulated.
            log_pi_partial_sums(max_terms as u32, digits)?
                .into_iter()
                .zip(1u64..)
                .filter(|(_, k)| sampled(*k))
                .map(|(v, k)| record(k, v, &reference, digits))
                .collect()
        }
        _ => unreachable!("term_cap rejects other methods"),
    };
    Ok(rows)
}

/// Header then one line per record, LF endings.
pub fn write_csv(records: &[ConvergenceRecord], out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.index, r.partial_value, r.abs_error, r.digits_b10, r.digits_b4
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(s: &str, d: u32) -> PrecisionReal {
        PrecisionReal::parse(s, d).unwrap()
    }

    #[test]
    fn digit_counts() {
        assert_eq!(correct_digits(&real("0.001", 10), 10, 10), 3);
        assert_eq!(correct_digits(&real("0.0011", 10), 10, 10), 2);
        assert_eq!(correct_digits(&real("0.0009", 10), 10, 10), 3);
        assert_eq!(correct_digits(&real("2", 10), 10, 10), 0);
        assert_eq!(correct_digits(&real("0.25", 10), 4, 10), 1);
        assert_eq!(correct_digits(&real("0.2", 10), 4, 10), 1);
        assert_eq!(correct_digits(&real("0.0625", 10), 4, 10), 2);
        assert_eq!(correct_digits(&PrecisionReal::zero(10), 10, 10), 10);
        assert_eq!(correct_digits(&PrecisionReal::zero(10), 4, 10), 16);
    }

    #[test]
    fn wallis_rows() {
        let rows = convergence_table(MethodId::Wallis, 3, 1, 12).unwrap();
        let values: Vec<_> = rows.iter().map(|r| r.partial_value.as_str()).collect();
        assert_eq!(values, ["1.33333333333", "1.42222222222", "1.46285714286"]);
        assert_eq!(rows[0].abs_error, "0.237462993460");
        assert_eq!(rows[0].digits_b10, 0);
    }

    #[test]
    fn log_pi_gains_base_four_digits() {
        let rows = convergence_table(MethodId::LogPiZeta, 40, 1, 50).unwrap();
        for pair in rows[1..].windows(2) {
            assert!(pair[1].digits_b4 > pair[0].digits_b4, "{pair:?}");
        }
    }

    #[test]
    fn stepping_and_errors() {
        let rows = convergence_table(MethodId::GregoryLeibniz, 10, 5, 10).unwrap();
        assert_eq!(rows.iter().map(|r| r.index).collect::<Vec<_>>(), [5, 10]);
        assert_eq!(
            convergence_table(MethodId::Wallis, 0, 1, 10),
            Err(TableError::EmptyRange)
        );
        assert_eq!(
            convergence_table(MethodId::BuffonMC, 10, 1, 10),
            Err(TableError::Unsupported(MethodId::BuffonMC))
        );
    }

    #[test]
    fn csv_layout() {
        let rows = convergence_table(MethodId::StudentTLimit, 2, 1, 5).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "index,partial_value,abs_error,digits_b10,digits_b4\n\
             1,4.0000,0.85840,0,0\n\
             2,3.5556,0.41400,0,0\n"
        );
    }
}
