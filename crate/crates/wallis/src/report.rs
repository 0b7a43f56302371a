// SPDX-License-Identifier: Apache-2.0

//! Text and tab-separated renderings of a [`SuiteReport`].

use std::io::{self, Write};

use crate::verify::SuiteReport;

fn optional(value: &Option<wallis_core::PrecisionReal>) -> String {
    value
        .as_ref()
        .map_or_else(|| "-".to_string(), |v| v.to_decimal_string())
}

/// One line per check: `check_id`, status, measured, bound, separated by
/// tabs, with `-` for an absent value. No header and no timing, so equal
/// runs give equal bytes.
pub fn write_tsv(report: &SuiteReport, out: &mut impl Write) -> io::Result<()> {
    for r in &report.results {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            r.check_id,
            r.status,
            optional(&r.measured),
            optional(&r.bound)
        )?;
    }
    Ok(())
}

pub fn write_text(report: &SuiteReport, out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "suite {} at {} digits", report.suite, report.precision)?;
    let width = report
        .results
        .iter()
        .map(|r| r.check_id.len())
        .max()
        .unwrap_or(0);
    for r in &report.results {
        writeln!(
            out,
            "{:<7} {:<width$}  {}",
            r.status.name().to_uppercase(),
            r.check_id,
            r.detail
        )?;
        if let (Some(m), Some(b)) = (&r.measured, &r.bound) {
            writeln!(out, "        {:<width$}  measured {m}, bound {b}", "")?;
        }
    }
    let c = report.counts();
    writeln!(
        out,
        "{} passed, {} failed, {} skipped in {:.3}s",
        c.pass,
        c.fail,
        c.skipped,
        report.duration.as_secs_f64()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{CheckResult, CheckStatus, Suite};
    use std::time::Duration;
    use wallis_core::PrecisionReal;

    fn sample() -> SuiteReport {
        SuiteReport {
            suite: Suite::Zeta,
            precision: 10,
            results: vec![
                CheckResult {
                    check_id: "a".into(),
                    status: CheckStatus::Pass,
                    detail: "fine".into(),
                    measured: Some(PrecisionReal::parse("1.5e-13", 3).unwrap()),
                    bound: Some(PrecisionReal::parse("2e-12", 3).unwrap()),
                },
                CheckResult {
                    check_id: "b".into(),
                    status: CheckStatus::Skipped,
                    detail: "needs more digits".into(),
                    measured: None,
                    bound: None,
                },
            ],
            duration: Duration::from_millis(5),
        }
    }

    #[test]
    fn tsv_layout() {
        let mut buf = Vec::new();
        write_tsv(&sample(), &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "a\tpass\t1.50e-13\t2.00e-12\nb\tskipped\t-\t-\n"
        );
    }

    #[test]
    fn text_has_summary() {
        let mut buf = Vec::new();
        write_text(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("suite zeta at 10 digits\n"));
        assert!(text.contains("PASS    a  fine"));
        assert!(text.contains("1 passed, 0 failed, 1 skipped"));
    }
}
