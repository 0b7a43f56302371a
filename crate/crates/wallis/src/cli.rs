// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. Exit codes: 0 success, 1 check or IO failure,
//! 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};

use wallis_core::numkit::MAX_REFERENCE_DIGITS;
use wallis_core::pi_series::{
    buffon_estimate, gregory_leibniz, log_pi_over_2_bernoulli, log_pi_over_2_zeta,
    student_t_limit_pi, wallis_estimate, BuffonConfig, BUFFON_RNG,
};
use wallis_core::{ErrorBoundedValue, MethodId, DEFAULT_DIGITS};

use crate::report::{write_text, write_tsv};
use crate::table::{convergence_table, term_cap, write_csv, TableError};
use crate::verify::{run_suite, Suite, SuiteParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Seed and geometry used by `compute buffon-mc`.
const COMPUTE_BUFFON_SEED: u64 = 42;

fn method_parser() -> impl TypedValueParser<Value = MethodId> {
    PossibleValuesParser::new(MethodId::COMMAND_LINE.map(MethodId::name))
        .map(|s| s.parse::<MethodId>().expect("listed names parse"))
}

fn suite_parser() -> impl TypedValueParser<Value = Suite> {
    PossibleValuesParser::new(Suite::ALL.map(Suite::name))
        .map(|s| s.parse::<Suite>().expect("listed names parse"))
}

#[derive(Debug, Parser)]
#[command(
    name = "wallis",
    version,
    about = "Estimates of pi and log(pi/2) with rigorous error bounds, convergence tables and identity checks"
)]
struct Cli {
    /// Significant decimal digits for all printed values.
    #[arg(
        long,
        global = true,
        env = "WALLIS_PRECISION",
        default_value_t = DEFAULT_DIGITS,
        value_parser = clap::value_parser!(u32).range(1..=i64::from(MAX_REFERENCE_DIGITS))
    )]
    precision: u32,

    /// Tab-separated output.
    #[arg(long, global = true)]
    tsv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one estimate with its error bound.
    Compute {
        #[arg(value_parser = method_parser())]
        method: MethodId,
        /// Terms (products, series) or throws (buffon-mc, with l = d = 1
        /// and seed 42).
        #[arg(long)]
        terms: u64,
    },
    /// Write a convergence table as CSV.
    Table {
        #[arg(value_parser = method_parser())]
        method: MethodId,
        #[arg(long)]
        max_terms: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = suite_parser())]
        suite: Suite,
    },
    /// Simulate Buffon's needle.
    Buffon {
        #[arg(long)]
        needle: f64,
        #[arg(long)]
        gap: f64,
        #[arg(long, default_value_t = 1_000_000)]
        throws: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn usage_error(err: &mut impl Write, message: impl std::fmt::Display) -> i32 {
    let rendered = Cli::command()
        .error(ErrorKind::ValueValidation, message)
        .render()
        .to_string();
    let _ = write!(err, "{rendered}");
    EXIT_USAGE
}

fn io_failure(err: &mut impl Write, e: io::Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_FAILURE
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let digits = cli.precision;
    match cli.command {
        Command::Compute { method, terms } => compute(method, terms, digits, cli.tsv, out, err),
        Command::Table {
            method,
            max_terms,
            step,
            out: path,
        } => table(method, max_terms, step, digits, path, out, err),
        Command::Verify { suite } => verify(suite, digits, cli.tsv, out, err),
        Command::Buffon {
            needle,
            gap,
            throws,
            seed,
        } => buffon(needle, gap, throws, seed, digits, cli.tsv, out, err),
    }
}

fn target(method: MethodId) -> &'static str {
    match method {
        MethodId::Wallis => "pi/2",
        MethodId::GregoryLeibniz => "pi/4",
        MethodId::LogPiZeta | MethodId::LogPiBernoulli => "log(pi/2)",
        _ => "pi",
    }
}

fn estimate(method: MethodId, terms: u64, digits: u32) -> Result<ErrorBoundedValue, String> {
    if let Some(cap) = term_cap(method) {
        if terms > cap {
            return Err(format!("{method} accepts at most {cap} terms"));
        }
    }
    let k = u32::try_from(terms).unwrap_or(u32::MAX);
    let value = match method {
        MethodId::Wallis => wallis_estimate(terms, digits),
        MethodId::GregoryLeibniz => gregory_leibniz(terms, digits),
        MethodId::LogPiZeta => log_pi_over_2_zeta(k, digits),
        MethodId::LogPiBernoulli => log_pi_over_2_bernoulli(k, digits),
        MethodId::StudentTLimit => student_t_limit_pi(terms, digits),
        MethodId::BuffonMC => BuffonConfig::new(1.0, 1.0, terms, COMPUTE_BUFFON_SEED)
            .and_then(|c| buffon_estimate(&c, digits))
            .map(|b| b.value),
        other => unreachable!("{other} is not offered on the command line"),
    };
    value.map_err(|e| e.to_string())
}

fn compute(
    method: MethodId,
    terms: u64,
    digits: u32,
    tsv: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let value = match estimate(method, terms, digits) {
        Ok(v) => v,
        Err(message) => return usage_error(err, message),
    };
    let written = if tsv {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            value.method, value.estimate, value.abs_error_bound, value.terms_used
        )
    } else {
        writeln!(
            out,
            "method:          {}\ntarget:          {}\nestimate:        {}\nabs_error_bound: {}\nterms_used:      {}",
            value.method,
            target(method),
            value.estimate,
            value.abs_error_bound,
            value.terms_used
        )
    };
    written.map_or_else(|e| io_failure(err, e), |_| EXIT_OK)
}

fn table(
    method: MethodId,
    max_terms: u64,
    step: u64,
    digits: u32,
    path: Option<PathBuf>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let rows = match convergence_table(method, max_terms, step, digits) {
        Ok(rows) => rows,
        Err(TableError::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILURE;
        }
        Err(e) => return usage_error(err, e),
    };
    let written = match path {
        Some(path) => File::create(&path)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                write_csv(&rows, &mut w)?;
                w.flush()
            })
            .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display()))),
        None => write_csv(&rows, out),
    };
    written.map_or_else(|e| io_failure(err, e), |_| EXIT_OK)
}

fn verify(suite: Suite, digits: u32, tsv: bool, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let report = run_suite(suite, &SuiteParams::with_precision(digits));
    let written = if tsv {
        write_tsv(&report, out)
    } else {
        write_text(&report, out)
    };
    if let Err(e) = written {
        return io_failure(err, e);
    }
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

#[allow(clippy::too_many_arguments)]
fn buffon(
    needle: f64,
    gap: f64,
    throws: u64,
    seed: u64,
    digits: u32,
    tsv: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let config = match BuffonConfig::new(needle, gap, throws, seed) {
        Ok(c) => c,
        Err(e) => return usage_error(err, e),
    };
    let result = match buffon_estimate(&config, digits) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    let v = &result.value;
    let written = if tsv {
        writeln!(
            out,
            "{}\t{}\t{}\t{}",
            v.estimate, v.abs_error_bound, result.crossings, throws
        )
    } else {
        writeln!(
            out,
            "estimate:     {}\nbound_3sigma: {}\ncrossings:    {}\nthrows:       {}\nrng:          {} seed {}",
            v.estimate, v.abs_error_bound, result.crossings, throws, BUFFON_RNG, seed
        )
    };
    written.map_or_else(|e| io_failure(err, e), |_| EXIT_OK)
}
