// SPDX-License-Identifier: Apache-2.0

//! Named cross-checks between the core modules, grouped into suites.
//!
//! Every check has an entry in [`CHECKS`] giving its suite, the precision it
//! needs and its tolerance. A check is reported as skipped, never passed,
//! when the working precision is below its requirement.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use wallis_core::bernoulli_zeta::{
    bernoulli_numbers, zeta_closed_form_coefficient, zeta_even_closed_form_with, zeta_even_direct,
    MAX_BERNOULLI_INDEX, MAX_CLOSED_FORM_K,
};
use wallis_core::gamma::{
    beta_trig_identity_error, cosine_moment_closed_form, cosine_moments, gamma_half_integer,
    gamma_numeric, lemma_check, recursion_holds, HalfInteger, BETA_TRIG_MAX,
};
use wallis_core::numkit::{pi_over_2, pi_over_4, Constant};
use wallis_core::pi_series::{
    gregory_leibniz, log_pi_bernoulli_terms, log_pi_over_2_zeta, log_pi_partial_sums,
    log_pi_zeta_terms, wallis_exact, wallis_identity_check, GregoryLeibnizPartials, WallisNumeric,
};
use wallis_core::student_t::{
    even_constant_squared_gamma_form, even_constant_squared_product_form, integrate_density,
    limit_study, normal_density, normalization_constant, within_limit_bound, StudentT,
    StudentTParams,
};
use wallis_core::{PrecisionReal, DEFAULT_DIGITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Gamma,
    Zeta,
    Student,
    Wallis,
    Logpi,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Gamma,
        Suite::Zeta,
        Suite::Student,
        Suite::Wallis,
        Suite::Logpi,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gamma => "gamma",
            Suite::Zeta => "zeta",
            Suite::Student => "student",
            Suite::Wallis => "wallis",
            Suite::Logpi => "logpi",
            Suite::All => "all",
        }
    }

    fn includes(self, group: Suite) -> bool {
        self == Suite::All || self == group
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite `{0}` (expected gamma, zeta, student, wallis, logpi or all)")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn name(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub check_id: String,
    pub status: CheckStatus,
    /// On failure this names both sides of the comparison that broke.
    pub detail: String,
    pub measured: Option<PrecisionReal>,
    pub bound: Option<PrecisionReal>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub precision: u32,
    pub results: Vec<CheckResult>,
    pub duration: Duration,
}

impl SuiteReport {
    pub fn counts(&self) -> StatusCounts {
        let mut counts = StatusCounts::default();
        for r in &self.results {
            match r.status {
                CheckStatus::Pass => counts.pass += 1,
                CheckStatus::Fail => counts.fail += 1,
                CheckStatus::Skipped => counts.skipped += 1,
            }
        }
        counts
    }

    pub fn all_passed(&self) -> bool {
        self.counts().fail == 0
    }

    pub fn get(&self, check_id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == check_id)
    }
}

/// Ranges swept by the checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    pub precision: u32,
    pub gamma_recursion_twice_max: u64,
    pub gamma_numeric_twice_max: u64,
    pub cosine_moment_max: u64,
    pub lemma_nu_max: u64,
    pub zeta_k_max: u32,
    pub density_nu_max: u64,
    pub limit_nu_max: u64,
    pub constant_bridge_m_max: u64,
    pub wallis_identity_m_max: u64,
    pub wallis_bracket_m_max: u64,
    pub gregory_bracket_n_max: u64,
    pub gregory_far_n: u64,
    pub logpi_k_max: u32,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            precision: DEFAULT_DIGITS,
            gamma_recursion_twice_max: 200,
            gamma_numeric_twice_max: 100,
            cosine_moment_max: 400,
            lemma_nu_max: 200,
            zeta_k_max: 10,
            density_nu_max: 100,
            limit_nu_max: 1000,
            constant_bridge_m_max: 200,
            wallis_identity_m_max: 200,
            wallis_bracket_m_max: 10_000,
            gregory_bracket_n_max: 100_000,
            gregory_far_n: 1_000_000,
            logpi_k_max: 40,
        }
    }
}

impl SuiteParams {
    pub fn with_precision(precision: u32) -> Self {
        Self {
            precision,
            ..Self::default()
        }
    }
}

/// One row of the check configuration table.
#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub suite: Suite,
    /// Working precision below which the check is skipped.
    pub required_digits: u32,
    /// Decimal tolerance; `None` for exact checks.
    pub tolerance: Option<&'static str>,
}

const fn check_entry(
    id: &'static str,
    suite: Suite,
    required_digits: u32,
    tolerance: Option<&'static str>,
) -> CheckSpec {
    CheckSpec {
        id,
        suite,
        required_digits,
        tolerance,
    }
}

/// All checks, sorted by id.
pub const CHECKS: &[CheckSpec] = &[
    check_entry("gamma_beta_identities", Suite::Gamma, 13, Some("1e-10")),
    check_entry("gamma_cosine_moments", Suite::Gamma, 1, None),
    check_entry("gamma_lemma", Suite::Gamma, 1, None),
    check_entry("gamma_numeric", Suite::Gamma, 15, Some("1e-12")),
    check_entry("gamma_recursion", Suite::Gamma, 1, None),
    check_entry("gregory_leibniz_bracket", Suite::Wallis, 10, Some("1e-6")),
    check_entry("logpi_digit_rate", Suite::Logpi, 32, None),
    check_entry("logpi_dual_form", Suite::Logpi, 43, Some("1e-40")),
    check_entry("logpi_reference", Suite::Logpi, 15, Some("2e-12")),
    check_entry("student_constant_bridge", Suite::Student, 1, None),
    check_entry("student_limit_bound", Suite::Student, 10, None),
    check_entry("student_normalization", Suite::Student, 13, Some("1e-10")),
    check_entry("student_pointwise_limit", Suite::Student, 10, Some("1e-3")),
    check_entry("wallis_bracket", Suite::Wallis, 12, Some("5e-5")),
    check_entry("wallis_identity", Suite::Wallis, 1, None),
    check_entry("zeta_bernoulli_parity", Suite::Zeta, 1, None),
    check_entry("zeta_bounds", Suite::Zeta, 10, None),
    check_entry("zeta_coefficients", Suite::Zeta, 1, None),
    check_entry("zeta_direct_vs_closed", Suite::Zeta, 15, Some("2e-12")),
    check_entry("zeta_two_reference", Suite::Zeta, 15, Some("2e-12")),
];

pub fn check_spec(id: &str) -> Option<&'static CheckSpec> {
    CHECKS.iter().find(|c| c.id == id)
}

struct Outcome {
    passed: bool,
    detail: String,
    measured: Option<PrecisionReal>,
    bound: Option<PrecisionReal>,
}

impl Outcome {
    fn exact(passed: bool, detail: String) -> Self {
        Self {
            passed,
            detail,
            measured: None,
            bound: None,
        }
    }

    fn measured(
        passed: bool,
        detail: String,
        measured: PrecisionReal,
        bound: PrecisionReal,
    ) -> Self {
        Self {
            passed,
            detail,
            measured: Some(measured),
            bound: Some(bound),
        }
    }

    fn error(err: impl fmt::Display) -> Self {
        Self::exact(false, format!("error: {err}"))
    }
}

fn tolerance(spec: &CheckSpec, digits: u32) -> PrecisionReal {
    PrecisionReal::parse(spec.tolerance.expect("check has a tolerance"), digits)
        .expect("tolerances in the table parse")
}

fn run_check(spec: &CheckSpec, p: &SuiteParams) -> Outcome {
    let d = p.precision;
    let result = match spec.id {
        "gamma_beta_identities" => gamma_beta_identities(spec),
        "gamma_cosine_moments" => Ok(gamma_cosine_moments(p)),
        "gamma_lemma" => gamma_lemma(p),
        "gamma_numeric" => gamma_numeric_check(spec, p),
        "gamma_recursion" => Ok(gamma_recursion(p)),
        "gregory_leibniz_bracket" => gregory_bracket(spec, p),
        "logpi_digit_rate" => logpi_digit_rate(p),
        "logpi_dual_form" => logpi_dual_form(spec, p),
        "logpi_reference" => logpi_reference(spec, d),
        "student_constant_bridge" => Ok(student_constant_bridge(p)),
        "student_limit_bound" => student_limit_bound(p),
        "student_normalization" => student_normalization(spec, p),
        "student_pointwise_limit" => student_pointwise_limit(spec, p),
        "wallis_bracket" => Ok(wallis_bracket(spec, p)),
        "wallis_identity" => wallis_identity(p),
        "zeta_bernoulli_parity" => zeta_bernoulli_parity(),
        "zeta_bounds" => zeta_bounds(p),
        "zeta_coefficients" => zeta_coefficients(),
        "zeta_direct_vs_closed" => zeta_direct_vs_closed(spec, p),
        "zeta_two_reference" => zeta_two_reference(spec, d),
        other => unreachable!("no runner for check {other}"),
    };
    result.unwrap_or_else(Outcome::error)
}

type CheckResultOf = Result<Outcome, wallis_core::Error>;

/// Runs every check of `suite` in id order.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> SuiteReport {
    let start = Instant::now();
    let mut results: Vec<CheckResult> = CHECKS
        .iter()
        .filter(|spec| suite.includes(spec.suite))
        .map(|spec| {
            if params.precision < spec.required_digits {
                return CheckResult {
                    check_id: spec.id.to_string(),
                    status: CheckStatus::Skipped,
                    detail: format!(
                        "needs precision >= {}, running at {}",
                        spec.required_digits, params.precision
                    ),
                    measured: None,
                    bound: None,
                };
            }
            let outcome = run_check(spec, params);
            CheckResult {
                check_id: spec.id.to_string(),
                status: if outcome.passed {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                detail: outcome.detail,
                measured: outcome.measured,
                bound: outcome.bound,
            }
        })
        .collect();
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    SuiteReport {
        suite,
        precision: params.precision,
        results,
        duration: start.elapsed(),
    }
}

fn half(twice: u64) -> HalfInteger {
    HalfInteger::new(twice).expect("twice_value >= 1")
}

fn gamma_recursion(p: &SuiteParams) -> Outcome {
    let n = p.gamma_recursion_twice_max;
    match (1..=n).find(|&t| !recursion_holds(half(t))) {
        None => Outcome::exact(
            true,
            format!("gamma(x+1) = x gamma(x) for x = 1/2..{}/2 exact", n),
        ),
        Some(t) => {
            let x = half(t);
            Outcome::exact(
                false,
                format!(
                    "x = {t}/2: gamma(x+1) = {:?} vs x gamma(x) = {:?}",
                    gamma_half_integer(x.succ()),
                    gamma_half_integer(x).scale(&x.value())
                ),
            )
        }
    }
}

fn gamma_lemma(p: &SuiteParams) -> CheckResultOf {
    for nu in 1..=p.lemma_nu_max {
        if !lemma_check(nu)? {
            return Ok(Outcome::exact(
                false,
                format!("nu = {nu}: squared sides of the cosine-moment lemma differ"),
            ));
        }
    }
    Ok(Outcome::exact(
        true,
        format!("lemma_check nu=1..{} exact", p.lemma_nu_max),
    ))
}

fn gamma_cosine_moments(p: &SuiteParams) -> Outcome {
    let moments = cosine_moments(p.cosine_moment_max);
    for m in &moments {
        let closed = cosine_moment_closed_form(m.exponent);
        if *m != closed {
            return Outcome::exact(
                false,
                format!(
                    "n = {}: recursion {:?} vs closed form {:?}",
                    m.exponent, m, closed
                ),
            );
        }
    }
    for pair in moments.windows(3) {
        if pair[2].rational_part >= pair[0].rational_part {
            return Outcome::exact(
                false,
                format!(
                    "n = {}: rational part {} not below {}",
                    pair[2].exponent, pair[2].rational_part, pair[0].rational_part
                ),
            );
        }
    }
    Outcome::exact(
        true,
        format!(
            "cosine moments n=0..{} match closed form, decreasing by parity",
            p.cosine_moment_max
        ),
    )
}

fn gamma_beta_identities(spec: &CheckSpec) -> CheckResultOf {
    let tol = tolerance(spec, 20).to_f64();
    let mut worst = (0.0f64, 0, 0);
    for m in 0..=BETA_TRIG_MAX {
        for n in 0..=BETA_TRIG_MAX {
            let err = beta_trig_identity_error(m, n)?;
            if err > worst.0 {
                worst = (err, m, n);
            }
        }
    }
    let (err, m, n) = worst;
    let detail = format!(
        "max |B(m+1,n+1) - 2 int cos^(2m+1) sin^(2n+1)| = {err:e} at (m, n) = ({m}, {n}); tolerance {tol:e}"
    );
    Ok(Outcome::measured(
        err <= tol,
        detail,
        PrecisionReal::from_f64(err, 17),
        tolerance(spec, 17),
    ))
}

fn gamma_numeric_check(spec: &CheckSpec, p: &SuiteParams) -> CheckResultOf {
    let d = p.precision;
    let tol = tolerance(spec, d);
    let mut worst = (PrecisionReal::zero(d), 1);
    for twice in 1..=p.gamma_numeric_twice_max {
        let x = half(twice);
        let exact = gamma_half_integer(x).to_real(d + 5);
        let arg = PrecisionReal::from_rational(&x.value(), d + 5);
        let numeric = gamma_numeric(&arg)?.with_digits(d + 5);
        let rel = ((&numeric - &exact).abs().checked_div(&exact)?).with_digits(d);
        if rel > worst.0 {
            worst = (rel, twice);
        }
    }
    let (rel, twice) = worst;
    let passed = rel <= tol;
    Ok(Outcome::measured(
        passed,
        format!("max relative error {rel} at x = {twice}/2 vs exact half-integer values; tolerance {tol}"),
        rel,
        tol,
    ))
}

fn zeta_coefficients() -> CheckResultOf {
    let table = bernoulli_numbers(2 * MAX_CLOSED_FORM_K as usize)?;
    let c1 = zeta_closed_form_coefficient(&table, 1)?;
    let c2 = zeta_closed_form_coefficient(&table, 2)?;
    let sixth = BigRational::new(1.into(), 6.into());
    let ninetieth = BigRational::new(1.into(), 90.into());
    if c1 != sixth || c2 != ninetieth {
        return Ok(Outcome::exact(
            false,
            format!("coefficients {c1} (want 1/6) and {c2} (want 1/90)"),
        ));
    }
    for k in 1..=MAX_CLOSED_FORM_K {
        let c = zeta_closed_form_coefficient(&table, k)?;
        if !c.is_positive() {
            return Ok(Outcome::exact(
                false,
                format!("k = {k}: coefficient {c} is not positive"),
            ));
        }
    }
    Ok(Outcome::exact(
        true,
        format!("coefficients 1/6, 1/90 exact; positive for k=1..{MAX_CLOSED_FORM_K}"),
    ))
}

fn zeta_bernoulli_parity() -> CheckResultOf {
    let table = bernoulli_numbers(MAX_BERNOULLI_INDEX)?;
    let b = table.values();
    if b[0] != BigRational::one() || b[1] != BigRational::new((-1).into(), 2.into()) {
        return Ok(Outcome::exact(
            false,
            format!("B_0 = {}, B_1 = {} (want 1, -1/2)", b[0], b[1]),
        ));
    }
    for k in (3..=MAX_BERNOULLI_INDEX).step_by(2) {
        if !b[k].is_zero() {
            return Ok(Outcome::exact(false, format!("B_{k} = {} (want 0)", b[k])));
        }
    }
    for k in (2..MAX_BERNOULLI_INDEX - 1).step_by(2) {
        if b[k].is_positive() == b[k + 2].is_positive() {
            return Ok(Outcome::exact(
                false,
                format!(
                    "B_{k} = {} and B_{} = {} share a sign",
                    b[k],
                    k + 2,
                    b[k + 2]
                ),
            ));
        }
    }
    Ok(Outcome::exact(
        true,
        format!("B_0..B_{MAX_BERNOULLI_INDEX}: odd indices >= 3 vanish, even signs alternate"),
    ))
}

fn zeta_bounds(p: &SuiteParams) -> CheckResultOf {
    let d = p.precision;
    let table = bernoulli_numbers(2 * p.zeta_k_max as usize)?;
    let one = PrecisionReal::one(d);
    let two = PrecisionReal::from_int(2, d);
    let mut previous: Option<PrecisionReal> = None;
    for k in 1..=p.zeta_k_max {
        let z = zeta_even_closed_form_with(&table, k, d)?.value.estimate;
        if z <= one || z > two {
            return Ok(Outcome::exact(
                false,
                format!("zeta({}) = {z} outside (1, 2]", 2 * k),
            ));
        }
        if let Some(prev) = &previous {
            if z >= *prev {
                return Ok(Outcome::exact(
                    false,
                    format!(
                        "zeta({}) = {z} not below zeta({}) = {prev}",
                        2 * k,
                        2 * k - 2
                    ),
                ));
            }
        }
        previous = Some(z);
    }
    Ok(Outcome::exact(
        true,
        format!(
            "1 < zeta(2k) <= 2, strictly decreasing, k=1..{}",
            p.zeta_k_max
        ),
    ))
}

fn zeta_direct_vs_closed(spec: &CheckSpec, p: &SuiteParams) -> CheckResultOf {
    let d = p.precision;
    let tol = tolerance(spec, d);
    let direct_tol = PrecisionReal::parse("1e-12", d).expect("valid literal");
    let table = bernoulli_numbers(2 * p.zeta_k_max as usize)?;
    let mut worst = (PrecisionReal::zero(d), 1, String::new());
    for k in 1..=p.zeta_k_max {
        let direct = zeta_even_direct(k, &direct_tol)?.value.estimate;
        let closed = zeta_even_closed_form_with(&table, k, d)?.value.estimate;
        let diff = (&direct - &closed).abs();
        if diff > worst.0 || k == 1 {
            worst = (diff, k, format!("direct {direct} vs closed form {closed}"));
        }
    }
    let (diff, k, sides) = worst;
    Ok(Outcome::measured(
        diff <= tol,
        format!(
            "k=1..{}: max |direct - closed| = {diff} at k = {k} ({sides})",
            p.zeta_k_max
        ),
        diff,
        tol,
    ))
}

fn zeta_two_reference(spec: &CheckSpec, d: u32) -> CheckResultOf {
    let tol = tolerance(spec, d);
    let direct_tol = PrecisionReal::parse("1e-12", d).expect("valid literal");
    let direct = zeta_even_direct(1, &direct_tol)?.value.estimate;
    let reference = Constant::Pi.value(d + 5).powi(2).div_int(6).with_digits(d);
    let diff = (&direct - &reference).abs();
    Ok(Outcome::measured(
        diff <= tol,
        format!("zeta(2) direct {direct} vs pi^2/6 {reference}"),
        diff,
        tol,
    ))
}

fn student_constant_bridge(p: &SuiteParams) -> Outcome {
    let d = p.precision;
    for m in 1..=p.constant_bridge_m_max {
        let c = normalization_constant(StudentTParams::new(2 * m).expect("nu >= 2"), d);
        let Some(exact) = c.exact_squared.clone() else {
            return Outcome::exact(false, format!("nu = {}: no rational square", 2 * m));
        };
        let product = even_constant_squared_product_form(m);
        let gamma = even_constant_squared_gamma_form(m);
        if exact != product || exact != gamma {
            return Outcome::exact(
                false,
                format!("m = {m}: c^2 = {exact}, product form {product}, gamma form {gamma}"),
            );
        }
        let exact_real = PrecisionReal::from_rational(&exact, d);
        let squared = &c.numeric * &c.numeric;
        if (&squared - &exact_real).abs() > exact_real.ulp().mul_int(4) {
            return Outcome::exact(
                false,
                format!("m = {m}: numeric^2 = {squared} vs exact {exact_real}"),
            );
        }
    }
    Outcome::exact(
        true,
        format!(
            "c_2m^2 rational, product and gamma forms equal, m=1..{}",
            p.constant_bridge_m_max
        ),
    )
}

fn student_normalization(spec: &CheckSpec, p: &SuiteParams) -> CheckResultOf {
    let tol = tolerance(spec, 17);
    let quad_tol = PrecisionReal::parse("1e-12", 17).expect("valid literal");
    let one = PrecisionReal::one(17);
    let mut worst = (PrecisionReal::zero(17), 1, PrecisionReal::one(17));
    for nu in 1..=p.density_nu_max {
        let v = integrate_density(StudentTParams::new(nu)?, &quad_tol)?;
        let gap = (&v.estimate - &one).abs();
        if gap > worst.0 || nu == 1 {
            worst = (gap, nu, v.estimate);
        }
    }
    let (gap, nu, value) = worst;
    Ok(Outcome::measured(
        gap <= tol,
        format!(
            "nu=1..{}: worst integral {value} vs 1 at nu = {nu}",
            p.density_nu_max
        ),
        gap,
        tol,
    ))
}

fn student_limit_bound(p: &SuiteParams) -> CheckResultOf {
    let rows = limit_study(p.limit_nu_max, p.precision)?;
    for pair in rows[1..].windows(2) {
        if pair[1].scaled_constant <= pair[0].scaled_constant {
            return Ok(Outcome::exact(
                false,
                format!(
                    "c sqrt(2 pi) at nu = {} is {} vs {} at nu = {}",
                    pair[1].nu, pair[1].scaled_constant, pair[0].scaled_constant, pair[0].nu
                ),
            ));
        }
    }
    for row in rows.iter().filter(|r| r.nu >= 10) {
        if !within_limit_bound(row) {
            return Ok(Outcome::exact(
                false,
                format!(
                    "nu = {}: |{} - 1| exceeds 1/(2 nu)",
                    row.nu, row.scaled_constant
                ),
            ));
        }
    }
    Ok(Outcome::exact(
        true,
        format!(
            "c sqrt(2 pi) increasing on nu=2..{n} and within 1/(2 nu) of 1 on nu=10..{n}",
            n = p.limit_nu_max
        ),
    ))
}

fn student_pointwise_limit(spec: &CheckSpec, p: &SuiteParams) -> CheckResultOf {
    let d = p.precision;
    let tol = tolerance(spec, d);
    let rows = limit_study(p.limit_nu_max, d)?;
    let last = rows.last().expect("nu_max >= 2");
    let sup = PrecisionReal::from_f64(last.sup_distance, 17).with_digits(d);
    if sup >= tol {
        return Ok(Outcome::measured(
            false,
            format!("nu = {}: sup |f - phi| = {sup} vs {tol}", last.nu),
            sup,
            tol,
        ));
    }
    let mut nus: Vec<u64> = (10..=200).collect();
    nus.extend([500, 1000, 10_000]);
    let pointwise_tol = PrecisionReal::parse("1e-4", d).expect("valid literal");
    for t in [0u32, 1, 2] {
        let t = PrecisionReal::from_int(t, d);
        let phi = normal_density(&t);
        let mut previous: Option<PrecisionReal> = None;
        for &nu in &nus {
            let f = StudentT::new(StudentTParams::new(nu)?, d).density(&t);
            let gap = (&f - &phi).abs();
            if let Some(prev) = &previous {
                if gap >= *prev {
                    return Ok(Outcome::exact(
                        false,
                        format!("t = {t}, nu = {nu}: |f - phi| = {gap} not below {prev}"),
                    ));
                }
            }
            previous = Some(gap);
        }
        let gap = previous.expect("nonempty");
        if gap >= pointwise_tol {
            return Ok(Outcome::exact(
                false,
                format!("t = {t}, nu = 10000: |f - phi| = {gap} vs {pointwise_tol}"),
            ));
        }
    }
    Ok(Outcome::measured(
        true,
        format!(
            "sup |f - phi| at nu = {} below {tol}; |f - phi| decreasing at t = 0, 1, 2",
            last.nu
        ),
        sup,
        tol,
    ))
}

fn wallis_identity(p: &SuiteParams) -> CheckResultOf {
    let n = p.wallis_identity_m_max;
    for m in 1..=n {
        if !wallis_identity_check(m)? {
            let product = wallis_exact(m)?;
            let c2 = even_constant_squared_gamma_form(m);
            let rhs = BigRational::new(BigInt::from(m), BigInt::from(4 * m + 2)) / &c2;
            return Ok(Outcome::exact(
                false,
                format!("m = {m}: P_m = {product} vs m/((4m+2) c^2) = {rhs}"),
            ));
        }
    }
    Ok(Outcome::exact(
        true,
        format!("wallis_identity m=1..{n} exact"),
    ))
}

fn wallis_bracket(spec: &CheckSpec, p: &SuiteParams) -> Outcome {
    let d = p.precision;
    let tol = tolerance(spec, d);
    let half_pi = pi_over_2(d);
    let mut previous: Option<PrecisionReal> = None;
    let mut last = PrecisionReal::zero(d);
    for (m, value) in WallisNumeric::new(d).take(p.wallis_bracket_m_max as usize) {
        if value >= half_pi {
            return Outcome::exact(false, format!("m = {m}: P_m = {value} vs pi/2 = {half_pi}"));
        }
        if let Some(prev) = &previous {
            if value <= *prev {
                return Outcome::exact(
                    false,
                    format!("m = {m}: P_m = {value} not above P_(m-1) = {prev}"),
                );
            }
        }
        previous = Some(value.clone());
        last = value;
    }
    let gap = (&half_pi - &last).abs();
    Outcome::measured(
        gap < tol,
        format!(
            "P_m increasing below pi/2 for m=1..{n}; P_{n} = {last} vs pi/2 = {half_pi}",
            n = p.wallis_bracket_m_max
        ),
        gap,
        tol,
    )
}

fn gregory_bracket(spec: &CheckSpec, p: &SuiteParams) -> CheckResultOf {
    let d = p.precision;
    let tol = tolerance(spec, d);
    let quarter = pi_over_4(d);
    let mut previous: Option<PrecisionReal> = None;
    let limit = p.gregory_bracket_n_max;
    for (n, s) in GregoryLeibnizPartials::new(d, limit).take(limit as usize + 1) {
        if (s > quarter) != (n % 2 == 0) {
            return Ok(Outcome::exact(
                false,
                format!("N = {n}: S_N = {s} on the wrong side of pi/4 = {quarter}"),
            ));
        }
        if let Some(prev) = &previous {
            let (lo, hi) = if prev < &s { (prev, &s) } else { (&s, prev) };
            if !(lo < &quarter && &quarter < hi) {
                return Ok(Outcome::exact(
                    false,
                    format!("N = {n}: pi/4 = {quarter} not between {prev} and {s}"),
                ));
            }
        }
        previous = Some(s);
    }
    let far = gregory_leibniz(p.gregory_far_n, d)?.estimate;
    let gap = (&far - &quarter).abs();
    Ok(Outcome::measured(
        gap <= tol,
        format!(
            "partial sums bracket pi/4 for N=0..{limit}; S_{} = {far} vs pi/4 = {quarter}",
            p.gregory_far_n
        ),
        gap,
        tol,
    ))
}

fn logpi_reference(spec: &CheckSpec, d: u32) -> CheckResultOf {
    let tol = tolerance(spec, d);
    let reference = Constant::LogPiOver2.value(d);
    let v = log_pi_over_2_zeta(20, d)?;
    let gap = (&v.estimate - &reference).abs();
    Ok(Outcome::measured(
        gap <= tol && v.contains(&reference),
        format!(
            "S_20 = {} vs log(pi/2) = {reference}; stated bound {}",
            v.estimate, v.abs_error_bound
        ),
        gap,
        tol,
    ))
}

fn logpi_dual_form(spec: &CheckSpec, p: &SuiteParams) -> CheckResultOf {
    let d = p.precision;
    let tol = tolerance(spec, d);
    let zeta = log_pi_zeta_terms(p.logpi_k_max, d)?;
    let bern = log_pi_bernoulli_terms(p.logpi_k_max, d)?;
    let mut worst = (PrecisionReal::zero(d), 1usize);
    for (k, (a, b)) in zeta.iter().zip(&bern).enumerate() {
        let diff = (a - b).abs();
        if diff > worst.0 {
            worst = (diff, k + 1);
        }
    }
    let (diff, k) = worst;
    let detail = format!(
        "k=1..{}: max |zeta term - Bernoulli term| = {diff} at k = {k} ({} vs {})",
        p.logpi_k_max,
        zeta[k - 1],
        bern[k - 1]
    );
    Ok(Outcome::measured(diff <= tol, detail, diff, tol))
}

fn logpi_digit_rate(p: &SuiteParams) -> CheckResultOf {
    let d = p.precision;
    let reference = Constant::LogPiOver2.value(d);
    let sums = log_pi_partial_sums(p.logpi_k_max + 1, d)?;
    let mut worst_ratio = PrecisionReal::zero(d);
    for k in 2..=p.logpi_k_max as usize {
        let before = (&sums[k - 1] - &reference).abs();
        let after = (&sums[k] - &reference).abs();
        if after.mul_int(4) > before {
            return Ok(Outcome::exact(
                false,
                format!(
                    "K = {k}: |S_(K+1) - L| = {after} vs |S_K - L|/4 = {}",
                    before.div_int(4)
                ),
            ));
        }
        let ratio = after.checked_div(&before)?;
        if ratio > worst_ratio {
            worst_ratio = ratio;
        }
    }
    let quarter = PrecisionReal::one(d).div_int(4);
    Ok(Outcome::measured(
        true,
        format!(
            "|S_(K+1) - L| <= |S_K - L|/4 for K=2..{}; worst ratio {worst_ratio}",
            p.logpi_k_max
        ),
        worst_ratio,
        quarter,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_sorted_and_unique() {
        for pair in CHECKS.windows(2) {
            assert!(
                pair[0].id < pair[1].id,
                "{} before {}",
                pair[0].id,
                pair[1].id
            );
        }
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>(), Ok(suite));
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn wallis_suite_passes() {
        let report = run_suite(Suite::Wallis, &SuiteParams::default());
        assert!(report.all_passed(), "{report:#?}");
        let identity = report.get("wallis_identity").unwrap();
        assert!(identity.detail.contains("wallis_identity m=1..200 exact"));
    }

    #[test]
    fn low_precision_skips_tight_checks() {
        let report = run_suite(Suite::Zeta, &SuiteParams::with_precision(10));
        assert_eq!(
            report.get("zeta_direct_vs_closed").unwrap().status,
            CheckStatus::Skipped
        );
        assert_eq!(
            report.get("zeta_two_reference").unwrap().status,
            CheckStatus::Skipped
        );
        assert_eq!(
            report.get("zeta_coefficients").unwrap().status,
            CheckStatus::Pass
        );
        let c = report.counts();
        assert_eq!(c.pass + c.fail + c.skipped, report.results.len());
    }
}
