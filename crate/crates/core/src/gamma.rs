// SPDX-License-Identifier: Apache-2.0

//! Gamma and Beta functions.
//!
//! At integer and half-integer arguments everything is exact: values are a
//! rational times a power of `sqrt(pi)`. The cosine-power integrals
//! `I_n = int_0^{pi/2} cos^n`, built from `I_{n+1} = n/(n+1) I_{n-1}`, are
//! exact in the same way, which lets the normalization lemma for the
//! Student-t density be checked with no tolerance at all.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::numkit::{double_factorial, factorial, rational, BigRational, Constant, PrecisionReal};
use crate::quadrature;
use crate::{Error, Result};

/// A positive multiple of one half, `twice_value / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInteger {
    twice_value: u64,
}

impl HalfInteger {
    pub fn new(twice_value: u64) -> Result<Self> {
        if twice_value == 0 {
            return Err(Error::invalid("half-integer arguments must be positive"));
        }
        Ok(Self { twice_value })
    }

    pub fn from_integer(n: u64) -> Result<Self> {
        Self::new(2 * n)
    }

    pub fn twice_value(self) -> u64 {
        self.twice_value
    }

    pub fn is_integer(self) -> bool {
        self.twice_value.is_multiple_of(2)
    }

    pub fn value(self) -> BigRational {
        rational(self.twice_value, 2)
    }

    /// `x + 1`.
    pub fn succ(self) -> Self {
        Self {
            twice_value: self.twice_value + 2,
        }
    }
}

impl core::ops::Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger {
            twice_value: self.twice_value + rhs.twice_value,
        }
    }
}

/// `rational_part * sqrt(pi)^sqrt_pi_power`, with the power 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactGammaValue {
    pub rational_part: BigRational,
    pub sqrt_pi_power: u8,
}

impl ExactGammaValue {
    pub fn to_real(&self, digits: u32) -> PrecisionReal {
        let r = PrecisionReal::from_rational(&self.rational_part, digits + 5);
        let v = if self.sqrt_pi_power == 1 {
            r * Constant::SqrtPi.value(digits + 5)
        } else {
            r
        };
        v.with_digits(digits)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            rational_part: &self.rational_part * factor,
            sqrt_pi_power: self.sqrt_pi_power,
        }
    }
}

/// Exact `Gamma(x)`: `(n-1)!` for integers, `(2m-1)!! sqrt(pi) / 2^m` at
/// `x = m + 1/2`.
pub fn gamma_half_integer(x: HalfInteger) -> ExactGammaValue {
    if x.is_integer() {
        let n = x.twice_value / 2;
        ExactGammaValue {
            rational_part: BigRational::from_integer(factorial(n - 1).into()),
            sqrt_pi_power: 0,
        }
    } else {
        let m = (x.twice_value - 1) / 2;
        let numer: BigInt = double_factorial(2 * m as i64 - 1).into();
        let denom = BigInt::one() << m;
        ExactGammaValue {
            rational_part: BigRational::new(numer, denom),
            sqrt_pi_power: 1,
        }
    }
}

/// `rational_part * pi^pi_power`, with the power 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactBetaValue {
    pub rational_part: BigRational,
    pub pi_power: u8,
}

impl ExactBetaValue {
    pub fn to_real(&self, digits: u32) -> PrecisionReal {
        let r = PrecisionReal::from_rational(&self.rational_part, digits + 5);
        let v = if self.pi_power == 1 {
            r * Constant::Pi.value(digits + 5)
        } else {
            r
        };
        v.with_digits(digits)
    }
}

/// `B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q)`; the two `sqrt(pi)` factors
/// either cancel or combine into one `pi`.
pub fn beta(p: HalfInteger, q: HalfInteger) -> ExactBetaValue {
    let gp = gamma_half_integer(p);
    let gq = gamma_half_integer(q);
    let gpq = gamma_half_integer(p + q);
    let power = gp.sqrt_pi_power + gq.sqrt_pi_power - gpq.sqrt_pi_power;
    debug_assert!(power.is_multiple_of(2));
    ExactBetaValue {
        rational_part: gp.rational_part * gq.rational_part / gpq.rational_part,
        pi_power: power / 2,
    }
}

/// Numeric Gamma at a fixed precision, for arbitrary positive arguments.
///
/// The argument is shifted into `[1, 2]` with `Gamma(x + 1) = x Gamma(x)`, and
/// `Gamma(1 + z)` for `z` in `[0, 1]` is evaluated with Spouge's
/// approximation. The parameter `a` is picked from the precision so the
/// approximation's relative error stays below `10^-(digits + 3)`; the
/// coefficients lose about `a` digits to cancellation, which the working
/// precision absorbs.
#[derive(Debug, Clone)]
pub struct GammaApproximation {
    digits: u32,
    work: u32,
    a: u64,
    coefficients: Vec<PrecisionReal>,
}

impl GammaApproximation {
    pub fn new(digits: u32) -> Self {
        // Spouge: relative error < a^(-1/2) (2 pi)^-(a + 1/2)
        let a = (((digits + 3) as f64) / libm::log10(core::f64::consts::TAU)) as u64 + 1;
        let work = digits + a as u32 + 12;
        let mut coefficients = Vec::with_capacity(a as usize);
        let mut k_fact = PrecisionReal::one(work);
        for k in 1..a {
            if k > 1 {
                k_fact = k_fact.mul_int(k - 1);
            }
            let base = PrecisionReal::from_int(a - k, work);
            let power = PrecisionReal::from_rational(&rational(2 * k as i64 - 1, 2), work);
            let exponent = &(&power * &base.ln().expect("a - k >= 1")) + &base;
            let mut c = exponent
                .exp()
                .checked_div(&k_fact)
                .expect("factorial is nonzero");
            if k % 2 == 0 {
                c = -c;
            }
            coefficients.push(c);
        }
        Self {
            digits,
            work,
            a,
            coefficients,
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn eval(&self, x: &PrecisionReal) -> Result<PrecisionReal> {
        if !x.is_positive() {
            return Err(Error::invalid("gamma_numeric needs x > 0"));
        }
        let work = self.work;
        let one = PrecisionReal::one(work);
        let two = PrecisionReal::from_int(2, work);
        let mut y = x.with_digits(work);
        let mut factor = PrecisionReal::one(work);
        while y > two {
            y = &y - &one;
            factor = &factor * &y;
        }
        while y < one {
            factor = factor.checked_div(&y)?;
            y = &y + &one;
        }
        let z = &y - &one;
        let mut series = PrecisionReal::zero(work);
        for (k, c) in self.coefficients.iter().enumerate() {
            let shifted = &z + &PrecisionReal::from_int(k as u64 + 1, work);
            series = &series + &c.checked_div(&shifted)?;
        }
        let series = &series + &Constant::Sqrt2Pi.value(work);
        let za = &z + &PrecisionReal::from_int(self.a, work);
        let half = PrecisionReal::from_rational(&rational(1, 2), work);
        let log_prefactor = &(&(&z + &half) * &za.ln()?) - &za;
        let value = &(&log_prefactor.exp() * &series) * &factor;
        Ok(value.with_digits(self.digits))
    }
}

/// `Gamma(x)` for real `x > 0` at the precision of `x`.
pub fn gamma_numeric(x: &PrecisionReal) -> Result<PrecisionReal> {
    GammaApproximation::new(x.digits()).eval(x)
}

/// `int_0^{pi/2} cos^exponent(theta) d theta = rational_part * pi^pi_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosineMoment {
    pub exponent: u64,
    pub rational_part: BigRational,
    pub pi_power: u8,
}

impl CosineMoment {
    pub fn to_real(&self, digits: u32) -> PrecisionReal {
        ExactBetaValue {
            rational_part: self.rational_part.clone(),
            pi_power: self.pi_power,
        }
        .to_real(digits)
    }
}

/// `I_0 ..= I_n_max` from `I_0 = pi/2`, `I_1 = 1` and
/// `I_k = (k - 1)/k * I_{k-2}`.
pub fn cosine_moments(n_max: u64) -> Vec<CosineMoment> {
    let mut out: Vec<CosineMoment> = Vec::with_capacity(n_max as usize + 1);
    for k in 0..=n_max {
        let moment = match k {
            0 => CosineMoment {
                exponent: 0,
                rational_part: rational(1, 2),
                pi_power: 1,
            },
            1 => CosineMoment {
                exponent: 1,
                rational_part: BigRational::one(),
                pi_power: 0,
            },
            _ => {
                let prev = &out[k as usize - 2];
                CosineMoment {
                    exponent: k,
                    rational_part: &prev.rational_part * rational(k - 1, k),
                    pi_power: prev.pi_power,
                }
            }
        };
        out.push(moment);
    }
    out
}

pub fn cosine_moment_recursive(n: u64) -> CosineMoment {
    cosine_moments(n).pop().expect("at least I_0")
}

/// `(n-1)!!/n!!`, times `pi/2` for even `n`.
pub fn cosine_moment_closed_form(n: u64) -> CosineMoment {
    let ratio = BigRational::new(
        double_factorial(n as i64 - 1).into(),
        double_factorial(n as i64).into(),
    );
    if n.is_multiple_of(2) {
        CosineMoment {
            exponent: n,
            rational_part: ratio * rational(1, 2),
            pi_power: 1,
        }
    } else {
        CosineMoment {
            exponent: n,
            rational_part: ratio,
            pi_power: 0,
        }
    }
}

/// Exact check of
/// `2 sqrt(nu) I_{nu-1} = sqrt(pi nu) Gamma(nu/2) / Gamma((nu+1)/2)`.
///
/// Both sides are positive, so comparing squares is equivalent; squared,
/// each side is a rational times an integer power of `pi`.
pub fn lemma_check(nu: u64) -> Result<bool> {
    if nu == 0 {
        return Err(Error::invalid("degrees of freedom must be at least 1"));
    }
    let moment = cosine_moment_recursive(nu - 1);
    let lhs_rational =
        BigRational::from_integer((4 * nu).into()) * &moment.rational_part * &moment.rational_part;
    let lhs_pi = 2 * i32::from(moment.pi_power);

    let g_half = gamma_half_integer(HalfInteger::new(nu)?);
    let g_succ = gamma_half_integer(HalfInteger::new(nu + 1)?);
    let ratio = &g_half.rational_part / &g_succ.rational_part;
    let rhs_rational = BigRational::from_integer(nu.into()) * &ratio * &ratio;
    let rhs_pi = 1 + i32::from(g_half.sqrt_pi_power) - i32::from(g_succ.sqrt_pi_power);

    Ok(moment.rational_part.is_positive()
        && ratio.is_positive()
        && lhs_rational == rhs_rational
        && lhs_pi == rhs_pi)
}

/// Largest `m` or `n` accepted by [`beta_trig_identity_check`].
pub const BETA_TRIG_MAX: u64 = 20;
/// Agreement required between quadrature and the exact Beta value.
pub const BETA_TRIG_TOLERANCE: f64 = 1e-10;

fn powu(x: f64, n: u64) -> f64 {
    let mut acc = 1.0;
    let mut base = x;
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    acc
}

/// `|2 int_0^{pi/2} cos^{2m+1} sin^{2n+1} - B(m+1, n+1)|`, the integral by
/// Gauss-Legendre quadrature.
pub fn beta_trig_identity_error(m: u64, n: u64) -> Result<f64> {
    if m > BETA_TRIG_MAX || n > BETA_TRIG_MAX {
        return Err(Error::invalid(format!(
            "beta identity check supports m, n <= {BETA_TRIG_MAX}"
        )));
    }
    let integral = quadrature::integrate(0.0, core::f64::consts::FRAC_PI_2, 1e-12, |theta| {
        2.0 * powu(libm::cos(theta), 2 * m + 1) * powu(libm::sin(theta), 2 * n + 1)
    })?;
    let exact = beta(
        HalfInteger::from_integer(m + 1)?,
        HalfInteger::from_integer(n + 1)?,
    );
    debug_assert_eq!(exact.pi_power, 0);
    let exact = exact.to_real(20).to_f64();
    Ok((integral.value - exact).abs())
}

pub fn beta_trig_identity_check(m: u64, n: u64) -> Result<bool> {
    Ok(beta_trig_identity_error(m, n)? <= BETA_TRIG_TOLERANCE)
}

/// Exact `Gamma(x + 1) = x Gamma(x)` at a half-integer.
pub fn recursion_holds(x: HalfInteger) -> bool {
    gamma_half_integer(x.succ()) == gamma_half_integer(x).scale(&x.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(twice: u64) -> HalfInteger {
        HalfInteger::new(twice).unwrap()
    }

    #[test]
    fn exact_gamma_examples() {
        assert_eq!(
            gamma_half_integer(half(1)),
            ExactGammaValue {
                rational_part: BigRational::one(),
                sqrt_pi_power: 1
            }
        );
        assert_eq!(
            gamma_half_integer(half(10)),
            ExactGammaValue {
                rational_part: BigRational::from_integer(24.into()),
                sqrt_pi_power: 0
            }
        );
        assert_eq!(
            gamma_half_integer(half(5)),
            ExactGammaValue {
                rational_part: rational(3, 4),
                sqrt_pi_power: 1
            }
        );
        assert!(HalfInteger::new(0).is_err());
    }

    #[test]
    fn recursion_is_exact() {
        for twice in 1..=200 {
            assert!(recursion_holds(half(twice)), "x = {twice}/2");
        }
    }

    #[test]
    fn numeric_gamma_examples() {
        let x = PrecisionReal::parse("0.5", 30).unwrap();
        assert_eq!(
            gamma_numeric(&x).unwrap().to_string(),
            Constant::SqrtPi.value(30).to_string()
        );
        let one = PrecisionReal::one(30);
        assert_eq!(gamma_numeric(&one).unwrap(), one);
        // (5/2)(3/2)(1/2) sqrt(pi)
        let x = PrecisionReal::parse("3.5", 20).unwrap();
        let got = gamma_numeric(&x).unwrap();
        assert!(got.to_string().starts_with("3.3233509704"), "{got}");
        assert!(gamma_numeric(&PrecisionReal::zero(10)).is_err());
        assert!(gamma_numeric(&PrecisionReal::parse("-1.5", 10).unwrap()).is_err());
    }

    #[test]
    fn numeric_gamma_at_general_points() {
        // Gamma(0.333333333333333333) = 2.6789385347077476364525...
        let x = PrecisionReal::from_rational(&rational(1, 3), 18);
        assert_eq!(
            gamma_numeric(&x).unwrap().to_string(),
            "2.67893853470774764"
        );
        // Gamma(10.25) = 639232.59877957679...
        let x = PrecisionReal::parse("10.25", 15).unwrap();
        assert_eq!(gamma_numeric(&x).unwrap().to_string(), "639232.598779577");
    }

    #[test]
    fn beta_examples() {
        let b = beta(half(1), half(1));
        assert_eq!((b.rational_part, b.pi_power), (BigRational::one(), 1));
        let b = beta(half(2), half(2));
        assert_eq!((b.rational_part, b.pi_power), (BigRational::one(), 0));
        let b = beta(half(3), half(1));
        assert_eq!((b.rational_part, b.pi_power), (rational(1, 2), 1));
    }

    #[test]
    fn cosine_moment_examples() {
        let i0 = cosine_moment_recursive(0);
        assert_eq!((i0.rational_part, i0.pi_power), (rational(1, 2), 1));
        let i2 = cosine_moment_recursive(2);
        assert_eq!((i2.rational_part, i2.pi_power), (rational(1, 4), 1));
        let i5 = cosine_moment_recursive(5);
        assert_eq!(
            (i5.rational_part.clone(), i5.pi_power),
            (rational(8, 15), 0)
        );
        // quadrature oracle for I_5
        let q = quadrature::integrate(0.0, core::f64::consts::FRAC_PI_2, 1e-13, |t| {
            powu(libm::cos(t), 5)
        })
        .unwrap();
        assert!((q.value - 8.0 / 15.0).abs() < 1e-12);
    }

    #[test]
    fn recursion_matches_closed_form() {
        for (n, moment) in cosine_moments(400).into_iter().enumerate() {
            assert_eq!(moment, cosine_moment_closed_form(n as u64), "n = {n}");
        }
    }

    #[test]
    fn moments_decrease_within_parity() {
        let moments = cosine_moments(120);
        for k in 2..moments.len() {
            assert!(moments[k].rational_part < moments[k - 2].rational_part);
            assert!(moments[k].rational_part.is_positive());
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma_check(1).unwrap());
        assert!(lemma_check(2).unwrap());
        assert!(lemma_check(50).unwrap());
        assert!(lemma_check(0).is_err());
    }

    #[test]
    fn beta_trig_examples() {
        assert!(beta_trig_identity_check(0, 0).unwrap());
        assert!(beta_trig_identity_check(1, 0).unwrap());
        assert!(beta_trig_identity_check(2, 3).unwrap());
        assert!(beta_trig_identity_check(20, 20).unwrap());
        assert!(beta_trig_identity_check(21, 0).is_err());
    }
}
