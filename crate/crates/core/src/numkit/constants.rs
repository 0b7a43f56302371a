// SPDX-License-Identifier: Apache-2.0

use alloc::string::ToString;
use core::str::FromStr;

use super::real::PrecisionReal;
use crate::{Error, Result};

/// Significant digits stored in the reference table.
pub const TABLE_DIGITS: u32 = 110;

/// Largest precision callers may request from [`reference_constant`].
pub const MAX_REFERENCE_DIGITS: u32 = 100;

const PI: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679821480865";
const SQRT_PI: &str = "1.7724538509055160272981674833411451827975494561223871282138077898529112845910321813749506567385446654162268236";
const LOG_PI_OVER_2: &str = "0.45158270528945486472619522989488214357179467855505631739294306197874414791513136417775994327907102016000833121";
const SQRT_2PI: &str = "2.5066282746310005024157652848110452530069867406099383166299235763422936546078419749465958383780572661160099727";

/// Named reference constants. Errors of every estimator are measured
/// against these, never against values computed by the estimators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    Pi,
    SqrtPi,
    LogPiOver2,
    Sqrt2Pi,
}

impl Constant {
    pub const ALL: [Constant; 4] = [
        Constant::Pi,
        Constant::SqrtPi,
        Constant::LogPiOver2,
        Constant::Sqrt2Pi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::SqrtPi => "sqrt_pi",
            Constant::LogPiOver2 => "log_pi_over_2",
            Constant::Sqrt2Pi => "sqrt_2pi",
        }
    }

    fn table(self) -> &'static str {
        match self {
            Constant::Pi => PI,
            Constant::SqrtPi => SQRT_PI,
            Constant::LogPiOver2 => LOG_PI_OVER_2,
            Constant::Sqrt2Pi => SQRT_2PI,
        }
    }

    /// Table value rounded to `digits`, capped at [`TABLE_DIGITS`]. Unlike
    /// [`reference_constant`] this allows the guard digits past 100.
    pub fn value(self, digits: u32) -> PrecisionReal {
        let digits = digits.min(TABLE_DIGITS);
        PrecisionReal::parse(self.table(), digits).expect("table entries are valid decimals")
    }
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Constant::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownConstant(s.to_string()))
    }
}

/// The named constant correctly rounded to `digits` significant digits
/// (`1 ..= 100`).
pub fn reference_constant(name: &str, digits: u32) -> Result<PrecisionReal> {
    let constant: Constant = name.parse()?;
    if digits > MAX_REFERENCE_DIGITS {
        return Err(Error::PrecisionTooHigh {
            requested: digits,
            max: MAX_REFERENCE_DIGITS,
        });
    }
    if digits == 0 {
        return Err(Error::invalid("precision must be at least one digit"));
    }
    Ok(constant.value(digits))
}

/// `pi/2` correctly rounded to `digits` (at most the table width).
pub fn pi_over_2(digits: u32) -> PrecisionReal {
    Constant::Pi
        .value(TABLE_DIGITS)
        .div_int(2)
        .with_digits(digits.min(TABLE_DIGITS))
}

/// `pi/4` correctly rounded to `digits` (at most the table width).
pub fn pi_over_4(digits: u32) -> PrecisionReal {
    Constant::Pi
        .value(TABLE_DIGITS)
        .div_int(4)
        .with_digits(digits.min(TABLE_DIGITS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    /// `atan(1/x) * 10^scale` by its Taylor series in fixed point.
    fn arctan_inverse(x: u64, scale: &BigInt) -> BigInt {
        let x2 = BigInt::from(x * x);
        let mut power = scale / BigInt::from(x);
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * k + 1);
            if k.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &x2;
            k += 1;
        }
        sum
    }

    /// `atanh(y) * 10^scale` for a fixed-point `y` with |y| < 1.
    fn atanh_fixed(y: &BigInt, scale: &BigInt) -> BigInt {
        let y2 = y * y / scale;
        let mut power = y.clone();
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !power.is_zero() {
            sum += &power / BigInt::from(2 * k + 1);
            power = &power * &y2 / scale;
            k += 1;
        }
        sum
    }

    fn fixed(text: &str, scale_digits: u32) -> BigInt {
        let (int, frac) = text.split_once('.').unwrap();
        let mut frac = frac.to_string();
        frac.truncate(scale_digits as usize);
        while frac.len() < scale_digits as usize {
            frac.push('0');
        }
        BigInt::parse_bytes(alloc::format!("{int}{frac}").as_bytes(), 10).unwrap()
    }

    const SCALE: u32 = 125;

    fn close(a: &BigInt, b: &BigInt) -> bool {
        // the table carries 110 significant digits
        (a - b).abs() < BigInt::from(10u32).pow(SCALE - 108)
    }

    #[test]
    fn pi_matches_machin_formula() {
        let scale = BigInt::from(10u32).pow(SCALE);
        let machin = arctan_inverse(5, &scale) * 16 - arctan_inverse(239, &scale) * 4;
        assert!(close(&machin, &fixed(PI, SCALE)));
    }

    #[test]
    fn square_roots_square_back() {
        let scale = BigInt::from(10u32).pow(SCALE);
        let pi = fixed(PI, SCALE);
        let sp = fixed(SQRT_PI, SCALE);
        assert!(close(&(&sp * &sp / &scale), &pi));
        let s2p = fixed(SQRT_2PI, SCALE);
        assert!(close(&(&s2p * &s2p / &scale), &(pi * 2)));
    }

    #[test]
    fn log_matches_atanh_series() {
        // ln x = 2 atanh((x - 1)/(x + 1)), x = pi/2
        let scale = BigInt::from(10u32).pow(SCALE);
        let x = fixed(PI, SCALE) / 2;
        let y = (&x - &scale) * &scale / (&x + &scale);
        let ln = atanh_fixed(&y, &scale) * 2;
        assert!(close(&ln, &fixed(LOG_PI_OVER_2, SCALE)));
    }

    #[test]
    fn reference_examples() {
        assert_eq!(
            reference_constant("pi", 10).unwrap().to_string(),
            "3.141592654"
        );
        assert_eq!(
            reference_constant("log_pi_over_2", 10).unwrap().to_string(),
            "0.4515827053"
        );
        assert_eq!(
            reference_constant("sqrt_pi", 10).unwrap().to_string(),
            "1.772453851"
        );
        assert_eq!(
            reference_constant("sqrt_2pi", 10).unwrap().to_string(),
            "2.506628275"
        );
    }

    #[test]
    fn reference_errors() {
        assert_eq!(
            reference_constant("tau", 10),
            Err(Error::UnknownConstant("tau".into()))
        );
        assert_eq!(
            reference_constant("pi", 101),
            Err(Error::PrecisionTooHigh {
                requested: 101,
                max: 100
            })
        );
        assert!(reference_constant("pi", 100).is_ok());
    }

    #[test]
    fn derived_quarter_and_half_pi() {
        assert_eq!(pi_over_2(12).to_string(), "1.57079632679");
        assert_eq!(pi_over_4(12).to_string(), "0.785398163397");
    }
}
