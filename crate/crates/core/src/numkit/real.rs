// SPDX-License-Identifier: Apache-2.0

//! Decimal floating point at a fixed number of significant digits.
//!
//! A value is `mantissa * 10^exponent` where the mantissa has exactly
//! `digits` decimal digits (or is zero). Every operation rounds its exact
//! result to nearest, ties to even. Binary operations first round both
//! operands to the smaller of their two precisions.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::BigRational;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct PrecisionReal {
    mantissa: BigInt,
    exponent: i64,
    digits: u32,
}

pub(crate) fn pow10(n: u32) -> BigUint {
    if n < 20 {
        BigUint::from(10u64.pow(n))
    } else {
        BigUint::from(10u32).pow(n)
    }
}

/// Number of decimal digits of `m` (zero has none).
pub(crate) fn decimal_len(m: &BigUint) -> u32 {
    if m.is_zero() {
        return 0;
    }
    let bits = m.bits();
    let mut len = ((bits - 1) as f64 * core::f64::consts::LOG10_2) as u32 + 1;
    while *m >= pow10(len) {
        len += 1;
    }
    while len > 1 && *m < pow10(len - 1) {
        len -= 1;
    }
    len
}

/// Rounds `n / d` (exact, `d > 0`) to an integer, ties to even.
fn round_div(n: &BigUint, d: &BigUint) -> BigUint {
    let (q, r) = n.div_rem(d);
    let twice: BigUint = r << 1u32;
    match twice.cmp(d) {
        Ordering::Greater => q + 1u32,
        Ordering::Equal if q.is_odd() => q + 1u32,
        _ => q,
    }
}

fn signed(sign: Sign, magnitude: BigUint) -> BigInt {
    if magnitude.is_zero() {
        BigInt::zero()
    } else {
        BigInt::from_biguint(sign, magnitude)
    }
}

impl PrecisionReal {
    pub fn zero(digits: u32) -> Self {
        assert!(digits > 0, "precision must be at least one digit");
        Self {
            mantissa: BigInt::zero(),
            exponent: 0,
            digits,
        }
    }

    pub fn one(digits: u32) -> Self {
        Self::from_int(1, digits)
    }

    pub fn from_int(value: impl Into<BigInt>, digits: u32) -> Self {
        Self::from_parts(value.into(), 0, digits)
    }

    /// `mantissa * 10^exponent`, rounded to `digits` significant digits.
    pub fn from_parts(mantissa: BigInt, exponent: i64, digits: u32) -> Self {
        assert!(digits > 0, "precision must be at least one digit");
        if mantissa.is_zero() {
            return Self::zero(digits);
        }
        let sign = mantissa.sign();
        let magnitude = mantissa.into_parts().1;
        let len = decimal_len(&magnitude);
        let (magnitude, exponent) = match len.cmp(&digits) {
            Ordering::Equal => (magnitude, exponent),
            Ordering::Less => (
                magnitude * pow10(digits - len),
                exponent - (digits - len) as i64,
            ),
            Ordering::Greater => {
                let shift = len - digits;
                let rounded = round_div(&magnitude, &pow10(shift));
                Self::renormalize_carry(rounded, exponent + shift as i64, digits)
            }
        };
        Self {
            mantissa: signed(sign, magnitude),
            exponent,
            digits,
        }
    }

    /// Rounding up can carry into an extra digit (`999 -> 1000`); the new
    /// trailing digit is always zero, so dropping it is exact.
    fn renormalize_carry(magnitude: BigUint, exponent: i64, digits: u32) -> (BigUint, i64) {
        if decimal_len(&magnitude) > digits {
            (magnitude / 10u32, exponent + 1)
        } else {
            (magnitude, exponent)
        }
    }

    /// Correctly rounded `numer / denom * 10^exponent`.
    fn from_quotient(numer: &BigInt, denom: &BigInt, exponent: i64, digits: u32) -> Self {
        assert!(digits > 0, "precision must be at least one digit");
        assert!(!denom.is_zero(), "division by zero");
        if numer.is_zero() {
            return Self::zero(digits);
        }
        let sign = if numer.sign() == denom.sign() {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let n = numer.magnitude();
        let d = denom.magnitude();
        // Floor quotient lands in [10^(digits-1), 10^(digits+1)); one retry
        // at most brings it to exactly `digits` digits.
        let mut shift = digits as i64 - (decimal_len(n) as i64 - decimal_len(d) as i64);
        loop {
            let (sn, sd) = if shift >= 0 {
                (n * pow10(shift as u32), d.clone())
            } else {
                (n.clone(), d * pow10((-shift) as u32))
            };
            let (q, r) = sn.div_rem(&sd);
            if decimal_len(&q) > digits {
                shift -= 1;
                continue;
            }
            let twice: BigUint = r << 1u32;
            let q = match twice.cmp(&sd) {
                Ordering::Greater => q + 1u32,
                Ordering::Equal if q.is_odd() => q + 1u32,
                _ => q,
            };
            let (q, e) = Self::renormalize_carry(q, exponent - shift, digits);
            return Self {
                mantissa: signed(sign, q),
                exponent: e,
                digits,
            };
        }
    }

    pub fn from_rational(value: &BigRational, digits: u32) -> Self {
        Self::from_quotient(value.numer(), value.denom(), 0, digits)
    }

    /// Exact binary value of `value`, rounded to `digits`.
    ///
    /// Panics on NaN or infinite input.
    pub fn from_f64(value: f64, digits: u32) -> Self {
        let exact = BigRational::from_float(value).expect("finite float");
        Self::from_rational(&exact, digits)
    }

    /// Parses a plain or scientific decimal literal (`-1.25`, `3e-5`) and
    /// rounds it to `digits`.
    pub fn parse(text: &str, digits: u32) -> Result<Self> {
        let bad = || Error::invalid(format!("not a decimal number: `{text}`"));
        let text = text.trim();
        let (body, exp) = match text.find(['e', 'E']) {
            Some(i) => (&text[..i], text[i + 1..].parse::<i64>().map_err(|_| bad())?),
            None => (text, 0),
        };
        let (negative, body) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let all_digits: String = [int_part, frac_part].concat();
        if !all_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let magnitude = BigUint::parse_bytes(all_digits.as_bytes(), 10).ok_or_else(bad)?;
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        Ok(Self::from_parts(
            signed(sign, magnitude),
            exp - frac_part.len() as i64,
            digits,
        ))
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// Same value rounded (or zero-extended) to `digits`.
    pub fn with_digits(&self, digits: u32) -> Self {
        if digits == self.digits {
            return self.clone();
        }
        Self::from_parts(self.mantissa.clone(), self.exponent, digits)
    }

    /// Decimal exponent of the leading digit: `floor(log10 |x|)`.
    ///
    /// Zero reports `i64::MIN`.
    pub fn order(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exponent + self.digits as i64 - 1
        }
    }

    /// One unit in the last significant place, `10^(order - digits + 1)`.
    pub fn ulp(&self) -> Self {
        let exponent = if self.is_zero() {
            -(self.digits as i64)
        } else {
            self.exponent
        };
        Self::from_parts(BigInt::one(), exponent, self.digits)
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            ..self.clone()
        }
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            let scale = BigInt::from(pow10(self.exponent as u32));
            BigRational::from_integer(&self.mantissa * scale)
        } else {
            let scale = BigInt::from(pow10((-self.exponent) as u32));
            BigRational::new(self.mantissa.clone(), scale)
        }
    }

    /// Nearest `f64` (correctly rounded from the decimal representation).
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        f64::from_str(&format!("{}e{}", self.mantissa, self.exponent)).unwrap_or(f64::NAN)
    }

    fn pair(&self, other: &Self) -> (Self, Self, u32) {
        let digits = self.digits.min(other.digits);
        (self.with_digits(digits), other.with_digits(digits), digits)
    }

    fn add_impl(&self, other: &Self) -> Self {
        let (a, b, digits) = self.pair(other);
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let (hi, lo) = if a.exponent >= b.exponent {
            (a, b)
        } else {
            (b, a)
        };
        let gap = hi.exponent - lo.exponent;
        // |lo| < 10^(lo.exponent + digits) stays below half an ulp of any
        // possible result, so the sum rounds back to `hi`.
        if gap >= digits as i64 + 2 {
            return hi;
        }
        let aligned = hi.mantissa * BigInt::from(pow10(gap as u32)) + lo.mantissa;
        Self::from_parts(aligned, lo.exponent, digits)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let (a, b, digits) = self.pair(other);
        Self::from_parts(a.mantissa * b.mantissa, a.exponent + b.exponent, digits)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let (a, b, digits) = self.pair(other);
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_quotient(
            &a.mantissa,
            &b.mantissa,
            a.exponent - b.exponent,
            digits,
        ))
    }

    /// Divides by a nonzero integer.
    pub fn div_int(&self, divisor: impl Into<BigInt>) -> Self {
        let divisor = divisor.into();
        assert!(!divisor.is_zero(), "division by zero");
        Self::from_quotient(&self.mantissa, &divisor, self.exponent, self.digits)
    }

    pub fn mul_int(&self, factor: impl Into<BigInt>) -> Self {
        Self::from_parts(&self.mantissa * factor.into(), self.exponent, self.digits)
    }

    pub fn mul_rational(&self, factor: &BigRational) -> Self {
        Self::from_quotient(
            &(&self.mantissa * factor.numer()),
            factor.denom(),
            self.exponent,
            self.digits,
        )
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.digits).checked_div(self)
    }

    /// Integer power by repeated squaring, computed with guard digits.
    pub fn powi(&self, n: i64) -> Self {
        let guard = self.digits + 4 + (64 - n.unsigned_abs().leading_zeros());
        let mut base = self.with_digits(guard);
        let mut acc = Self::one(guard);
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        if n < 0 {
            acc = acc.recip().expect("nonzero base");
        }
        acc.with_digits(self.digits)
    }

    /// Correctly rounded square root.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::invalid("square root of a negative number"));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let digits = self.digits;
        // Scale the mantissa to 2*digits - 1 or 2*digits digits with an even
        // remaining exponent, so the integer root has exactly `digits` digits.
        let mut scale = digits - 1;
        if (self.exponent - scale as i64).rem_euclid(2) != 0 {
            scale += 1;
        }
        let n = self.mantissa.magnitude() * pow10(scale);
        let root = n.sqrt();
        // Round up iff n > (root + 1/2)^2, i.e. 4n > 4 root^2 + 4 root + 1.
        let four_n: BigUint = &n << 2u32;
        let threshold: BigUint = ((&root * &root) << 2u32) + (&root << 2u32) + 1u32;
        let root = if four_n > threshold {
            root + 1u32
        } else {
            root
        };
        let (root, exponent) =
            Self::renormalize_carry(root, (self.exponent - scale as i64) / 2, digits);
        Ok(Self {
            mantissa: BigInt::from(root),
            exponent,
            digits,
        })
    }

    /// `e^x`.
    ///
    /// Argument halving followed by a Taylor series and repeated squaring.
    /// Panics if `|x| >= 10^15`.
    pub fn exp(&self) -> Self {
        let digits = self.digits;
        if self.is_zero() {
            return Self::one(digits);
        }
        assert!(self.order() < 15, "exp argument out of range");
        if self.is_negative() {
            let guard = digits + 4;
            let positive = self.abs().with_digits(guard).exp();
            return positive
                .recip()
                .expect("exp is positive")
                .with_digits(digits);
        }
        let mut halvings = 0u32;
        let mut magnitude = self.to_f64();
        while magnitude > 1.0 / 256.0 {
            magnitude /= 2.0;
            halvings += 1;
        }
        let work = digits + 10 + (halvings * 3) / 10 + 1;
        let mut reduced = self.with_digits(work);
        for _ in 0..halvings {
            reduced = reduced.div_int(2);
        }
        let mut sum = Self::one(work);
        let mut term = Self::one(work);
        let mut k = 1u32;
        loop {
            term = (&term * &reduced).div_int(k);
            if term.is_zero() || term.order() < sum.order() - work as i64 - 1 {
                break;
            }
            sum = &sum + &term;
            k += 1;
        }
        for _ in 0..halvings {
            sum = &sum * &sum;
        }
        sum.with_digits(digits)
    }

    /// Natural logarithm by Halley iteration on `exp`.
    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::invalid("logarithm of a non-positive number"));
        }
        let digits = self.digits;
        let one = Self::one(digits);
        if *self == one {
            return Ok(Self::zero(digits));
        }
        let work = digits + 10;
        let x = self.with_digits(work);
        let lead_digits = digits.min(17);
        let lead = self.with_digits(lead_digits);
        let lead_value = lead.mantissa.to_f64().unwrap_or(1.0);
        let guess = libm::log(lead_value.abs()) + lead.exponent as f64 * core::f64::consts::LN_10;
        let mut y = Self::from_f64(guess, work);
        for _ in 0..12 {
            let ey = y.exp();
            let delta = (&(&x - &ey) * &Self::from_int(2, work)).checked_div(&(&x + &ey))?;
            y = &y + &delta;
            if delta.is_zero() || (!y.is_zero() && delta.order() < y.order() - work as i64 + 2) {
                break;
            }
        }
        Ok(y.with_digits(digits))
    }

    /// Formats with exactly `digits` significant digits.
    ///
    /// Positional notation is used when the leading digit's exponent lies in
    /// `-7..digits`, scientific (`d.ddde-N`) otherwise. Zero prints as `0`.
    pub fn to_decimal_string(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let body = self.mantissa.magnitude().to_str_radix(10);
        let sign = if self.is_negative() { "-" } else { "" };
        let order = self.order();
        let n = body.len() as i64;
        if order >= -7 && order < n {
            if order >= 0 {
                let split = (order + 1) as usize;
                if split == body.len() {
                    format!("{sign}{body}")
                } else {
                    format!("{sign}{}.{}", &body[..split], &body[split..])
                }
            } else {
                let zeros = "0".repeat((-order - 1) as usize);
                format!("{sign}0.{zeros}{body}")
            }
        } else if body.len() == 1 {
            format!("{sign}{body}e{order}")
        } else {
            format!("{sign}{}.{}e{order}", &body[..1], &body[1..])
        }
    }
}

impl fmt::Display for PrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl PartialEq for PrecisionReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for PrecisionReal {}

impl PartialOrd for PrecisionReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares exact values, independent of precision.
impl Ord for PrecisionReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.mantissa.sign(), other.mantissa.sign()) {
            (a, b) if a != b => {
                let rank = |s: Sign| match s {
                    Sign::Minus => 0,
                    Sign::NoSign => 1,
                    Sign::Plus => 2,
                };
                rank(a).cmp(&rank(b))
            }
            (Sign::NoSign, _) => Ordering::Equal,
            (sign, _) => {
                let by_magnitude = match self.order().cmp(&other.order()) {
                    Ordering::Equal => {
                        let e = self.exponent.min(other.exponent);
                        let a = self.mantissa.magnitude() * pow10((self.exponent - e) as u32);
                        let b = other.mantissa.magnitude() * pow10((other.exponent - e) as u32);
                        a.cmp(&b)
                    }
                    ord => ord,
                };
                if sign == Sign::Minus {
                    by_magnitude.reverse()
                } else {
                    by_magnitude
                }
            }
        }
    }
}

impl Neg for PrecisionReal {
    type Output = PrecisionReal;
    fn neg(self) -> PrecisionReal {
        PrecisionReal {
            mantissa: -self.mantissa,
            ..self
        }
    }
}

impl Neg for &PrecisionReal {
    type Output = PrecisionReal;
    fn neg(self) -> PrecisionReal {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&PrecisionReal> for &PrecisionReal {
            type Output = PrecisionReal;
            fn $method(self, rhs: &PrecisionReal) -> PrecisionReal {
                $body(self, rhs)
            }
        }
        impl $trait<PrecisionReal> for PrecisionReal {
            type Output = PrecisionReal;
            fn $method(self, rhs: PrecisionReal) -> PrecisionReal {
                $body(&self, &rhs)
            }
        }
        impl $trait<&PrecisionReal> for PrecisionReal {
            type Output = PrecisionReal;
            fn $method(self, rhs: &PrecisionReal) -> PrecisionReal {
                $body(&self, rhs)
            }
        }
        impl $trait<PrecisionReal> for &PrecisionReal {
            type Output = PrecisionReal;
            fn $method(self, rhs: PrecisionReal) -> PrecisionReal {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &PrecisionReal, b: &PrecisionReal| a
    .add_impl(b));
forward_binop!(Sub, sub, |a: &PrecisionReal, b: &PrecisionReal| a
    .add_impl(&-b));
forward_binop!(Mul, mul, |a: &PrecisionReal, b: &PrecisionReal| a
    .mul_impl(b));
forward_binop!(Div, div, |a: &PrecisionReal, b: &PrecisionReal| a
    .checked_div(b)
    .expect("division by zero"));
