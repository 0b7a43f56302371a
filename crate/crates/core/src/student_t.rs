// SPDX-License-Identifier: Apache-2.0

//! Student t density `c_nu (1 + t^2/nu)^{-(nu+1)/2}`, its normalization
//! constant, and the approach `c_nu -> 1/sqrt(2 pi)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::gamma::{gamma_half_integer, HalfInteger};
use crate::numkit::{
    double_factorial, factorial, BigRational, Constant, ErrorBoundedValue, MethodId, PrecisionReal,
};
use crate::quadrature;
use crate::{Error, Result};

/// Smallest tolerance [`integrate_density`] accepts; the quadrature runs in
/// `f64`.
pub const MIN_DENSITY_TOLERANCE: f64 = 1e-14;
/// Grid points on `t >= 0`, spaced `0.1` apart.
pub const GRID_POINTS_PER_SIDE: u32 = 80;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StudentTParams {
    nu: u64,
}

impl StudentTParams {
    pub fn new(nu: u64) -> Result<Self> {
        if nu == 0 {
            return Err(Error::invalid("degrees of freedom must be at least 1"));
        }
        Ok(Self { nu })
    }

    pub fn nu(self) -> u64 {
        self.nu
    }
}

/// `c_nu^2` as `rational_part * pi^pi_power`, with `pi_power` 0 for even
/// `nu` and -2 for odd `nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquaredConstant {
    pub rational_part: BigRational,
    pub pi_power: i8,
}

/// Symbolic `c_nu^2 = Gamma((nu+1)/2)^2 / (pi nu Gamma(nu/2)^2)`.
pub fn constant_squared(params: StudentTParams) -> SquaredConstant {
    let nu = params.nu;
    let upper = gamma_half_integer(HalfInteger::new(nu + 1).expect("nu + 1 >= 2"));
    let lower = gamma_half_integer(HalfInteger::new(nu).expect("nu >= 1"));
    let ratio = &upper.rational_part / &lower.rational_part;
    // (sqrt pi)^(p_upper - p_lower) / sqrt(pi), squared
    let pi_power = upper.sqrt_pi_power as i8 - lower.sqrt_pi_power as i8 - 1;
    SquaredConstant {
        rational_part: &ratio * &ratio / BigRational::from_integer(BigInt::from(nu)),
        pi_power,
    }
}

/// `c_{2m}^2 = [(2m-1)!! / (2m)!!]^2 * m / 2`.
pub fn even_constant_squared_product_form(m: u64) -> BigRational {
    let odd = BigInt::from(double_factorial(2 * m as i64 - 1));
    let even = BigInt::from(double_factorial(2 * m as i64));
    let ratio = BigRational::new(odd, even);
    &ratio * &ratio * BigRational::new(BigInt::from(m), BigInt::from(2))
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationConstant {
    pub nu: u64,
    /// `c_nu^2`, rational exactly when `nu` is even.
    pub exact_squared: Option<BigRational>,
    pub numeric: PrecisionReal,
}

pub fn normalization_constant(params: StudentTParams, digits: u32) -> NormalizationConstant {
    let squared = constant_squared(params);
    let work = digits + 4;
    let root = PrecisionReal::from_rational(&squared.rational_part, work)
        .sqrt()
        .expect("squares are nonnegative");
    let numeric = match squared.pi_power {
        0 => root,
        _ => root
            .checked_div(&Constant::Pi.value(work))
            .expect("pi is nonzero"),
    };
    NormalizationConstant {
        nu: params.nu,
        exact_squared: (squared.pi_power == 0).then_some(squared.rational_part),
        numeric: numeric.with_digits(digits),
    }
}

/// The t density with its constant computed once.
#[derive(Debug, Clone)]
pub struct StudentT {
    params: StudentTParams,
    constant: PrecisionReal,
    digits: u32,
}

impl StudentT {
    pub fn new(params: StudentTParams, digits: u32) -> Self {
        let constant = normalization_constant(params, digits + 4).numeric;
        Self {
            params,
            constant,
            digits,
        }
    }

    pub fn params(&self) -> StudentTParams {
        self.params
    }

    /// `c_nu` carried with guard digits.
    pub fn constant(&self) -> &PrecisionReal {
        &self.constant
    }

    /// Depends on `t` only through `t^2`, so `f(-t) == f(t)` bit for bit.
    pub fn density(&self, t: &PrecisionReal) -> PrecisionReal {
        let work = self.digits + 4;
        let nu = self.params.nu;
        let t = t.with_digits(work);
        let base = PrecisionReal::one(work) + (&t * &t).div_int(nu);
        let kernel = if nu % 2 == 1 {
            base.powi(-((nu as i64 + 1) / 2))
        } else {
            let root = base.sqrt().expect("base >= 1");
            (base.powi(nu as i64 / 2) * root)
                .recip()
                .expect("base >= 1")
        };
        (&self.constant * &kernel).with_digits(self.digits)
    }
}

/// `f_nu(t)` at the precision of `t`.
pub fn t_density(params: StudentTParams, t: &PrecisionReal) -> PrecisionReal {
    StudentT::new(params, t.digits()).density(t)
}

/// `phi(t) = e^{-t^2/2} / sqrt(2 pi)` at the precision of `t`.
pub fn normal_density(t: &PrecisionReal) -> PrecisionReal {
    let digits = t.digits();
    let work = digits + 4;
    let t = t.with_digits(work);
    let scale = Constant::Sqrt2Pi.value(work).recip().expect("nonzero");
    let gauss = (-(&t * &t).div_int(2)).exp();
    (scale * gauss).with_digits(digits)
}

/// `int f_nu(t) dt` rewritten by `t = sqrt(nu) tan(theta)` as
/// `c_nu 2 sqrt(nu) int_0^{pi/2} cos^{nu-1}(theta) d(theta)`.
///
/// The cosine moment comes from `f64` Gauss-Legendre quadrature, so the
/// estimate carries 17 digits. The bound is the last change between doubled
/// rules plus a summation allowance, scaled by the prefactor.
pub fn integrate_density(params: StudentTParams, tol: &PrecisionReal) -> Result<ErrorBoundedValue> {
    let tol_f = tol.to_f64();
    if tol_f.is_nan() || tol_f < MIN_DENSITY_TOLERANCE {
        return Err(Error::invalid(format!(
            "density tolerance must be at least {MIN_DENSITY_TOLERANCE:e}"
        )));
    }
    let nu = params.nu;
    let exponent = (nu - 1) as f64;
    let moment = quadrature::integrate(0.0, core::f64::consts::FRAC_PI_2, tol_f, |theta| {
        libm::pow(libm::cos(theta), exponent)
    })?;
    let digits = 17;
    let work = digits + 4;
    let prefactor = normalization_constant(params, work).numeric
        * PrecisionReal::from_int(nu, work).sqrt()?.mul_int(2);
    let estimate = (&prefactor * &PrecisionReal::from_f64(moment.value, work)).with_digits(digits);
    let slack = moment.last_change + moment.nodes as f64 * f64::EPSILON * moment.value.abs();
    let bound = (&prefactor * &PrecisionReal::from_f64(slack, work)).with_digits(digits);
    Ok(ErrorBoundedValue::new(
        estimate,
        bound,
        MethodId::DensityQuadrature,
        moment.nodes as u64,
    ))
}

/// One row of [`limit_study`].
#[derive(Debug, Clone, PartialEq)]
pub struct LimitRow {
    pub nu: u64,
    /// `c_nu sqrt(2 pi)`.
    pub scaled_constant: PrecisionReal,
    /// `max |f_nu(t) - phi(t)|` over `t = -8, -7.9, ..., 8`, in `f64`.
    pub sup_distance: f64,
}

/// `max |f_nu(t) - phi(t)|` on the grid. Both densities are even, so only
/// `t = i/10` for `0 <= i <= 80` is evaluated.
fn sup_distance(nu: u64, constant: f64, normal: &[f64]) -> f64 {
    let exponent = -(nu as f64 + 1.0) / 2.0;
    normal
        .iter()
        .enumerate()
        .map(|(i, phi)| {
            let t = i as f64 / 10.0;
            let f = constant * libm::pow(1.0 + t * t / nu as f64, exponent);
            (f - phi).abs()
        })
        .fold(0.0, f64::max)
}

/// `c_nu sqrt(2 pi)` and the grid sup-distance to the normal density for
/// `1 <= nu <= nu_max`, ordered by `nu`.
pub fn limit_study(nu_max: u64, digits: u32) -> Result<Vec<LimitRow>> {
    if nu_max < 2 {
        return Err(Error::invalid("limit study needs nu_max >= 2"));
    }
    let inv_sqrt_2pi = 1.0 / Constant::Sqrt2Pi.value(20).to_f64();
    let normal: Vec<f64> = (0..=GRID_POINTS_PER_SIDE)
        .map(|i| {
            let t = f64::from(i) / 10.0;
            inv_sqrt_2pi * libm::exp(-t * t / 2.0)
        })
        .collect();
    let sqrt_2pi = Constant::Sqrt2Pi.value(digits + 4);
    let mut rows = Vec::with_capacity(nu_max as usize);
    for nu in 1..=nu_max {
        let constant = normalization_constant(StudentTParams::new(nu)?, digits + 4).numeric;
        rows.push(LimitRow {
            nu,
            scaled_constant: (&constant * &sqrt_2pi).with_digits(digits),
            sup_distance: sup_distance(nu, constant.to_f64(), &normal),
        });
    }
    Ok(rows)
}

/// `Gamma((2m+1)/2)^2 / (2 pi m ((m-1)!)^2)` with the `pi` cancelled, the
/// Gamma-ratio route to `c_{2m}^2`.
pub fn even_constant_squared_gamma_form(m: u64) -> BigRational {
    let odd = BigInt::from(double_factorial(2 * m as i64 - 1));
    let two_m = BigInt::one() << m as usize;
    let fact = BigInt::from(factorial(m - 1));
    let numer = &odd * &odd;
    let denom = &two_m * &two_m * BigInt::from(2 * m) * &fact * &fact;
    BigRational::new(numer, denom)
}

/// Checks `|c_nu sqrt(2 pi) - 1| <= 1/(2 nu)` on a row.
pub fn within_limit_bound(row: &LimitRow) -> bool {
    let gap = (&row.scaled_constant - &PrecisionReal::one(row.scaled_constant.digits())).abs();
    gap.to_rational() <= BigRational::new(BigInt::one(), BigInt::from(2 * row.nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::rational;
    use num_traits::ToPrimitive;

    fn real(s: &str) -> PrecisionReal {
        PrecisionReal::parse(s, 30).unwrap()
    }

    fn p(nu: u64) -> StudentTParams {
        StudentTParams::new(nu).unwrap()
    }

    fn rounds_to(x: &PrecisionReal, want: &str) {
        assert_eq!(x.with_digits(10).to_string(), want, "{x}");
    }

    #[test]
    fn constant_examples() {
        assert_eq!(
            normalization_constant(p(2), 20).exact_squared,
            Some(rational(1, 8))
        );
        assert_eq!(
            normalization_constant(p(4), 20).exact_squared,
            Some(rational(9, 64))
        );
        let c1 = normalization_constant(p(1), 20);
        assert_eq!(c1.exact_squared, None);
        let inv_pi = Constant::Pi.value(30).recip().unwrap().with_digits(20);
        assert_eq!(c1.numeric, inv_pi);
        assert!(StudentTParams::new(0).is_err());
    }

    #[test]
    fn exactness_bridge() {
        for m in 1..=200 {
            let c = normalization_constant(p(2 * m), 50);
            let exact = c.exact_squared.clone().unwrap();
            assert_eq!(exact, even_constant_squared_product_form(m), "m = {m}");
            assert_eq!(exact, even_constant_squared_gamma_form(m), "m = {m}");
            let sq = (&c.numeric * &c.numeric).to_rational();
            let rel = ((sq - &exact) / &exact).to_f64().unwrap().abs();
            assert!(rel < 1e-48, "m = {m}: {rel}");
        }
    }

    #[test]
    fn density_examples() {
        rounds_to(&t_density(p(1), &real("0")), "0.3183098862");
        rounds_to(&t_density(p(2), &real("0")), "0.3535533906");
        let half_inv_pi = Constant::Pi
            .value(40)
            .mul_int(2)
            .recip()
            .unwrap()
            .with_digits(30);
        let got = t_density(p(1), &real("1"));
        assert!((&got - &half_inv_pi).abs() <= got.ulp());
    }

    #[test]
    fn density_is_even() {
        for nu in [1, 2, 3, 10, 51] {
            let f = StudentT::new(p(nu), 25);
            for s in ["0.3", "1", "2.75", "7.9"] {
                let t = real(s);
                assert_eq!(f.density(&t), f.density(&-&t));
            }
        }
    }

    #[test]
    fn normal_examples() {
        rounds_to(&normal_density(&real("0")), "0.3989422804");
        rounds_to(&normal_density(&real("1")), "0.2419707245");
        assert_eq!(normal_density(&real("1.7")), normal_density(&real("-1.7")));
    }

    #[test]
    fn density_integrates_to_one() {
        let tol = PrecisionReal::parse("1e-12", 20).unwrap();
        for nu in [1, 2, 3, 7, 50, 100] {
            let v = integrate_density(p(nu), &tol).unwrap();
            let err = (v.estimate.to_f64() - 1.0).abs();
            assert!(err < 1e-12, "nu = {nu}: {err}");
        }
        let tiny = PrecisionReal::parse("1e-15", 20).unwrap();
        assert!(integrate_density(p(3), &tiny).is_err());
    }

    #[test]
    fn limit_study_rows() {
        let rows = limit_study(40, 20).unwrap();
        assert_eq!(rows.len(), 40);
        let sqrt_pi_half = Constant::SqrtPi.value(30).div_int(2).with_digits(20);
        assert_eq!(rows[1].scaled_constant, sqrt_pi_half);
        for pair in rows.windows(2) {
            assert!(pair[0].scaled_constant < pair[1].scaled_constant);
        }
        for row in &rows[9..] {
            assert!(within_limit_bound(row), "nu = {}", row.nu);
        }
        assert!(rows[39].sup_distance < rows[9].sup_distance);
        let f = StudentT::new(p(20), 20);
        for s in ["0", "0.7", "2", "8"] {
            let t = real(s).with_digits(20);
            let gap = (f.density(&t) - normal_density(&t)).abs().to_f64();
            assert!(gap <= rows[19].sup_distance * (1.0 + 1e-12), "t = {s}");
        }
        assert!(limit_study(1, 20).is_err());
    }
}
