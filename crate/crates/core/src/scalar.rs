//! Arithmetic backends.
//!
//! Every probability computation is generic over [`Scalar`]. Two backends are
//! provided: `f64` for sweeps and [`Exact`] (arbitrary precision rationals)
//! for equality checks that must hold exactly.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Num, Signed, Zero};
use thiserror::Error;

/// Arbitrary precision rational probability.
pub type Exact = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as a decimal number")]
pub struct ParseDecimalError {
    pub input: String,
}

/// Numeric field used for probabilities and payoffs.
pub trait Scalar: Num + Signed + Clone + PartialOrd + fmt::Debug + Send + Sync + 'static {
    /// `true` when arithmetic is exact.
    const EXACT: bool;

    /// Converts a float. The exact backend reads the shortest decimal
    /// representation, so `0.1` becomes `1/10`.
    fn from_f64(x: f64) -> Result<Self, ParseDecimalError>;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_exact(value: &Exact) -> Self;

    fn to_f64(&self) -> f64;

    /// Absolute slack allowed by comparisons (zero for exact arithmetic).
    fn tolerance() -> Self;

    /// Wire format: 17 significant digits for floats, `num/den` for rationals.
    fn to_wire(&self) -> String;

    fn from_usize(n: usize) -> Self {
        Self::from_ratio(n as i64, 1)
    }

    /// `self <= other` up to [`Scalar::tolerance`].
    fn le_tol(&self, other: &Self) -> bool {
        *self <= other.clone() + Self::tolerance()
    }

    /// `self < other` by more than [`Scalar::tolerance`].
    fn lt_tol(&self, other: &Self) -> bool {
        self.clone() + Self::tolerance() < *other
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).abs() <= Self::tolerance()
    }

    fn powi(&self, exp: usize) -> Self {
        num::pow(self.clone(), exp)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_f64(x: f64) -> Result<Self, ParseDecimalError> {
        Ok(x)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_exact(value: &Exact) -> Self {
        value.to_f64()
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn tolerance() -> Self {
        1e-12
    }

    fn to_wire(&self) -> String {
        format!("{:.16e}", self)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_f64(x: f64) -> Result<Self, ParseDecimalError> {
        if !x.is_finite() {
            return Err(ParseDecimalError {
                input: x.to_string(),
            });
        }
        parse_decimal(&format!("{x:?}"))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_exact(value: &Exact) -> Self {
        value.clone()
    }

    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn tolerance() -> Self {
        BigRational::zero()
    }

    fn to_wire(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

/// Parses `[-]digits[.digits][e[-]digits]` into an exact rational.
pub fn parse_decimal(input: &str) -> Result<Exact, ParseDecimalError> {
    let err = || ParseDecimalError {
        input: input.to_string(),
    };
    let s = input.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| err())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str_radix(&digits, 10).map_err(|_| err())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Parses a decimal (`0.25`) or a ratio (`1/4`) into the requested backend.
pub fn parse_scalar<S: Scalar>(input: &str) -> Result<S, ParseDecimalError> {
    let exact = match input.split_once('/') {
        Some((n, d)) => {
            let n = parse_decimal(n)?;
            let d = parse_decimal(d)?;
            if d.is_zero() {
                return Err(ParseDecimalError {
                    input: input.to_string(),
                });
            }
            n / d
        }
        None => parse_decimal(input)?,
    };
    Ok(S::from_exact(&exact))
}

/// Clamps into `[0, 1]`.
pub fn clamp_unit<S: Scalar>(x: S) -> S {
    if x < S::zero() {
        S::zero()
    } else if x > S::one() {
        S::one()
    } else {
        x
    }
}

/// Serde adapters writing scalars in their wire format, for use with
/// `#[serde(with = "...")]`.
pub mod wire {
    use serde::Serializer;

    use super::Scalar;

    pub fn serialize<S: Scalar, Z: Serializer>(x: &S, z: Z) -> Result<Z::Ok, Z::Error> {
        z.serialize_str(&x.to_wire())
    }

    pub mod vec {
        use serde::Serializer;

        use crate::scalar::Scalar;

        #[allow(clippy::ptr_arg)]
        pub fn serialize<S: Scalar, Z: Serializer>(xs: &Vec<S>, z: Z) -> Result<Z::Ok, Z::Error> {
            z.collect_seq(xs.iter().map(Scalar::to_wire))
        }
    }
}
