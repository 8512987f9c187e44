//! Scalar realizations: exact rationals and binary floating point.
//!
//! Every geometric routine in this crate is written once against [`Scalar`].
//! The exact realization is [`Rational`] (always held in reduced form with a
//! positive denominator); the float realizations are `f32` and `f64`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::det::{det_exact, det_float, Determinant};
use crate::matrix::SquareMatrix;
use crate::LinalgError;

/// Arbitrary-precision rational number in canonical form.
pub type Rational = num_rational::BigRational;

/// Number type the geometry kernels are generic over.
pub trait Scalar: Clone + Debug + Display + PartialOrd + Signed + Send + Sync + 'static {
    /// `true` for arithmetic without rounding.
    const EXACT: bool;

    /// Nearest representable value (exact for [`Rational`]).
    fn from_rational(value: &Rational) -> Self;

    fn from_i64(value: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact value; `None` for NaN and infinities.
    fn to_rational(&self) -> Option<Rational>;

    fn is_finite(&self) -> bool;

    /// Unit roundoff; zero for exact arithmetic.
    fn unit_roundoff() -> Self;

    /// Determinant through the backend appropriate for this scalar.
    ///
    /// Exact scalars use cofactor expansion up to order 3 and Bareiss
    /// elimination beyond; floats use partial-pivot elimination and carry an
    /// error scale alongside the value.
    fn determinant(m: &SquareMatrix<Self>) -> Result<Determinant<Self>, LinalgError>;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn from_i64(value: i64) -> Self {
        Rational::from_integer(BigInt::from(value))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn unit_roundoff() -> Self {
        Rational::zero()
    }

    fn determinant(m: &SquareMatrix<Self>) -> Result<Determinant<Self>, LinalgError> {
        Ok(Determinant::exact(det_exact(m)?))
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_rational(value: &Rational) -> Self {
                ToPrimitive::to_f64(value).unwrap_or(f64::NAN) as $t
            }

            fn from_i64(value: i64) -> Self {
                value as $t
            }

            fn to_f64(&self) -> f64 {
                f64::from(*self)
            }

            fn to_rational(&self) -> Option<Rational> {
                Rational::from_float(*self)
            }

            fn is_finite(&self) -> bool {
                <$t>::is_finite(*self)
            }

            fn unit_roundoff() -> Self {
                <$t>::EPSILON / 2.0
            }

            fn determinant(m: &SquareMatrix<Self>) -> Result<Determinant<Self>, LinalgError> {
                det_float(m)
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

/// Error produced when a coordinate string is not a valid exact number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid number `{input}`: {reason}")]
pub struct ParseScalarError {
    pub input: String,
    pub reason: &'static str,
}

fn parse_error(input: &str, reason: &'static str) -> ParseScalarError {
    ParseScalarError {
        input: input.to_owned(),
        reason,
    }
}

/// Parses an integer, a fraction `p/q`, or a decimal (optionally with an
/// exponent) into an exact rational. Decimals never pass through binary
/// floating point: `"0.1"` becomes exactly `1/10`.
pub fn parse_rational(input: &str) -> Result<Rational, ParseScalarError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(parse_error(input, "empty"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_decimal(num.trim()).ok_or_else(|| parse_error(input, "bad numerator"))?;
        let den = parse_decimal(den.trim()).ok_or_else(|| parse_error(input, "bad denominator"))?;
        if den.is_zero() {
            return Err(parse_error(input, "zero denominator"));
        }
        return Ok(num / den);
    }
    parse_decimal(s).ok_or_else(|| parse_error(input, "not an integer, fraction or decimal"))
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let joined = format!("{int_part}{frac_part}");
    let mut numer: BigInt = joined.parse().ok()?;
    if negative {
        numer = -numer;
    }
    let shift = exponent - i32::try_from(frac_part.len()).ok()?;
    let ten = BigInt::from(10u8);
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    Some(if shift >= 0 {
        Rational::from_integer(numer * scale)
    } else {
        Rational::new(numer, scale)
    })
}

/// Exact rational value of a finite binary float.
pub fn rationalize(value: f64) -> Option<Rational> {
    Rational::from_float(value)
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn canonical_string(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// `n!` as a scalar.
pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * T::from_i64(k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational("0.1").unwrap(), q(1, 10));
        assert_eq!(parse_rational("-1.5").unwrap(), q(-3, 2));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("3.").unwrap(), q(3, 1));
        assert_eq!(parse_rational("1e-3").unwrap(), q(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), q(250, 1));
        assert_eq!(parse_rational("+7").unwrap(), q(7, 1));
    }

    #[test]
    fn fractions_are_reduced() {
        let r = parse_rational("6/-4").unwrap();
        assert_eq!(r, q(-3, 2));
        assert_eq!(*r.denom(), BigInt::from(2));
        assert_eq!(parse_rational("0/5").unwrap(), Rational::zero());
        assert_eq!(*parse_rational("0/5").unwrap().denom(), BigInt::from(1));
        assert_eq!(parse_rational("1/1000000").unwrap(), q(1, 1_000_000));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "abc", "1/0", "1.2.3", "--1", "1/", "e5", "0x10", "."] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn canonical_form() {
        assert_eq!(canonical_string(&q(4, 2)), "2");
        assert_eq!(canonical_string(&q(-2, 6)), "-1/3");
        assert_eq!(canonical_string(&Rational::zero()), "0");
    }

    #[test]
    fn rationalize_is_exact() {
        assert_eq!(rationalize(0.25).unwrap(), q(1, 4));
        let r = rationalize(0.1).unwrap();
        assert_ne!(r, q(1, 10));
        assert_eq!(Scalar::to_f64(&r), 0.1);
        assert!(rationalize(f64::NAN).is_none());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial::<Rational>(0), q(1, 1));
        assert_eq!(factorial::<Rational>(5), q(120, 1));
        assert_eq!(factorial::<f64>(3), 6.0);
    }
}
