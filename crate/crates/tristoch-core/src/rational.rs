//! The scalar type: arbitrary-precision rationals, always in lowest terms.
//!
//! [`Rational`] is `num_rational::BigRational`, which normalizes on every
//! operation: lowest terms, denominator strictly positive. Equality and
//! ordering are therefore canonical, which the vertex deduplication and the
//! fixture formats rely on.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Never rounded, never approximated.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers, mostly for tests and
/// fixtures.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rational denominator must be nonzero");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Error from [`parse_rational`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseRationalError {
    /// Empty string, missing part, or non-numeric characters.
    Malformed,
    /// Denominator was zero.
    ZeroDenominator,
    /// Denominator was negative. The wire format requires `q > 0`; signs
    /// belong on the numerator.
    NegativeDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Malformed => write!(f, "malformed rational literal"),
            ParseRationalError::ZeroDenominator => write!(f, "rational denominator is zero"),
            ParseRationalError::NegativeDenominator => {
                write!(f, "rational denominator is negative")
            }
        }
    }
}

impl core::error::Error for ParseRationalError {}

/// Parses the exact wire format `"p"` or `"p/q"` with `q > 0`.
///
/// The numerator may carry a sign; non-reduced input is normalized on read.
/// Negative or zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let parse_int = |t: &str| -> Result<BigInt, ParseRationalError> {
        if t.is_empty() {
            return Err(ParseRationalError::Malformed);
        }
        t.parse::<BigInt>()
            .map_err(|_| ParseRationalError::Malformed)
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator);
            }
            if den.is_negative() {
                return Err(ParseRationalError::NegativeDenominator);
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Formats a rational as `"p"` when integral and `"p/q"` otherwise.
///
/// Inverse of [`parse_rational`] on normalized values.
pub fn format_rational(r: &Rational) -> String {
    use alloc::string::ToString;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_and_fraction() {
        assert_eq!(parse_rational("3").unwrap(), rat_int(3));
        assert_eq!(parse_rational("-7").unwrap(), rat_int(-7));
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
    }

    #[test]
    fn parse_normalizes_non_reduced_input() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("0/5").unwrap(), rat_int(0));
    }

    #[test]
    fn parse_rejects_bad_denominators() {
        assert_eq!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator)
        );
        assert_eq!(
            parse_rational("1/-2"),
            Err(ParseRationalError::NegativeDenominator)
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "/", "1/", "/2", "a", "1/2/3", "1.5"] {
            assert!(parse_rational(s).is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn format_round_trips() {
        for r in [rat_int(0), rat_int(12), rat(-1, 3), rat(22, 7)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&rat(4, 2)), "2");
    }
}
