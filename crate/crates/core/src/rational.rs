//! Exact rational numbers.
//!
//! `Rational` is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator. This module adds the text conventions used by the
//! CLI and the golden files (`p/q`, always with an explicit denominator).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Builds `num/den` in lowest terms. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInteger(s.trim().to_string()))
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (parse(p)?, parse(q)?);
            if q.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(parse(text)?)),
    }
}

/// Formats as `p/q` with an explicit denominator, even for integers.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn to_f64(x: &Rational) -> f64 {
    // BigRational::to_f64 handles huge numerators/denominators without overflow.
    x.to_f64().unwrap_or(f64::NAN)
}

/// Nearest integer to `x`, with exact halves rounded toward zero.
pub fn round_half_toward_zero(x: &Rational) -> BigInt {
    let floor = x.floor();
    let frac = x - &floor;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let floor = floor.to_integer();
    if frac > half || (frac == half && x.is_negative()) {
        floor + 1
    } else {
        floor
    }
}

/// Nearest integer to `x`, with exact halves rounded down, so `x - result`
/// lies in `(-1/2, 1/2]`.
pub fn round_half_down(x: &Rational) -> BigInt {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    (x - half).ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational(" 1 / -2 ").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(format_rational(&ratio(-2, 4)), "-1/2");
        assert!(matches!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator(_))));
        assert!(matches!(parse_rational("x/2"), Err(ParseRationalError::BadInteger(_))));
        assert!(matches!(parse_rational(""), Err(ParseRationalError::Empty)));
    }

    #[test]
    fn rounding_rules() {
        assert_eq!(round_half_toward_zero(&ratio(1, 2)), BigInt::from(0));
        assert_eq!(round_half_toward_zero(&ratio(-1, 2)), BigInt::from(0));
        assert_eq!(round_half_toward_zero(&ratio(3, 2)), BigInt::from(1));
        assert_eq!(round_half_toward_zero(&ratio(-3, 2)), BigInt::from(-1));
        assert_eq!(round_half_toward_zero(&ratio(7, 5)), BigInt::from(1));
        assert_eq!(round_half_toward_zero(&ratio(-8, 5)), BigInt::from(-2));

        assert_eq!(round_half_down(&ratio(1, 2)), BigInt::from(0));
        assert_eq!(round_half_down(&ratio(-1, 2)), BigInt::from(-1));
        assert_eq!(round_half_down(&ratio(5, 3)), BigInt::from(2));
        assert_eq!(round_half_down(&int(4)), BigInt::from(4));
    }
}
