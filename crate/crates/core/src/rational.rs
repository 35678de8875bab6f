//! Exact scalars.
//!
//! Entries are arbitrary-precision fractions kept in lowest terms with a
//! positive denominator, so zero is always `0/1` and equality is structural.
//! Square roots never enter this layer; [`sqrt_decimal`] renders one at an
//! output boundary instead.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Why a scalar token was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TokenError {
    #[error("empty token")]
    Empty,
    #[error("malformed number `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn parse_digits(s: &str, whole: &str) -> Result<BigUint, TokenError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(TokenError::Malformed(whole.to_string()));
    }
    s.parse::<BigUint>()
        .map_err(|_| TokenError::Malformed(whole.to_string()))
}

/// Parses one entry: an integer (`-3`), a fraction (`2/3`, `-4/6`) or a
/// decimal (`0.5`, `-.25`, `3.`).
///
/// Decimals are converted exactly: `d` digits after the point become a
/// denominator of `10^d` before reduction.
pub fn parse_rational(token: &str) -> Result<Rational, TokenError> {
    let tok = token.trim();
    if tok.is_empty() {
        return Err(TokenError::Empty);
    }
    let (negative, body) = match tok.as_bytes()[0] {
        b'-' => (true, &tok[1..]),
        b'+' => (false, &tok[1..]),
        _ => (false, tok),
    };
    let sign = if negative { Sign::Minus } else { Sign::Plus };

    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(num, tok)?;
        let den = parse_digits(den, tok)?;
        if den.is_zero() {
            return Err(TokenError::ZeroDenominator(tok.to_string()));
        }
        Rational::new(
            BigInt::from_biguint(sign, num),
            BigInt::from_biguint(Sign::Plus, den),
        )
    } else if let Some((whole, fraction)) = body.split_once('.') {
        if whole.is_empty() && fraction.is_empty() {
            return Err(TokenError::Malformed(tok.to_string()));
        }
        let whole = if whole.is_empty() {
            BigUint::zero()
        } else {
            parse_digits(whole, tok)?
        };
        let (digits, scale) = if fraction.is_empty() {
            (BigUint::zero(), BigUint::one())
        } else {
            let scale = num_traits::pow(BigUint::from(10u32), fraction.len());
            (parse_digits(fraction, tok)?, scale)
        };
        let numer = whole * &scale + digits;
        Rational::new(
            BigInt::from_biguint(sign, numer),
            BigInt::from_biguint(Sign::Plus, scale),
        )
    } else {
        Rational::from_integer(BigInt::from_biguint(sign, parse_digits(body, tok)?))
    };
    Ok(value)
}

/// Renders `value` with exactly `digits` places after the decimal point,
/// rounded half away from zero.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = value.abs() * Rational::from_integer(scale);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let rounded = if r * 2 >= *scaled.denom() { q + 1 } else { q };
    format_scaled(&rounded, digits, value.is_negative())
}

/// Nonnegative square root of `value` to `digits` decimal places, rounded to
/// nearest. Returns `None` for negative input.
pub fn sqrt_decimal(value: &Rational, digits: usize) -> Option<String> {
    if value.is_negative() {
        return None;
    }
    // floor(sqrt(v * 100^(digits+1))) then round away the guard digit
    let scale = num_traits::pow(BigInt::from(10), 2 * (digits + 1));
    let scaled = value * Rational::from_integer(scale);
    let floor = scaled.numer() / scaled.denom();
    let root = floor.sqrt();
    let (q, guard) = root.div_rem(&BigInt::from(10));
    let rounded = if guard >= BigInt::from(5) { q + 1 } else { q };
    Some(format_scaled(&rounded, digits, false))
}

fn format_scaled(magnitude: &BigInt, digits: usize, negative: bool) -> String {
    let mut s = magnitude.to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        s.insert(s.len() - digits, '.');
    }
    if negative && magnitude.sign() != Sign::NoSign {
        s.insert(0, '-');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_entry_form() {
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("2/3").unwrap(), frac(2, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(parse_rational("0.5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-.25").unwrap(), frac(-1, 4));
        assert_eq!(parse_rational("3.").unwrap(), int(3));
        assert_eq!(parse_rational("+7").unwrap(), int(7));
        assert_eq!(parse_rational("0.1").unwrap(), frac(1, 10));
    }

    #[test]
    fn zero_is_canonical() {
        let z = parse_rational("0/5").unwrap();
        assert_eq!(*z.denom(), BigInt::from(1));
        assert_eq!(parse_rational("-0.000").unwrap(), int(0));
    }

    #[test]
    fn rejects_bad_tokens() {
        assert_eq!(parse_rational("1/0"), Err(TokenError::ZeroDenominator("1/0".into())));
        assert!(matches!(parse_rational("abc"), Err(TokenError::Malformed(_))));
        assert!(matches!(parse_rational("1/2/3"), Err(TokenError::Malformed(_))));
        assert!(matches!(parse_rational("1e5"), Err(TokenError::Malformed(_))));
        assert!(matches!(parse_rational("."), Err(TokenError::Malformed(_))));
        assert!(matches!(parse_rational("--1"), Err(TokenError::Malformed(_))));
        assert!(matches!(parse_rational("1/-2"), Err(TokenError::Malformed(_))));
        assert_eq!(parse_rational("  "), Err(TokenError::Empty));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&frac(1, 3), 4), "0.3333");
        assert_eq!(to_decimal(&frac(2, 3), 4), "0.6667");
        assert_eq!(to_decimal(&frac(-1, 8), 2), "-0.13");
        assert_eq!(to_decimal(&int(5), 0), "5");
        assert_eq!(to_decimal(&frac(-1, 1000), 2), "0.00");
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_decimal(&int(5), 12).unwrap(), "2.236067977500");
        assert_eq!(sqrt_decimal(&int(4), 3).unwrap(), "2.000");
        assert_eq!(sqrt_decimal(&int(0), 2).unwrap(), "0.00");
        assert_eq!(sqrt_decimal(&frac(1, 4), 1).unwrap(), "0.5");
        assert_eq!(sqrt_decimal(&int(2), 0).unwrap(), "1");
        assert!(sqrt_decimal(&int(-1), 3).is_none());
    }
}
