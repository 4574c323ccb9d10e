//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational {text:?}: {reason}")]
pub struct RationalParseError {
    pub text: String,
    pub reason: &'static str,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `p`, `-p` or `p/q` with `q > 0`. No whitespace, no leading `+`.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let err = |reason| RationalParseError {
        text: text.to_string(),
        reason,
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(
            "numerator must be an optionally negated decimal integer",
        ));
    }
    let numer: BigInt = num.parse().map_err(|_| err("numerator out of range"))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("denominator must be a positive decimal integer"));
            }
            let d: BigInt = d.parse().map_err(|_| err("denominator out of range"))?;
            if d.is_zero() {
                return Err(err("denominator must be positive"));
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}

/// `p/q`, or just `p` when the value is an integer.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn is_even_integer(r: &Rational) -> bool {
    r.is_integer() && (r.numer() % BigInt::from(2)).is_zero()
}

pub fn is_nonnegative_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}
