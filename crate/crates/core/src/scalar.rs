//! Exact rational scalars.
//!
//! Everything in the crate computes over the rationals; there is no floating
//! point anywhere. `Scalar` is a plain alias so the whole `num` operator
//! surface is available without wrapper boilerplate.

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("empty scalar")]
    Empty,
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed scalar {0:?} (expected \"p\" or \"p/q\")")]
    Malformed(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"` or `"p/q"` with optional leading sign on `p`.
///
/// Decimal points and exponents are rejected so that files stay exact.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let malformed = || ScalarParseError::Malformed(text.to_string());
    let valid_int = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(malformed());
    }
    let numer: BigInt = num.parse().map_err(|_| malformed())?;
    let denom: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if !valid_int(d, false) {
                return Err(malformed());
            }
            d.parse().map_err(|_| malformed())?
        }
    };
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
