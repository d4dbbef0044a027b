//! Exact integer and rational arithmetic, plus the combinatorial primitives
//! the counting formulas are built from.
//!
//! Everything downstream works in `Int` (arbitrary-precision signed integer)
//! and `Rat` (arbitrary-precision rational, always reduced, denominator
//! positive). No floating point exists anywhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational. `BigRational` stores values reduced with a
/// positive denominator, which is exactly the invariant the formulas rely on.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// A value that must be an integer came out fractional. Since every
    /// formula in this crate is integer-valued on its domain, this always
    /// indicates a transcription bug rather than a bad input.
    #[error("expected an integer, got {0}")]
    NonIntegral(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Binomial coefficient C(n, k) as an exact integer.
///
/// Out-of-range `k` (negative or above `n`) yields 0 so that formula loops
/// stay uniform at boundary indices.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = Int::one();
    for t in 0..k {
        // Exact at every step: after multiplying by (n - t) the product is
        // C(n, t + 1) * (t + 1)!, divisible by (t + 1).
        result = result * Int::from(n - t) / Int::from(t + 1);
    }
    result
}

/// Extracts the integer value of `x`, failing if the denominator is not 1.
pub fn to_int(x: &Rat) -> Result<Int, ArithError> {
    if x.denom().is_one() {
        Ok(x.numer().clone())
    } else {
        Err(ArithError::NonIntegral(format_rat(x)))
    }
}

/// Checked division; rejects a zero divisor instead of panicking.
pub fn checked_div(a: &Rat, b: &Rat) -> Result<Rat, ArithError> {
    if b.is_zero() {
        Err(ArithError::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Canonical decimal rendering of an integer (no sign for zero, no leading
/// zeros, `-` prefix for negatives).
pub fn format_int(x: &Int) -> String {
    x.to_string()
}

/// Canonical rendering of a rational: `p` when the value is an integer,
/// otherwise `p/q` with `q > 1` and `gcd(|p|, q) = 1`.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberParseError {
    #[error("empty number")]
    Empty,
    #[error("invalid digit in {0:?}")]
    InvalidDigit(String),
    #[error("non-canonical form {0:?}: {1}")]
    NonCanonical(String, &'static str),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses a canonical decimal integer, rejecting anything [`format_int`]
/// would never produce (`+` signs, leading zeros, `-0`, empty input).
pub fn parse_int(s: &str) -> Result<Int, NumberParseError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() {
        return Err(NumberParseError::Empty);
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(NumberParseError::InvalidDigit(s.to_string()));
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(NumberParseError::NonCanonical(
            s.to_string(),
            "leading zero",
        ));
    }
    if digits == "0" && s.starts_with('-') {
        return Err(NumberParseError::NonCanonical(
            s.to_string(),
            "negative zero",
        ));
    }
    Ok(s.parse::<Int>().expect("validated decimal string"))
}

/// Parses a canonical rational as produced by [`format_rat`]: either a
/// canonical integer, or `p/q` with canonical parts, `q > 1`, `p != 0`, and
/// `gcd(|p|, q) = 1`.
pub fn parse_rat(s: &str) -> Result<Rat, NumberParseError> {
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(NumberParseError::ZeroDenominator(s.to_string()));
            }
            if denom.is_negative() {
                return Err(NumberParseError::NonCanonical(
                    s.to_string(),
                    "negative denominator",
                ));
            }
            if denom.is_one() {
                return Err(NumberParseError::NonCanonical(
                    s.to_string(),
                    "denominator one",
                ));
            }
            if numer.is_zero() {
                return Err(NumberParseError::NonCanonical(
                    s.to_string(),
                    "zero written as fraction",
                ));
            }
            if !num_integer::Integer::gcd(&numer, &denom).is_one() {
                return Err(NumberParseError::NonCanonical(s.to_string(), "not reduced"));
            }
            Ok(Rat::new(numer, denom))
        }
    }
}
