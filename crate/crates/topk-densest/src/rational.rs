//! Exact rational arithmetic used for every score in the library.
//!
//! All densities, distances, λ values and objective values are carried as
//! arbitrary-precision fractions so that comparisons (approximation-ratio
//! checks, the hardness threshold) are tie-free and reproducible.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, always reduced, denominator > 0.
///
/// `num_rational::BigRational` maintains exactly those invariants on every
/// operation, so it is used directly rather than wrapped.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from small integers. Panics on zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"`, an integer `"12"`, or a plain decimal like `"0.01"` /
/// `"-3.5"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::contract(format!("cannot parse rational from {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::contract(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let numer = int_part * &scale + if negative { -frac } else { frac };
        return Ok(Rational::new(numer, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Renders `r` as `"p/q"` (or `"p"` for integers).
pub fn fraction_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Deterministic decimal rendering: exact when the expansion terminates
/// within `max_frac_digits`, otherwise truncated to that many digits.
pub fn decimal_string(r: &Rational, max_frac_digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let int = abs.numer() / abs.denom();
    let mut rem = abs.numer() % abs.denom();
    if rem.is_zero() {
        return format!("{sign}{int}");
    }
    let mut digits = String::new();
    let ten = BigInt::from(10);
    for _ in 0..max_frac_digits {
        rem *= &ten;
        let d = &rem / abs.denom();
        rem %= abs.denom();
        digits.push(char::from(b'0' + d.to_u8().unwrap_or(0)));
        if rem.is_zero() {
            break;
        }
    }
    while digits.ends_with('0') {
        digits.pop();
    }
    if digits.is_empty() {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{digits}")
}

/// Nearest-f64 rendering for report convenience fields.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
