//! Exact rational scalars used throughout the crate.
//!
//! Channel matrices, polynomial coefficients, and bound checks are kept in
//! arbitrary-precision rationals so that equality tests and margins are exact;
//! floating point enters only for eigenvalues, logarithms, and Monte Carlo
//! estimates.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq)]
pub enum ParseRatError {
    #[error("cannot parse {0:?} as a rational number")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact value of a finite float (every finite `f64` is a dyadic rational).
/// Returns `None` for NaN or infinities.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

/// Nearest-float image of a rational.
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"a/b"`, an integer such as `"3"`, or a decimal such as `"0.25"`,
/// all exactly and with an optional leading sign.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let t = s.trim();
    let malformed = || ParseRatError::Malformed(s.to_string());
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| malformed())?;
        let d: BigInt = den.trim().parse().map_err(|_| malformed())?;
        if d.is_zero() {
            return Err(ParseRatError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let (sign, int_digits) = match int_part.trim().strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.trim().strip_prefix('+').unwrap_or(int_part.trim())),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return Err(malformed());
        }
        let digits = format!("{}{}", int_digits, frac_part);
        let n: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| malformed())?
        };
        let d = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(Rat::new(BigInt::from(sign) * n, d));
    }
    let n: BigInt = t.parse().map_err(|_| malformed())?;
    Ok(Rat::from_integer(n))
}

/// Renders a rational as `"a/b"`, or just `"a"` when the denominator is one.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact value of the moment integral `∫₀¹ tᵃ (1−t)ᵇ dt = a! b! / (a+b+1)!`.
pub fn beta_integral(a: u64, b: u64) -> Rat {
    Rat::new(factorial(a) * factorial(b), factorial(a + b + 1))
}

/// Absolute value.
pub fn rat_abs(x: &Rat) -> Rat {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fraction_and_integer() {
        assert_eq!(parse_rat("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rat(" -2/4 ").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("7").unwrap(), rat_int(7));
        assert_eq!(parse_rat("-7").unwrap(), rat_int(-7));
    }

    #[test]
    fn parse_decimal_is_exact() {
        assert_eq!(parse_rat("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rat("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rat("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("2.").unwrap(), rat_int(2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("1.2.3").is_err());
    }

    #[test]
    fn float_round_trip() {
        let x = rat_from_f64(0.5).unwrap();
        assert_eq!(x, rat(1, 2));
        assert_eq!(rat_to_f64(&rat(1, 4)), 0.25);
        assert!(rat_from_f64(f64::NAN).is_none());
    }

    #[test]
    fn beta_integral_matches_closed_form() {
        assert_eq!(beta_integral(0, 0), rat_int(1));
        assert_eq!(beta_integral(1, 0), rat(1, 2));
        assert_eq!(beta_integral(1, 1), rat(1, 6));
        assert_eq!(beta_integral(2, 3), rat(1, 60));
    }

    #[test]
    fn format_round_trip() {
        for s in ["3", "-3", "1/3", "-7/5"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
    }
}
