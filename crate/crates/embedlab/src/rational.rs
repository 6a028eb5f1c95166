//! Exact rational arithmetic helpers.
//!
//! All source-space distances in this crate are `BigRational` values so that
//! ties and strict inequalities are decided exactly; floats only appear once
//! a quantity is inherently irrational (general ℓ_p norms, p-th roots).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand constructor from an integer pair.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ratio_int(num: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(num))
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_ratio(s: &str) -> Result<BigRational, RationalParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s
                .parse()
                .map_err(|_| RationalParseError::Malformed(s.to_string()))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| RationalParseError::Malformed(s.to_string()))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| RationalParseError::Malformed(s.to_string()))?;
            if d.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Extremely large components; fall back to a scaled division.
        let num = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let den = r.denom().to_f64().unwrap_or(f64::INFINITY);
        num / den
    })
}

/// Exact conversion of a finite float (every finite f64 is rational).
pub fn ratio_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// `base^exp` for integer exponents of either sign. `base` must be nonzero
/// for negative exponents.
pub fn ratio_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let b = if exp > 0 { base.clone() } else { base.recip() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// `2^{-l}` as an exact rational.
pub fn pow2_neg(l: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << l)
}

/// Largest integer `e` with `base^e <= value`; requires `base > 1`,
/// `value > 0`.
pub fn floor_log(base: &BigRational, value: &BigRational) -> i64 {
    assert!(*base > BigRational::one(), "floor_log needs base > 1");
    assert!(value.is_positive(), "floor_log needs a positive value");
    let one = BigRational::one();
    let mut e: i64 = 0;
    if *value >= one {
        let mut power = BigRational::one();
        loop {
            let next = &power * base;
            if next > *value {
                break;
            }
            power = next;
            e += 1;
        }
    } else {
        let mut power = BigRational::one();
        while power > *value {
            power /= base;
            e -= 1;
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1/4", "-3/8", "7", "0", "21/16"] {
            let r = parse_ratio(s).unwrap();
            assert_eq!(format_ratio(&r), s);
        }
        assert_eq!(format_ratio(&parse_ratio("2/4").unwrap()), "1/2");
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("x").is_err());
        assert!(parse_ratio("").is_err());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let four = ratio_int(4);
        assert_eq!(ratio_pow(&four, -2), ratio(1, 16));
        assert_eq!(ratio_pow(&four, 0), ratio_int(1));
        assert_eq!(ratio_pow(&four, 3), ratio_int(64));
    }

    #[test]
    fn pow2_neg_matches_pow() {
        for l in 0..12 {
            assert_eq!(pow2_neg(l), ratio_pow(&ratio_int(2), -(l as i64)));
        }
    }

    #[test]
    fn floor_log_brackets_value() {
        let four = ratio_int(4);
        assert_eq!(floor_log(&four, &ratio_int(1)), 0);
        assert_eq!(floor_log(&four, &ratio_int(3)), 0);
        assert_eq!(floor_log(&four, &ratio_int(4)), 1);
        assert_eq!(floor_log(&four, &ratio_int(5)), 1);
        assert_eq!(floor_log(&four, &ratio(1, 4)), -1);
        assert_eq!(floor_log(&four, &ratio(1, 5)), -2);
        assert_eq!(floor_log(&four, &ratio(3, 5)), -1);
    }

    #[test]
    fn exact_float_conversion() {
        assert_eq!(ratio_from_f64(0.5).unwrap(), ratio(1, 2));
        assert_eq!(ratio_from_f64(1.0).unwrap(), ratio_int(1));
    }
}
