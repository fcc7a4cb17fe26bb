//! Exact rational scalars and conversions at the floating-point boundary.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"0.75"`, `"-3"`, `"1e-2"`, `"2.5E3"` or `"3/4"` into an exact rational.
///
/// Decimal strings are read digit by digit so `0.1` becomes exactly `1/10`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseNumber(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{whole}{frac}");
    let mut value = Rational::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let scale = exponent - frac.len() as i32;
    let ten = int(10);
    let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
    if scale >= 0 {
        value *= pow;
    } else {
        value /= pow;
    }
    Ok(if negative { -value } else { value })
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Formats a rational as `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!(parse_rational("0.75").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert_eq!(parse_rational("+.5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("1e-2").unwrap(), ratio(1, 100));
        assert_eq!(parse_rational("2.5E3").unwrap(), int(2500));
        assert_eq!(parse_rational(" 3/4 ").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), ratio(-3, 4));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1/0", "1.2.3", "--1", ".", "1e", "0x10"] {
            assert!(parse_rational(s).is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn float_round_trip() {
        let r = from_f64(0.75).unwrap();
        assert_eq!(r, ratio(3, 4));
        assert_eq!(to_f64(&r), 0.75);
        assert_eq!(fmt_rational(&ratio(-3, 4)), "-3/4");
        assert_eq!(fmt_rational(&int(7)), "7");
    }
}
