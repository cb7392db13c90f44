//! Exact rational scalars.
//!
//! Rationals are `num_rational::BigRational` values: arbitrary-precision,
//! always reduced, denominator positive. The helpers here cover the `p/q`
//! string form used by every serialized interface.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt as Int;
pub use num_rational::BigRational as Rational;

/// Rational from a machine integer.
pub fn rat_i64(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical string form: `p` when the denominator is 1, else `p/q`.
pub fn rat_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parse `p` or `p/q`. Whitespace is not accepted.
pub fn rat_from_str(s: &str) -> Result<Rational, crate::Error> {
    let parse_int =
        |t: &str| BigInt::from_str(t).map_err(|_| crate::Error::Parse(String::from(s)));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(crate::Error::Parse(String::from(s)));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

/// Round-to-nearest conversion to `f64`.
///
/// Exact for anything representable; large values saturate to infinity.
pub fn rat_to_f64(r: &Rational) -> f64 {
    // Scale so the integer division below keeps 80 bits of the quotient.
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    let shift = 80i64 + (den.bits() as i64 - num.bits() as i64);
    let scaled = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let sd = big_to_f64(&scaled);
    sd * libm::exp2(-(shift as f64))
}

fn big_to_f64(v: &BigInt) -> f64 {
    let (sign, digits) = v.to_u64_digits();
    let mut acc = 0.0f64;
    for d in digits.iter().rev() {
        acc = acc * 1.8446744073709552e19 + (*d as f64);
    }
    if sign == num_bigint::Sign::Minus {
        -acc
    } else {
        acc
    }
}

/// `|r|` as a rational.
pub fn rat_abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        let r = rat(-10, 4);
        assert_eq!(rat_to_string(&r), "-5/2");
        assert_eq!(rat_from_str("-5/2").unwrap(), r);
        assert_eq!(rat_to_string(&rat_i64(3)), "3");
        assert_eq!(rat_from_str("3").unwrap(), rat_i64(3));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("a/b").is_err());
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(rat_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rat_to_f64(&rat(-7, 1)), -7.0);
        let third = rat_to_f64(&rat(1, 3));
        assert!((third - 1.0 / 3.0).abs() < 1e-16);
        let tiny = Rational::new(BigInt::from(1), BigInt::from(10).pow(40));
        assert!((rat_to_f64(&tiny) - 1e-40).abs() < 1e-55);
    }
}
