//! Exact rational scalars.
//!
//! Every predicate in this crate is an exact sign test, so numbers are
//! arbitrary-precision rationals kept in canonical form (positive
//! denominator, reduced). Serialized form is the canonical string
//! `"num/den"`, with `/den` omitted when the denominator is one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::Error;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Build a rational from a numerator/denominator pair.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse the canonical `"num"` / `"num/den"` form.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::InvalidRational(s.to_owned()));
    }
    BigRational::from_str(t).map_err(|_| Error::InvalidRational(s.to_owned()))
}

/// Canonical string form: `den == 1` prints as a plain integer.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-3", "1/2", "-7/3", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
    }

    #[test]
    fn parse_reduces_to_canonical_form() {
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("-6/4").unwrap()), "-3/2");
        // negative denominators normalize onto the numerator
        assert_eq!(format_rational(&parse_rational("1/-2").unwrap()), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "a", "1/0", "1.5", "1/2/3"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = ratio(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, rat(1));
    }
}
