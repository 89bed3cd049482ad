//! Exact rationals.
//!
//! `num-rational`'s `BigRational` already keeps the canonical form we need
//! (positive denominator, reduced, zero as 0/1), so it is used directly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Checked division; the `Div` impl of `BigRational` panics on zero.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
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
    fn field_operations() {
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
        assert_eq!(int(-45056) * rat(1, 64), int(-704));
        assert_eq!(rat(5, 4) * int(64), int(80));
        assert_eq!(checked_div(&int(1), &int(0)), Err(Error::DivisionByZero));
        assert_eq!(checked_div(&int(3), &int(-6)), Ok(rat(-1, 2)));
    }

    #[test]
    fn canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational(" -12/8 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("42").unwrap(), int(42));
        assert!(matches!(parse_rational("1/0"), Err(Error::Parse(_))));
        assert!(matches!(parse_rational("1.5"), Err(Error::Parse(_))));
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }
}
