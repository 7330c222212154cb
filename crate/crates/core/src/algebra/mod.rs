//! Exact scalars and polynomials.
//!
//! [`Rational`] is the scalar field of the whole crate. [`laurent`] holds
//! Laurent polynomials in `t`, [`poly`] integer polynomials, [`roots`] exact
//! positive root isolation and [`quadext`] sign determination in a single
//! quadratic extension `Q(√d)`.

pub mod laurent;
pub mod poly;
pub mod quadext;
pub mod roots;

use alloc::string::ToString;
use core::cmp::Ordering;
use core::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always kept reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(x: &T) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses the canonical `p/q` (or bare `p`) syntax.
///
/// Decimal points, exponents, whitespace and signed or zero denominators are
/// rejected so that no value is ever silently rounded.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let digits = |x: &str| !x.is_empty() && x.bytes().all(|b| b.is_ascii_digit());
    let num_body = num.strip_prefix('-').unwrap_or(num);
    if !digits(num_body) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(q) if digits(q) => q.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn canonical_strings() {
        assert_eq!(format!("{}", ratio(6, -4)), "-3/2");
        assert_eq!(format!("{}", ratio(8, 4)), "2");
        assert_eq!(format!("{}", ratio(0, 7)), "0");
    }

    #[test]
    fn parse_accepts_canonical_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert_eq!(parse_rational("0/5").unwrap(), int(0));
    }

    #[test]
    fn parse_rejects_decimals_and_junk() {
        for s in ["1.5", "1e3", "", "/3", "3/", "3/0", "3/-4", "+3", " 3", "a/b", "--1"] {
            assert!(parse_rational(s).is_err(), "{s} should be rejected");
        }
    }

    #[test]
    fn sign_helpers() {
        assert_eq!(Sign::of(&ratio(-1, 3)), Sign::Negative);
        assert_eq!(Sign::of(&int(0)), Sign::Zero);
        assert_eq!(-Sign::Positive, Sign::Negative);
        assert_eq!(Sign::from_ordering(Ordering::Greater).as_i8(), 1);
    }
}
