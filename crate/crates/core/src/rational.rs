//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// `+1` or `-1` as a rational.
pub fn sign(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Sign of a rational as -1, 0 or +1.
pub fn signum(value: &Rational) -> i8 {
    if value.is_zero() {
        0
    } else if value.is_positive() {
        1
    } else {
        -1
    }
}
