//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate is over arbitrary-precision
//! rationals kept in lowest terms with a positive denominator. Those
//! invariants are maintained by `num_rational::BigRational`; this module
//! adds the constructors and the canonical text form used in output.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form: decimal `num/den`, with `/den` omitted when the
/// value is an integer. The zero value prints as `0`.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True when `x` is an integer (denominator 1).
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// True when `x` is a strictly positive integer.
pub fn is_positive_integer(x: &Rational) -> bool {
    is_integer(x) && x.numer().is_positive()
}

/// Parse the canonical text form back into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n = n.parse::<BigInt>().ok()?;
            let d = d.parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}
