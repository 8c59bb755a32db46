//! Numeric substrate: exact rationals, directed-rounding binary floats and
//! outward-rounded float intervals.

pub mod decimal;
pub mod float;
pub(crate) mod gmp;
pub mod interval;

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub use float::{BigFloat, Precision, Round};
pub use interval::{fi_arith, fi_sign, round_out, ArithOp, FloatInterval, IntervalSign};

use num_bigint::BigInt;

/// Shorthand for `n/d`; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Decimal digits needed to write the larger of numerator and denominator.
pub fn decimal_size(x: &Rational) -> u32 {
    let digits = |n: &BigInt| n.magnitude().to_string().len() as u32;
    digits(x.numer()).max(digits(x.denom()))
}
