//! Binary floating-point numbers with an arbitrary-length mantissa and
//! explicitly directed rounding.
//!
//! A [`BigFloat`] is the exact dyadic rational `mantissa * 2^exponent`. Every
//! arithmetic operation computes the exact result first and then rounds it to
//! the requested number of mantissa bits, either toward negative infinity or
//! toward positive infinity. Nothing is ever rounded to nearest, so interval
//! code built on top stays sound.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Working precision, expressed in decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    /// Panics if `digits` is zero.
    pub fn digits(digits: u32) -> Self {
        assert!(digits >= 1, "precision must be at least one decimal digit");
        Precision(digits)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Mantissa width: `ceil(l * log2(10)) + 2` guard bits.
    pub fn bits(self) -> u64 {
        // log2(10) = 3.321928094887362..., use an integer upper bound so the
        // result never undershoots.
        (u64::from(self.0) * 3_321_928_095).div_ceil(1_000_000_000) + 2
    }

    pub fn scaled(self, factor: u32) -> Self {
        Precision(self.0.saturating_mul(factor.max(1)))
    }

    pub fn max(self, other: Precision) -> Self {
        Precision(self.0.max(other.0))
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} digits", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

impl Round {
    /// Whether rounding a value of the given sign moves its magnitude away
    /// from zero.
    fn away_from_zero(self, negative: bool) -> bool {
        matches!((self, negative), (Round::Up, false) | (Round::Down, true))
    }
}

/// `mantissa * 2^exponent`, kept canonical: the mantissa is odd, or the value
/// is zero with exponent 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BigFloat {
    mantissa: BigInt,
    exponent: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    /// Exact value `mantissa * 2^exponent`, no rounding.
    pub fn from_parts(mantissa: BigInt, exponent: i64) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        let tz = mantissa.trailing_zeros().unwrap_or(0);
        BigFloat {
            mantissa: mantissa >> tz,
            exponent: exponent + tz as i64,
        }
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        Self::from_parts(value.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Number of significant mantissa bits.
    pub fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Exponent of the leading bit: `2^top <= |self| < 2^(top+1)`.
    fn top(&self) -> i64 {
        self.exponent + self.mantissa.bits() as i64 - 1
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Exact conversion.
    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            Rational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    /// Nearest `f64` toward zero; for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits() as i64;
        let shift = (bits - 60).max(0);
        let m: i64 = i64::try_from(&self.mantissa >> shift as usize).unwrap_or(0);
        (m as f64) * 2f64.powi((self.exponent + shift).clamp(-2000, 2000) as i32)
    }

    /// Round an exact value `sign * magnitude * 2^exponent` to `bits` bits.
    fn round_parts(negative: bool, magnitude: BigUint, exponent: i64, bits: u64, mode: Round) -> Self {
        Self::round_parts_sticky(negative, magnitude, exponent, false, bits, mode)
    }

    /// As [`round_parts`], where `sticky` records that the true magnitude is
    /// strictly larger than `magnitude` (but below `magnitude + 1`). Callers
    /// must then supply a magnitude with more than `bits` bits.
    fn round_parts_sticky(
        negative: bool,
        magnitude: BigUint,
        exponent: i64,
        sticky: bool,
        bits: u64,
        mode: Round,
    ) -> Self {
        let len = magnitude.bits();
        let away = mode.away_from_zero(negative);
        let (mag, exp) = if len <= bits {
            debug_assert!(!sticky, "sticky rounding requires excess bits");
            (magnitude, exponent)
        } else {
            let shift = len - bits;
            let (q, r) = magnitude.div_rem(&(BigUint::one() << shift));
            let inexact = sticky || !r.is_zero();
            let q = if away && inexact { q + 1u32 } else { q };
            (q, exponent + shift as i64)
        };
        let m = BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, mag);
        Self::from_parts(m, exp)
    }

    /// Round `self` to `bits` mantissa bits in direction `mode`.
    pub fn round_to(&self, bits: u64, mode: Round) -> Self {
        if self.mantissa.bits() <= bits {
            return self.clone();
        }
        Self::round_parts(
            self.is_negative(),
            self.mantissa.magnitude().clone(),
            self.exponent,
            bits,
            mode,
        )
    }

    fn exact_sum(a: &BigFloat, b: &BigFloat) -> BigFloat {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let e = a.exponent.min(b.exponent);
        let ma = &a.mantissa << (a.exponent - e) as usize;
        let mb = &b.mantissa << (b.exponent - e) as usize;
        BigFloat::from_parts(ma + mb, e)
    }

    pub fn add(&self, other: &BigFloat, bits: u64, mode: Round) -> Self {
        Self::exact_sum(self, other).round_to(bits, mode)
    }

    pub fn sub(&self, other: &BigFloat, bits: u64, mode: Round) -> Self {
        Self::exact_sum(self, &other.neg()).round_to(bits, mode)
    }

    pub fn mul(&self, other: &BigFloat, bits: u64, mode: Round) -> Self {
        BigFloat::from_parts(&self.mantissa * &other.mantissa, self.exponent + other.exponent)
            .round_to(bits, mode)
    }

    /// `self / other` rounded in direction `mode`. Panics on division by zero.
    pub fn div(&self, other: &BigFloat, bits: u64, mode: Round) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let negative = self.is_negative() != other.is_negative();
        let num = self.mantissa.magnitude();
        let den = other.mantissa.magnitude();
        // Scale so the integer quotient carries at least bits + 2 bits.
        let shift = (bits as i64 + 2 + den.bits() as i64 - num.bits() as i64).max(0);
        let (q, r) = (num << shift as usize).div_rem(den);
        let exponent = self.exponent - other.exponent - shift;
        Self::round_parts_sticky(negative, q, exponent, !r.is_zero(), bits, mode)
    }

    /// `num / den` rounded in direction `mode`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u64, mode: Round) -> Self {
        BigFloat::from_int(num.clone()).div(&BigFloat::from_int(den.clone()), bits, mode)
    }

    pub fn from_rational(x: &Rational, bits: u64, mode: Round) -> Self {
        Self::from_ratio(x.numer(), x.denom(), bits, mode)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        BigFloat {
            mantissa: BigInt::one(),
            exponent: k,
        }
    }

    /// Distance to the next float of the same precision, away from zero:
    /// `2^(top - bits + 1)`.
    pub fn ulp(&self, bits: u64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::pow2(self.top() - bits as i64 + 1)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = self.signum();
        let sb = other.signum();
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        // Same nonzero sign: compare magnitudes by leading bit first.
        let by_mag = match self.top().cmp(&other.top()) {
            Ordering::Equal => {
                let e = self.exponent.min(other.exponent);
                let ma = self.mantissa.magnitude() << (self.exponent - e) as usize;
                let mb = other.mantissa.magnitude() << (other.exponent - e) as usize;
                ma.cmp(&mb)
            }
            o => o,
        };
        if sa > 0 {
            by_mag
        } else {
            by_mag.reverse()
        }
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::decimal::render_truncated(&self.to_rational(), 30))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn precision_bits_mapping() {
        assert_eq!(Precision::digits(1).bits(), 6);
        assert_eq!(Precision::digits(12).bits(), 42);
        assert_eq!(Precision::digits(100).bits(), 335);
    }

    #[test]
    fn canonical_form() {
        let x = BigFloat::from_parts(BigInt::from(12), 0);
        assert_eq!(x.mantissa(), &BigInt::from(3));
        assert_eq!(x.exponent(), 2);
        assert_eq!(BigFloat::from_parts(BigInt::zero(), 17), BigFloat::zero());
    }

    #[test]
    fn directed_division_brackets_one_third() {
        let one = BigFloat::from_int(1);
        let three = BigFloat::from_int(3);
        let lo = one.div(&three, 20, Round::Down);
        let hi = one.div(&three, 20, Round::Up);
        assert!(lo.to_rational() < q(1, 3));
        assert!(hi.to_rational() > q(1, 3));
        assert_eq!(hi.sub(&lo, 64, Round::Up), lo.ulp(20));
    }

    #[test]
    fn negative_division_rounds_the_right_way() {
        let lo = BigFloat::from_ratio(&BigInt::from(-1), &BigInt::from(3), 10, Round::Down);
        let hi = BigFloat::from_ratio(&BigInt::from(-1), &BigInt::from(3), 10, Round::Up);
        assert!(lo.to_rational() < q(-1, 3));
        assert!(hi.to_rational() > q(-1, 3));
    }

    #[test]
    fn rounding_carry_is_exact() {
        // 0b1111 rounded up to 2 bits is 0b10000.
        let x = BigFloat::from_int(15);
        assert_eq!(x.round_to(2, Round::Up), BigFloat::from_int(16));
        assert_eq!(x.round_to(2, Round::Down), BigFloat::from_int(12));
        assert_eq!(x.neg().round_to(2, Round::Down), BigFloat::from_int(-16));
    }

    #[test]
    fn ordering_matches_rationals() {
        let vals = [q(-7, 4), q(-1, 8), q(0, 1), q(3, 16), q(5, 2), q(6, 1)];
        let floats: Vec<_> = vals
            .iter()
            .map(|v| BigFloat::from_rational(v, 64, Round::Down))
            .collect();
        for i in 0..vals.len() {
            for j in 0..vals.len() {
                assert_eq!(floats[i].cmp(&floats[j]), vals[i].cmp(&vals[j]));
            }
        }
    }
}
