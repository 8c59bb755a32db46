//! Outward-rounded interval arithmetic over [`BigFloat`] endpoints.

use std::fmt;

use super::float::{BigFloat, Precision, Round};
use super::Rational;
use crate::error::{Error, Result};

/// Certified sign of an interval value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalSign {
    Negative,
    Indeterminate,
    Positive,
}

impl IntervalSign {
    pub fn as_i32(self) -> i32 {
        match self {
            IntervalSign::Negative => -1,
            IntervalSign::Indeterminate => 0,
            IntervalSign::Positive => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Closed interval `[lo, hi]` with float endpoints, `lo <= hi`.
#[derive(Clone, PartialEq, Eq)]
pub struct FloatInterval {
    lo: BigFloat,
    hi: BigFloat,
}

impl FloatInterval {
    pub fn new(lo: BigFloat, hi: BigFloat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        FloatInterval { lo, hi }
    }

    pub fn point(x: BigFloat) -> Self {
        FloatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_ints(lo: i64, hi: i64) -> Self {
        Self::new(BigFloat::from_int(lo), BigFloat::from_int(hi))
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        self.hi.to_rational() - self.lo.to_rational()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo.to_rational() <= x && x <= &self.hi.to_rational()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// `[min(lo), max(hi)]` of the two intervals.
    pub fn hull(&self, other: &FloatInterval) -> Self {
        FloatInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn neg(&self) -> Self {
        FloatInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn add(&self, other: &FloatInterval, p: Precision) -> Self {
        let bits = p.bits();
        FloatInterval {
            lo: self.lo.add(&other.lo, bits, Round::Down),
            hi: self.hi.add(&other.hi, bits, Round::Up),
        }
    }

    pub fn sub(&self, other: &FloatInterval, p: Precision) -> Self {
        let bits = p.bits();
        FloatInterval {
            lo: self.lo.sub(&other.hi, bits, Round::Down),
            hi: self.hi.sub(&other.lo, bits, Round::Up),
        }
    }

    pub fn mul(&self, other: &FloatInterval, p: Precision) -> Self {
        let bits = p.bits();
        if self.is_point() && other.is_point() {
            return FloatInterval {
                lo: self.lo.mul(&other.lo, bits, Round::Down),
                hi: self.lo.mul(&other.lo, bits, Round::Up),
            };
        }
        // Sign-class shortcuts for the common all-positive / all-negative
        // cases; the general case takes min/max of the four products.
        let (a, b) = (&self.lo, &self.hi);
        let (c, d) = (&other.lo, &other.hi);
        let nonneg = |x: &BigFloat| x.signum() >= 0;
        let nonpos = |x: &BigFloat| x.signum() <= 0;
        let (lo_pair, hi_pair) = if nonneg(a) && nonneg(c) {
            ((a, c), (b, d))
        } else if nonpos(b) && nonpos(d) {
            ((b, d), (a, c))
        } else if nonneg(a) && nonpos(d) {
            ((b, c), (a, d))
        } else if nonpos(b) && nonneg(c) {
            ((a, d), (b, c))
        } else {
            let candidates = [(a, c), (a, d), (b, c), (b, d)];
            let lo = candidates
                .iter()
                .map(|(x, y)| x.mul(y, bits, Round::Down))
                .min()
                .expect("four candidates");
            let hi = candidates
                .iter()
                .map(|(x, y)| x.mul(y, bits, Round::Up))
                .max()
                .expect("four candidates");
            return FloatInterval { lo, hi };
        };
        FloatInterval {
            lo: lo_pair.0.mul(lo_pair.1, bits, Round::Down),
            hi: hi_pair.0.mul(hi_pair.1, bits, Round::Up),
        }
    }

    pub fn div(&self, other: &FloatInterval, p: Precision) -> Result<Self> {
        if other.contains_zero() {
            return Err(Error::DivisionByIntervalContainingZero);
        }
        let bits = p.bits();
        let candidates = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = candidates
            .iter()
            .map(|(x, y)| x.div(y, bits, Round::Down))
            .min()
            .expect("four candidates");
        let hi = candidates
            .iter()
            .map(|(x, y)| x.div(y, bits, Round::Up))
            .max()
            .expect("four candidates");
        Ok(FloatInterval { lo, hi })
    }

    pub fn sign(&self) -> IntervalSign {
        fi_sign(self)
    }
}

impl fmt::Debug for FloatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for FloatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Tightest float interval at precision `l` containing `x`; a point when
/// `x` is representable.
pub fn round_out(x: &Rational, l: Precision) -> FloatInterval {
    let bits = l.bits();
    FloatInterval {
        lo: BigFloat::from_rational(x, bits, Round::Down),
        hi: BigFloat::from_rational(x, bits, Round::Up),
    }
}

pub fn fi_arith(op: ArithOp, a: &FloatInterval, b: &FloatInterval, l: Precision) -> Result<FloatInterval> {
    Ok(match op {
        ArithOp::Add => a.add(b, l),
        ArithOp::Sub => a.sub(b, l),
        ArithOp::Mul => a.mul(b, l),
        ArithOp::Div => a.div(b, l)?,
    })
}

/// Strict: an interval touching zero is indeterminate.
pub fn fi_sign(a: &FloatInterval) -> IntervalSign {
    if a.lo.signum() > 0 {
        IntervalSign::Positive
    } else if a.hi.signum() < 0 {
        IntervalSign::Negative
    } else {
        IntervalSign::Indeterminate
    }
}
