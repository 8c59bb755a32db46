//! Interval mode: the same iteration run on outward-rounded float
//! intervals at an adaptive working precision.
//!
//! Iterates are exact dyadic rationals. Each new point is computed as a
//! float interval certainly containing the exact step, and the endpoint
//! farther from the root is kept: Newton steps land on the Newton side and
//! secant steps on the secant side, so that endpoint lies on the same side
//! and the root stays bracketed. Sign decisions are certified; when floats
//! cannot decide, precision escalates and finally exact evaluation takes
//! over, so an iterate that hits a rational root is recognised exactly.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::decimal::log10_abs;
use crate::arith::gmp::{Mpq, MpzPoly};
use crate::arith::{round_out, FloatInterval, IntervalSign, Precision, Rational};
use crate::poly::{sign_of, Poly};

use super::driver::Engine;
use super::{Method, PrecisionPolicy};

/// Result of a certified sign evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignEval {
    /// -1, 0 or 1; 0 only when exact evaluation found `f(q) = 0`.
    pub sign: i32,
    /// Contains `f(q)`; excludes zero whenever `sign != 0`.
    pub enclosure: FloatInterval,
    /// Last float precision used.
    pub precision: Precision,
    /// Whether the exact fallback decided the sign.
    pub exact: bool,
}

struct Evaluator {
    f: Poly,
    exact: MpzPoly,
    escalation: u32,
    threshold: u32,
}

impl Evaluator {
    fn new(f: &Poly, policy: &PrecisionPolicy) -> Self {
        let (content, prim) = f.content_and_primitive();
        Evaluator {
            f: f.clone(),
            exact: MpzPoly::new(&content, &prim),
            escalation: policy.escalation,
            threshold: policy.exact_fallback_threshold,
        }
    }

    fn exact_value(&self, q: &Rational) -> Rational {
        self.exact.eval(&Mpq::from_rational(q)).to_rational()
    }

    fn sign_eval(&self, q: &Rational, start: Precision) -> SignEval {
        let mut l = start;
        loop {
            let e = self.f.eval_interval(&round_out(q, l), l);
            let sign = match e.sign() {
                IntervalSign::Negative => -1,
                IntervalSign::Positive => 1,
                IntervalSign::Indeterminate => 0,
            };
            if sign != 0 {
                return SignEval {
                    sign,
                    enclosure: e,
                    precision: l,
                    exact: false,
                };
            }
            let next = l.get().saturating_mul(self.escalation);
            if next > self.threshold {
                let v = self.exact_value(q);
                return SignEval {
                    sign: sign_of(&v),
                    enclosure: round_out(&v, l),
                    precision: l,
                    exact: true,
                };
            }
            l = Precision::digits(next);
        }
    }
}

/// Certify the sign of `f(q)`, starting at `policy.initial_l` and
/// escalating on indeterminate results.
pub fn certified_sign_eval(f: &Poly, q: &Rational, policy: &PrecisionPolicy) -> SignEval {
    Evaluator::new(f, policy).sign_eval(q, Precision::digits(policy.initial_l))
}

pub(crate) struct IntervalEngine {
    f: Evaluator,
    df: Evaluator,
    /// The Newton side lies above the root.
    up: bool,
    base: u32,
    work: u32,
    order: u32,
    guard: u32,
    cap: u32,
    escalation: u32,
    ten_l: BigInt,
    last_width: Option<Rational>,
}

impl IntervalEngine {
    pub fn new(f: &Poly, x0: &Rational, c0: &Rational, digits: u32, method: Method, policy: &PrecisionPolicy) -> Self {
        let df = f.derivative();
        IntervalEngine {
            f: Evaluator::new(f, policy),
            df: Evaluator::new(&df, policy),
            up: x0 > c0,
            base: policy.initial_l,
            work: policy.initial_l,
            order: match method {
                Method::Lz1 => 3,
                Method::Lz2 => 4,
            },
            guard: conditioning_guard(f, &df, x0, c0),
            cap: digits + 5,
            escalation: policy.escalation,
            ten_l: num_traits::pow(BigInt::from(10), digits as usize),
            last_width: None,
        }
    }

    fn l(&self) -> Precision {
        Precision::digits(self.work)
    }

    /// Enclosure of `f'(q)` that excludes zero; `f'` has no root on the
    /// refinement interval, so escalation always terminates.
    fn derivative_at(&self, q: &Rational) -> (FloatInterval, Precision) {
        let mut l = self.l();
        loop {
            let d = self.df.f.eval_interval(&round_out(q, l), l);
            if !d.contains_zero() {
                return (d, l);
            }
            let next = l.get().saturating_mul(self.escalation);
            if next > self.df.threshold {
                let v = self.df.exact_value(q);
                assert!(!v.is_zero(), "f' vanished inside a monotonic interval");
                return (round_out(&v, l), l);
            }
            l = Precision::digits(next);
        }
    }

    /// Keep the endpoint of `r` farther from the root on the Newton side
    /// (`newton_side`) or the secant side, never retreating past `previous`.
    fn outer(&self, r: &FloatInterval, newton_side: bool, previous: Option<&Rational>) -> Rational {
        let above = newton_side == self.up;
        let p = if above { r.hi() } else { r.lo() }.to_rational();
        match previous {
            Some(prev) if above => p.min(prev.clone()),
            Some(prev) => p.max(prev.clone()),
            None => p,
        }
    }
}

/// Decimal digits lost to cancellation when evaluating near the root:
/// `log10(sum |a_i| r^i / (min |f'| * min |x|))` over the interval, plus a
/// fixed margin.
fn conditioning_guard(f: &Poly, df: &Poly, a: &Rational, b: &Rational) -> u32 {
    let (a_abs, b_abs) = (a.abs(), b.abs());
    let r = a_abs.clone().max(b_abs.clone());
    let m = a_abs.min(b_abs);
    let mut norm = Rational::zero();
    for c in f.coeffs().iter().rev() {
        norm = norm * &r + c.abs();
    }
    let slope = df.eval(a).abs().min(df.eval(b).abs());
    let loss = log10_abs(&norm) - log10_abs(&(slope * m));
    let deg = f.deg().max(1) as f64;
    5 + loss.max(0.0).ceil() as u32 + deg.log10().ceil() as u32
}

impl Engine for IntervalEngine {
    type Point = Rational;
    type Value = FloatInterval;

    fn eval(&mut self, x: &Rational) -> Option<FloatInterval> {
        let s = self.f.sign_eval(x, self.l());
        (s.sign != 0).then_some(s.enclosure)
    }

    fn newton(&mut self, from: &Rational, value: &FloatInterval, previous: Option<&Rational>) -> Rational {
        let (d, l) = self.derivative_at(from);
        let xs = round_out(from, l);
        let step = value.div(&d, l).expect("derivative enclosure excludes zero");
        self.outer(&xs.sub(&step, l), true, previous)
    }

    fn secant(&mut self, x: &Rational, u: &FloatInterval, c: &Rational, v: &FloatInterval) -> Rational {
        let l = self.l();
        let (xs, cs) = (round_out(x, l), round_out(c, l));
        // c - v (c - x) / (v - u): rounding errors in u and v are not
        // amplified by the small difference c - x.
        let den = v.sub(u, l);
        assert!(!den.contains_zero(), "secant needs a certified sign change");
        let step = v.mul(&cs.sub(&xs, l), l).div(&den, l).expect("denominator excludes zero");
        self.outer(&cs.sub(&step, l), false, Some(c))
    }

    fn inside(&self, z: &Rational, a: &Rational, b: &Rational) -> bool {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        lo <= z && z <= hi
    }

    fn narrow(&self, x: &Rational, c: &Rational) -> bool {
        let m = x.abs().min(c.abs());
        (x - c).abs() * &self.ten_l <= m
    }

    fn rational(&self, p: &Rational) -> Rational {
        p.clone()
    }

    fn prepare(&mut self, x: &Rational, c: &Rational) {
        let width = (x - c).abs();
        if self.last_width.as_ref().is_some_and(|w| &width >= w) {
            // No progress since the last step: rounding dominates.
            self.base = self.base.saturating_mul(self.escalation);
        }
        let m = x.abs().min(c.abs());
        let digits = if width.is_zero() || m.is_zero() {
            0
        } else {
            (-log10_abs(&(&width / &m))).floor().max(0.0) as u32
        };
        let wanted = (self.order * (digits + 1)).min(self.cap) + self.guard;
        self.work = self.base.max(wanted);
        self.last_width = Some(width);
    }

    fn precision(&self) -> Option<u32> {
        Some(self.work)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn policy(initial: u32) -> PrecisionPolicy {
        PrecisionPolicy::new(initial, 2, 200).unwrap()
    }

    #[test]
    fn sign_of_constant_term() {
        let f = Poly::from_ints(&[7, -20, 0, 1]);
        let s = certified_sign_eval(&f, &int(0), &policy(12));
        assert_eq!(s.sign, 1);
        assert!(s.enclosure.contains(&int(7)));
        assert_eq!(s.precision, Precision::digits(12));
        assert!(!s.exact);
    }

    #[test]
    fn exact_zero_recognition() {
        let f = Poly::from_ints(&[-4, 0, 1]);
        let s = certified_sign_eval(&f, &int(2), &policy(12));
        assert_eq!(s.sign, 0);
        assert!(s.exact);
        assert!(s.enclosure.is_point() && s.enclosure.contains(&int(0)));
    }

    #[test]
    fn escalates_then_certifies() {
        let f = Poly::from_ints(&[7, -20, 0, 1]);
        let q = rat(4389, 1024);
        let s = certified_sign_eval(&f, &q, &policy(3));
        assert_eq!(s.sign, f.sign_at(&q));
        assert_eq!(s.sign, 1);
        assert!(s.precision > Precision::digits(3));
        assert!(s.enclosure.contains(&f.eval(&q)));
    }
}
