//! Exact rational mode: every iterate is the exact value the algorithms
//! define, so results are reproducible digit for digit.

use num_bigint::BigInt;

use crate::arith::gmp::{Mpq, MpzPoly};
use crate::arith::Rational;
use crate::poly::Poly;

use super::driver::Engine;

pub(crate) struct ExactEngine {
    f: MpzPoly,
    df: MpzPoly,
    ten_l: Mpq,
}

fn prepared(p: &Poly) -> MpzPoly {
    let (content, prim) = p.content_and_primitive();
    MpzPoly::new(&content, &prim)
}

impl ExactEngine {
    pub fn new(f: &Poly, digits: u32) -> Self {
        let ten_l = Rational::from_integer(num_traits::pow(BigInt::from(10), digits as usize));
        ExactEngine {
            f: prepared(f),
            df: prepared(&f.derivative()),
            ten_l: Mpq::from_rational(&ten_l),
        }
    }
}

impl Engine for ExactEngine {
    type Point = Mpq;
    type Value = Mpq;

    fn eval(&mut self, x: &Mpq) -> Option<Mpq> {
        let u = self.f.eval(x);
        (!u.is_zero()).then_some(u)
    }

    fn newton(&mut self, from: &Mpq, value: &Mpq, _previous: Option<&Mpq>) -> Mpq {
        let d = self.df.eval(from);
        assert!(!d.is_zero(), "f' vanished inside a monotonic interval");
        from.sub(&value.div(&d))
    }

    fn secant(&mut self, x: &Mpq, u: &Mpq, c: &Mpq, v: &Mpq) -> Mpq {
        assert!(u.signum() * v.signum() < 0, "secant needs a sign change");
        let num = x.mul(v).sub(&c.mul(u));
        num.div(&v.sub(u))
    }

    fn inside(&self, z: &Mpq, a: &Mpq, b: &Mpq) -> bool {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        lo <= z && z <= hi
    }

    fn narrow(&self, x: &Mpq, c: &Mpq) -> bool {
        let (ax, ac) = (x.abs(), c.abs());
        let m = if ax <= ac { ax } else { ac };
        x.sub(c).abs().mul(&self.ten_l) <= m
    }

    fn rational(&self, p: &Mpq) -> Rational {
        p.to_rational()
    }
}
