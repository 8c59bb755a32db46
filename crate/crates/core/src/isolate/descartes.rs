//! Descartes' rule of signs on integer polynomials, plus the bisection tree
//! used as the base isolator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// Coefficients, lowest degree first.
pub(crate) type IntPoly = Vec<BigInt>;

/// Number of sign changes in the coefficient sequence, zeros skipped.
pub(crate) fn sign_variations(p: &[BigInt]) -> u32 {
    let mut count = 0;
    let mut last = 0i8;
    for c in p {
        let s = match c.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => continue,
            num_bigint::Sign::Plus => 1,
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `p(x + s)` in place.
pub(crate) fn taylor_shift(p: &mut [BigInt], s: &BigInt) {
    let n = p.len();
    if n < 2 || s.is_zero() {
        return;
    }
    if s.is_one() {
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = p[j + 1].clone();
                p[j] += t;
            }
        }
        return;
    }
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let t = &p[j + 1] * s;
            p[j] += t;
        }
    }
}

/// Strip the largest power of two dividing every coefficient.
pub(crate) fn strip_twos(p: &mut [BigInt]) {
    let tz = p.iter().filter_map(|c| c.trailing_zeros()).min().unwrap_or(0);
    if tz > 0 {
        for c in p.iter_mut() {
            *c >>= tz as usize;
        }
    }
}

/// Descartes bound for roots of `p` in the open unit interval (0, 1):
/// variations of `(x+1)^n p(1/(x+1))`.
pub(crate) fn unit_interval_bound(p: &[BigInt]) -> u32 {
    let mut r: IntPoly = p.iter().rev().cloned().collect();
    taylor_shift(&mut r, &BigInt::one());
    sign_variations(&r)
}

/// Integer polynomial whose roots in (0, 1) correspond, in order, to the
/// roots of `p` in the open interval `(lo, hi)`.
pub(crate) fn to_unit_interval(p: &[BigInt], lo: &Rational, hi: &Rational) -> IntPoly {
    assert!(lo < hi, "empty interval");
    let n = p.len().saturating_sub(1);
    // Common denominator q: lo = a/q, hi = b/q.
    let q = lo.denom().lcm(hi.denom());
    let a = lo.numer() * (&q / lo.denom());
    let b = hi.numer() * (&q / hi.denom());
    // q^n p(x/q): coefficient i times q^(n-i).
    let mut r: IntPoly = p.to_vec();
    if !q.is_one() {
        let mut qp = BigInt::one();
        for i in (0..=n).rev() {
            r[i] *= &qp;
            qp *= &q;
        }
    }
    taylor_shift(&mut r, &a);
    // x -> (b - a) x
    let w = b - a;
    if !w.is_one() {
        let mut wp = BigInt::one();
        for c in r.iter_mut() {
            *c *= &wp;
            wp *= &w;
        }
    }
    r
}

/// Descartes bound on the number of roots of `p` in the open interval.
pub(crate) fn descartes_bound(p: &[BigInt], lo: &Rational, hi: &Rational) -> u32 {
    if p.len() <= 1 {
        return 0;
    }
    unit_interval_bound(&to_unit_interval(p, lo, hi))
}

pub(crate) fn eval_int(p: &[BigInt], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + Rational::from_integer(c.clone());
    }
    acc
}

/// Exact number of distinct roots of a square-free `p` in the open interval
/// `(lo, hi)`, by Descartes-guided bisection.
pub(crate) fn exact_root_count(p: &[BigInt], lo: &Rational, hi: &Rational) -> u32 {
    let mut stack = vec![(lo.clone(), hi.clone())];
    let mut total = 0;
    while let Some((a, b)) = stack.pop() {
        match descartes_bound(p, &a, &b) {
            0 => {}
            1 => total += 1,
            _ => {
                let m = (&a + &b) / Rational::from_integer(2.into());
                if eval_int(p, &m).is_zero() {
                    total += 1;
                }
                stack.push((a, m.clone()));
                stack.push((m, b));
            }
        }
    }
    total
}

/// Output of the bisection tree on `(0, 2^k)`: open intervals holding
/// exactly one root each, and roots found exactly at bisection points.
#[derive(Debug, Default)]
pub(crate) struct PositiveRoots {
    pub open: Vec<(Rational, Rational)>,
    pub exact: Vec<Rational>,
}

/// Smallest `k` such that every root of `p` has modulus below `2^k`
/// (Fujiwara's bound, rounded up to a power of two).
pub(crate) fn root_bound_log2(p: &[BigInt]) -> i64 {
    let n = p.len() - 1;
    let lead = p[n].abs();
    // |z| <= 2 max_i (|a_{n-i}| / |a_n|)^(1/i); requiring
    // |a_{n-i}| <= |a_n| 2^((k-1) i) for every i makes that at most 2^k.
    let mut k: i64 = -60;
    for i in 1..=n {
        let c = p[n - i].abs();
        if c.is_zero() {
            continue;
        }
        // smallest t with c <= lead * 2^(t*i), then k-1 >= t.
        let gap = c.bits() as i64 - lead.bits() as i64;
        let mut t = gap.div_euclid(i as i64) - 1;
        loop {
            let ok = if t >= 0 {
                c <= (&lead << (t as usize * i))
            } else {
                (&c << ((-t) as usize * i)) <= lead
            };
            if ok {
                break;
            }
            t += 1;
        }
        k = k.max(t + 1);
    }
    // One extra doubling so no root sits on the boundary.
    k + 1
}

/// Isolate the roots of a square-free integer polynomial `p` in `(0, 2^k)`.
pub(crate) fn isolate_positive(p: &[BigInt], k: i64) -> PositiveRoots {
    let n = p.len() - 1;
    let mut out = PositiveRoots::default();
    // q(x) = p(2^k x), kept up to positive scalars.
    let mut root: IntPoly = p.to_vec();
    for (i, c) in root.iter_mut().enumerate() {
        if k >= 0 {
            *c <<= (k as usize) * i;
        }
    }
    if k < 0 {
        // multiply coefficient i by 2^((n - i) * |k|)
        for (i, c) in root.iter_mut().enumerate() {
            *c <<= ((-k) as usize) * (n - i);
        }
    }
    strip_twos(&mut root);
    let scale = |c: &BigInt, j: u32| -> Rational {
        // c / 2^j in the unit coordinates, times 2^k.
        let v = Rational::new(c.clone(), BigInt::one() << j as usize);
        if k >= 0 {
            v * Rational::from_integer(BigInt::one() << k as usize)
        } else {
            v / Rational::from_integer(BigInt::one() << (-k) as usize)
        }
    };
    // Node: polynomial for (c/2^j, (c+1)/2^j).
    let mut stack: Vec<(IntPoly, BigInt, u32)> = vec![(root, BigInt::zero(), 0)];
    while let Some((q, c, j)) = stack.pop() {
        match unit_interval_bound(&q) {
            0 => {}
            1 => out.open.push((scale(&c, j), scale(&(&c + 1u32), j))),
            _ => {
                // Left child 2^n q(x/2), right child its shift by one.
                let mut left = q;
                for (i, coef) in left.iter_mut().enumerate() {
                    *coef <<= n - i;
                }
                let mut right = left.clone();
                taylor_shift(&mut right, &BigInt::one());
                strip_twos(&mut left);
                strip_twos(&mut right);
                let c2: BigInt = &c << 1;
                if right[0].is_zero() {
                    out.exact.push(scale(&(&c2 + 1u32), j + 1));
                }
                stack.push((right, &c2 + 1u32, j + 1));
                stack.push((left, c2, j + 1));
            }
        }
    }
    out
}
