//! Test oracles built only on `num-bigint`/`num-rational`, sharing no code
//! with the library: Sturm root counting, decimal expansion, random
//! polynomial generation and a fixed-point cosine for Chebyshev roots.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Ascending coefficients with trailing zeros removed.
pub fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn eval(p: &[Q], x: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

pub fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn deriv(p: &[Q]) -> Vec<Q> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Q::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Quotient and remainder of `a` by nonzero `b`.
pub fn div_rem(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quo = vec![Q::zero(); r.len().saturating_sub(db)];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap().clone() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[i + k] = &r[i + k] - &f * c;
        }
        quo[k] = f;
        r.pop();
        r = trim(r);
    }
    (trim(quo), r)
}

pub fn rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    div_rem(a, b).1
}

/// `p / gcd(p, p')`: same roots, all simple.
pub fn square_free_part(p: &[Q]) -> Vec<Q> {
    let d = deriv(p);
    if d.is_empty() {
        return trim(p.to_vec());
    }
    div_rem(p, &gcd(p, &d)).0
}

pub fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

pub fn is_square_free(p: &[Q]) -> bool {
    gcd(p, &deriv(p)).len() == 1
}

pub fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    trim(out)
}

pub struct Sturm(Vec<Vec<Q>>);

impl Sturm {
    /// Sequence of the square-free part `s`: `s, s', -rem(...)`, so that
    /// distinct roots are counted even when `p` has repeated ones.
    pub fn new(p: &[Q]) -> Self {
        let mut seq = vec![square_free_part(p)];
        let d = deriv(&seq[0]);
        if !d.is_empty() {
            seq.push(d);
        }
        while seq.len() >= 2 {
            let n = seq.len();
            let r = rem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(r.into_iter().map(|c| -c).collect());
        }
        Sturm(seq)
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let nz: Vec<i32> = signs.filter(|&s| s != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn at(&self, x: &Q) -> usize {
        Self::variations(self.0.iter().map(|p| sign(&eval(p, x))))
    }

    fn at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.0.iter().map(|p| {
            let s = sign(p.last().unwrap());
            if positive || (p.len() - 1) % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Distinct real roots.
    pub fn total(&self) -> usize {
        self.at_infinity(false) - self.at_infinity(true)
    }

    /// Distinct roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &Q, b: &Q) -> usize {
        let p = &self.0[0];
        let at_a = usize::from(eval(p, a).is_zero());
        if a == b {
            return at_a;
        }
        // (a, b] by Sturm's theorem, valid even when a or b is a root.
        self.at(a) - self.at(b) + at_a
    }
}

/// Distinct real roots of `p` as tiny disjoint intervals `[lo, hi]` with a
/// sign change (or points), found by Sturm-guided bisection until the
/// width is below `eps`.
pub fn root_intervals(p: &[Q], eps: &Q) -> Vec<(Q, Q)> {
    let s = Sturm::new(p);
    let bound = {
        let lead = p.last().unwrap().abs();
        let m = p.iter().map(|c| c.abs() / &lead).fold(Q::zero(), |a, b| if b > a { b } else { a });
        m + qi(1)
    };
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = s.count_closed(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 && (&b - &a) < *eps {
            if eval(p, &a).is_zero() {
                out.push((a.clone(), a));
            } else if eval(p, &b).is_zero() {
                out.push((b.clone(), b));
            } else {
                out.push((a, b));
            }
            continue;
        }
        let m = (&a + &b) / qi(2);
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out.dedup();
    out
}

/// Random square-free integer polynomial of exact degree `deg` with
/// coefficients in `[-bound, bound]`.
pub fn random_square_free<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> Vec<Q> {
    loop {
        let mut p: Vec<Q> = (0..=deg).map(|_| qi(rng.gen_range(-bound..=bound))).collect();
        if p[deg].is_zero() {
            continue;
        }
        p = trim(p);
        if is_square_free(&p) {
            return p;
        }
    }
}

/// First `digits` significant decimal digits of `|x|` with the decimal
/// point placed, truncated; e.g. `4.2856312`.
pub fn decimal_prefix(x: &Q, digits: usize) -> String {
    let x = x.abs();
    let mut int = x.to_integer();
    let mut frac = x - Q::from_integer(int.clone());
    let mut s = int.to_string();
    let mut significant = if int.is_zero() { 0 } else { s.len() };
    if significant >= digits {
        s.truncate(digits);
        return s;
    }
    s.push('.');
    let mut started = !int.is_zero();
    while significant < digits {
        frac *= qi(10);
        int = frac.to_integer();
        frac -= Q::from_integer(int.clone());
        let d = int.to_string();
        if d != "0" {
            started = true;
        }
        if started {
            significant += 1;
        }
        s.push_str(&d);
    }
    s
}

/// Fixed-point number `v / 10^scale`.
pub struct Fixed {
    pub v: BigInt,
    pub scale: u32,
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// `arctan(1/m) * 10^scale`, truncated term by term.
fn arctan_inv(m: i64, scale: u32) -> BigInt {
    let one = pow10(scale);
    let m2 = BigInt::from(m * m);
    let mut term = &one / BigInt::from(m);
    let mut sum = term.clone();
    let mut k = 1i64;
    while !term.is_zero() {
        term = &term / &m2;
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        k += 1;
    }
    sum
}

/// `pi` to `scale` decimals (Machin), error below `10 * 10^-scale`.
pub fn pi(scale: u32) -> Fixed {
    let v = arctan_inv(5, scale) * 16 - arctan_inv(239, scale) * 4;
    Fixed { v, scale }
}

/// `cos(t)` for fixed-point `t` by its Taylor series; error below
/// `(terms + 10) * 10^-scale` for `|t| <= 4`.
pub fn cos(t: &Fixed) -> Fixed {
    let one = pow10(t.scale);
    let t2 = (&t.v * &t.v).div_floor(&one);
    let mut term = one.clone();
    let mut sum = one.clone();
    let mut k = 1i64;
    while !term.is_zero() {
        term = -(&term * &t2).div_floor(&one) / BigInt::from((2 * k - 1) * (2 * k));
        sum += &term;
        k += 1;
    }
    Fixed { v: sum, scale: t.scale }
}

/// The `j`-th smallest root of `T_n` (1-based) as `(value, error bound)`:
/// `cos((2k - 1) pi / (2n))` with `k = n + 1 - j`.
pub fn chebyshev_root(n: u32, j: u32, digits: u32) -> (Q, Q) {
    let scale = digits + 20;
    let p = pi(scale);
    let k = i64::from(n + 1 - j);
    let t = Fixed {
        v: p.v * BigInt::from(2 * k - 1) / BigInt::from(2 * i64::from(n)),
        scale,
    };
    let c = cos(&t);
    let value = Q::new(c.v, pow10(scale));
    let err = Q::new(BigInt::from(1000), pow10(scale));
    (value, err)
}

/// Sign of `p(n/d)` for `d > 0` from `sum c_i n^i d^(deg - i)` with integer
/// `c_i`: integer products only, so endpoints of millions of bits stay
/// cheap (rational arithmetic would reduce by a gcd after every step).
pub fn sign_at_ratio(p: &[Q], n: &BigInt, d: &BigInt) -> i32 {
    let lcm = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut acc = ints.last().unwrap().clone();
    let mut dpow = BigInt::one();
    for c in ints.iter().rev().skip(1) {
        dpow *= d;
        acc = acc * n + c * &dpow;
    }
    sign(&Q::from_integer(acc.signum()))
}

/// `sign(p(x))`, fast for huge `x`.
pub fn sign_at(p: &[Q], x: &Q) -> i32 {
    sign_at_ratio(p, x.numer(), x.denom())
}

/// `x <= y` by cross-multiplication.
pub fn le(x: &Q, y: &Q) -> bool {
    x.numer() * y.denom() <= y.numer() * x.denom()
}

/// `hi - lo <= 10^-digits * min(|lo|, |hi|)` with `lo`, `hi` of one sign,
/// or a point; integer products only.
pub fn relative_ok(lo: &Q, hi: &Q, digits: u32) -> bool {
    if lo == hi {
        return true;
    }
    if sign(lo) != sign(hi) || lo.is_zero() {
        return false;
    }
    let (a, b) = (lo.numer() * hi.denom(), hi.numer() * lo.denom());
    (&b - &a) * pow10(digits) <= a.abs().min(b.abs())
}

pub fn to_library(p: &[Q]) -> rootrefine::Poly {
    rootrefine::Poly::new(p.to_vec())
}

pub fn one() -> Q {
    Q::one()
}
