//! Real-root isolation: a Descartes bisection base isolator and the
//! monotonic convex refinement on top of it, which keeps bisecting until
//! neither `f'` nor `f''` vanishes on an interval.

pub(crate) mod descartes;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::{is_square_free, poly_gcd, Poly};

use descartes::{descartes_bound, eval_int, exact_root_count, isolate_positive, root_bound_log2, IntPoly};

/// `[lo, hi]` with rational endpoints; `lo == hi` encodes an exactly known
/// root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClosedInterval {
    lo: Rational,
    hi: Rational,
}

impl ClosedInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval(format!("lower endpoint {lo} exceeds upper {hi}")));
        }
        Ok(ClosedInterval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        ClosedInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, other: &ClosedInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    /// `(hi - lo) / min(|lo|, |hi|)`; `None` when the interval touches zero
    /// and is not a point.
    pub fn relative_width(&self) -> Option<Rational> {
        if self.is_point() {
            return Some(Rational::zero());
        }
        if self.contains_zero() {
            return None;
        }
        Some(self.width() / self.lo.abs().min(self.hi.abs()))
    }
}

impl fmt::Debug for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for ClosedInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ClosedInterval", 2)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.end()
    }
}

/// Sorted, pairwise disjoint intervals, one per real root of `polynomial`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Isolation {
    pub intervals: Vec<ClosedInterval>,
    #[serde(serialize_with = "serialize_poly")]
    pub polynomial: Poly,
}

fn serialize_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.render())
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

fn int_poly(f: &Poly) -> IntPoly {
    f.content_and_primitive().1
}

fn check_input(f: &Poly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if !is_square_free(f) {
        return Err(Error::NotSquareFree);
    }
    Ok(())
}

/// Narrow `(lo, hi)`, which holds exactly one root of `p` in its interior,
/// until neither endpoint is a root. Returns a point when a bisection lands
/// on the root itself.
fn clear_root_endpoints(p: &[BigInt], mut lo: Rational, mut hi: Rational) -> ClosedInterval {
    while eval_int(p, &lo).is_zero() || eval_int(p, &hi).is_zero() {
        let m = (&lo + &hi) / two();
        if eval_int(p, &m).is_zero() {
            return ClosedInterval::point(m);
        }
        if descartes_bound(p, &lo, &m) == 0 {
            lo = m;
        } else if exact_root_count(p, &lo, &m) == 1 {
            hi = m;
        } else {
            lo = m;
        }
    }
    ClosedInterval { lo, hi }
}

/// One sign-guided bisection step on an interval whose endpoints are
/// nonroots of opposite sign. Returns the half holding the root, or the
/// midpoint as a point interval if it is the root.
fn bisect_step(f: &Poly, iv: &ClosedInterval) -> ClosedInterval {
    let m = iv.midpoint();
    let sm = f.sign_at(&m);
    if sm == 0 {
        ClosedInterval::point(m)
    } else if sm == f.sign_at(&iv.lo) {
        ClosedInterval { lo: m, hi: iv.hi.clone() }
    } else {
        ClosedInterval { lo: iv.lo.clone(), hi: m }
    }
}

/// Base isolation of a nonconstant square-free polynomial. Non-point
/// intervals have dyadic endpoints that are not roots; exact rational roots
/// met during bisection come back as point intervals.
pub fn isolate_roots(f: &Poly) -> Result<Isolation> {
    check_input(f)?;
    let p = int_poly(f);
    let k = root_bound_log2(&p);

    let mut points: Vec<Rational> = Vec::new();
    let mut open: Vec<(Rational, Rational)> = Vec::new();
    if p[0].is_zero() {
        points.push(Rational::zero());
    }
    let pos = isolate_positive(&p, k);
    points.extend(pos.exact);
    open.extend(pos.open);

    let reflected: IntPoly = p
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    let neg = isolate_positive(&reflected, k);
    points.extend(neg.exact.into_iter().map(|x| -x));
    open.extend(neg.open.into_iter().map(|(a, b)| (-b, -a)));

    let mut intervals: Vec<ClosedInterval> = points.into_iter().map(ClosedInterval::point).collect();
    for (lo, hi) in open {
        intervals.push(clear_root_endpoints(&p, lo, hi));
    }
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo));
    separate_neighbours(f, &mut intervals);
    Ok(Isolation {
        intervals,
        polynomial: f.clone(),
    })
}

/// Closed neighbours may share an endpoint; bisect the right-hand one until
/// they are strictly disjoint.
fn separate_neighbours(f: &Poly, intervals: &mut [ClosedInterval]) {
    for i in 1..intervals.len() {
        while intervals[i].lo <= intervals[i - 1].hi && !intervals[i].is_point() {
            intervals[i] = bisect_step(f, &intervals[i]);
        }
        debug_assert!(intervals[i].lo > intervals[i - 1].hi);
    }
}

/// Whether `g` has no real root in the closed interval, decided exactly.
/// Together with the sign at one endpoint this certifies that `g` keeps a
/// constant sign on the interval.
pub fn sign_constant(g: &Poly, iv: &ClosedInterval) -> bool {
    if g.is_zero() {
        return false;
    }
    if g.is_constant() {
        return true;
    }
    if g.sign_at(&iv.lo) == 0 || g.sign_at(&iv.hi) == 0 {
        return false;
    }
    if iv.is_point() {
        return true;
    }
    let p = int_poly(g);
    if descartes_bound(&p, &iv.lo, &iv.hi) == 0 {
        return true;
    }
    // Only the distinct roots matter: count them on the square-free part.
    let sqf = g.exact_div(&poly_gcd(g, &g.derivative()));
    exact_root_count(&int_poly(&sqf), &iv.lo, &iv.hi) == 0
}

/// Descartes exclusion: zero sign variations, so no root in the open
/// interval. Conservative (a `false` may still be root-free).
fn excluded(p: &IntPoly, iv: &ClosedInterval) -> bool {
    p.len() <= 1 || descartes_bound(p, &iv.lo, &iv.hi) == 0
}

/// Whether a non-point interval is ready for refinement: it excludes zero,
/// `f` is nonzero at both ends and `f'`, `f''` have no root on it.
fn is_monotonic_convex(
    f: &Poly,
    d1: &(Poly, IntPoly),
    d2: &(Poly, IntPoly),
    iv: &ClosedInterval,
) -> bool {
    if iv.lo.is_zero() || iv.hi.is_zero() || iv.lo.is_negative() != iv.hi.is_negative() {
        return false;
    }
    if f.sign_at(&iv.lo) == 0 || f.sign_at(&iv.hi) == 0 {
        return false;
    }
    [d1, d2].iter().all(|(g, p)| {
        g.sign_at(&iv.lo) != 0 && g.sign_at(&iv.hi) != 0 && excluded(p, iv)
    })
}

/// Monotonic convex isolation: every non-point interval has `f'` and `f''`
/// free of roots, excludes zero, and `f` is nonzero at both ends.
pub fn mci(f: &Poly) -> Result<Isolation> {
    check_input(f)?;
    if f.deg() == 1 {
        let root = -f.coeff(0) / f.coeff(1);
        return Ok(Isolation {
            intervals: vec![ClosedInterval::point(root)],
            polynomial: f.clone(),
        });
    }
    let d1p = f.derivative();
    let d2p = d1p.derivative();
    if !poly_gcd(f, &d2p).is_constant() {
        return Err(Error::MciNotGuaranteed);
    }
    let d1 = (d1p.clone(), int_poly(&d1p));
    let d2 = (d2p.clone(), int_poly(&d2p));
    let base = isolate_roots(f)?;
    let intervals = base
        .intervals
        .into_iter()
        .map(|iv| refine_to_mci(f, &d1, &d2, iv))
        .collect();
    Ok(Isolation {
        intervals,
        polynomial: f.clone(),
    })
}

fn refine_to_mci(f: &Poly, d1: &(Poly, IntPoly), d2: &(Poly, IntPoly), mut iv: ClosedInterval) -> ClosedInterval {
    while !iv.is_point() && !is_monotonic_convex(f, d1, d2, &iv) {
        iv = bisect_step(f, &iv);
    }
    iv
}

/// Bisect a single isolating interval of `f` until it is monotonic convex.
/// Used when an interval comes from somewhere other than [`mci`].
pub fn narrow_to_mci(f: &Poly, iv: ClosedInterval) -> ClosedInterval {
    let d1p = f.derivative();
    let d2p = d1p.derivative();
    let d1 = (d1p.clone(), int_poly(&d1p));
    let d2 = (d2p.clone(), int_poly(&d2p));
    refine_to_mci(f, &d1, &d2, iv)
}

/// Check that `iv` can be handed to a refiner: `lo < hi`, `lo * hi > 0`,
/// a sign change of `f`, and no root of `f'` or `f''` on it.
pub fn validate_refinement_input(f: &Poly, iv: &ClosedInterval) -> Result<()> {
    if iv.lo >= iv.hi {
        return Err(Error::InvalidInterval(format!("need lo < hi, got {iv}")));
    }
    if (&iv.lo * &iv.hi) <= Rational::zero() {
        return Err(Error::InvalidInterval(format!("{iv} touches or contains zero")));
    }
    if f.sign_at(&iv.lo) * f.sign_at(&iv.hi) >= 0 {
        return Err(Error::NotBracketing);
    }
    let d1 = f.derivative();
    let d2 = d1.derivative();
    if !sign_constant(&d1, iv) || !sign_constant(&d2, iv) {
        return Err(Error::NotMonotonicConvex);
    }
    Ok(())
}
