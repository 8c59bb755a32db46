//! Hybrid Newton/secant refinement of a monotonic convex isolating interval
//! to relative width `10^-L`.
//!
//! LZ1 runs Newton from the endpoint where `f * f'' > 0` and the secant on
//! the opposite bound; it converges quadratically. LZ2 launches Newton from
//! the secant-side bound instead, so the two bounds leapfrog each other
//! around the root; after a short secant-only stage that keeps the Newton
//! point inside the interval, it converges cubically.
//!
//! Both run either in exact rational arithmetic or in float interval
//! arithmetic with certified signs.

mod driver;
mod exact;
mod interval;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use num_traits::Zero;

use crate::arith::decimal::{common_digits, log10_abs};
use crate::arith::gmp::Mpq;
use crate::arith::{decimal_size, Rational};
use crate::error::{Error, Result};
use crate::isolate::{validate_refinement_input, ClosedInterval};
use crate::poly::Poly;

pub use interval::{certified_sign_eval, SignEval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lz1,
    Lz2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Interval,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Lz1 => "lz1",
            Method::Lz2 => "lz2",
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Interval => "interval",
        })
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "lz1" => Ok(Method::Lz1),
            "lz2" => Ok(Method::Lz2),
            other => Err(format!("unknown method {other:?}; expected lz1 or lz2")),
        }
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Mode::Exact),
            "interval" => Ok(Mode::Interval),
            other => Err(format!("unknown mode {other:?}; expected exact or interval")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefineConfig {
    /// Target relative precision `10^-digits`.
    pub digits: u32,
    pub mode: Mode,
    pub method: Method,
    /// Safety cap on loop passes; never reached on valid input.
    pub max_iterations: usize,
}

impl RefineConfig {
    /// Panics if `digits` is zero.
    pub fn new(digits: u32, method: Method, mode: Mode) -> Self {
        assert!(digits >= 1, "target precision must be at least one digit");
        RefineConfig {
            digits,
            mode,
            method,
            max_iterations: Self::default_max_iterations(digits),
        }
    }

    /// `64 + 2 * ceil(log2(L + 1))`.
    pub fn default_max_iterations(digits: u32) -> usize {
        let n = u64::from(digits) + 1;
        let log = 64 - (n - 1).leading_zeros() as usize;
        64 + 2 * log
    }
}

/// Float precision control for interval mode, in decimal digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub initial_l: u32,
    /// Factor applied to the precision when a sign is indeterminate.
    pub escalation: u32,
    /// Beyond this many digits signs are decided by exact evaluation.
    pub exact_fallback_threshold: u32,
}

impl PrecisionPolicy {
    pub fn new(initial_l: u32, escalation: u32, exact_fallback_threshold: u32) -> Result<Self> {
        if initial_l < 1 || escalation < 2 || exact_fallback_threshold < initial_l {
            return Err(Error::InvalidArgument(format!(
                "precision policy needs initial_l >= 1, escalation >= 2, threshold >= initial_l \
                 (got {initial_l}, {escalation}, {exact_fallback_threshold})"
            )));
        }
        Ok(PrecisionPolicy {
            initial_l,
            escalation,
            exact_fallback_threshold,
        })
    }

    /// `l = max(min(100, deg + 5), floor(1.6 L), digits of a, digits of b)`,
    /// doubling on indeterminate signs, exact evaluation beyond
    /// `4 * (largest coefficient bits) + 8 * deg` digits.
    pub fn for_input(f: &Poly, iv: &ClosedInterval, digits: u32) -> Self {
        let deg = f.deg() as u32;
        let initial = (deg + 5)
            .min(100)
            .max(digits * 8 / 5)
            .max(decimal_size(iv.lo()))
            .max(decimal_size(iv.hi()))
            .max(1);
        let (_, prim) = f.content_and_primitive();
        let coeff_bits = prim.iter().map(|c| c.bits()).max().unwrap_or(0) as u32;
        PrecisionPolicy {
            initial_l: initial,
            escalation: 2,
            exact_fallback_threshold: (4 * coeff_bits + 8 * deg).max(initial),
        }
    }
}

/// What produced a snapshot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    /// The input interval.
    Start,
    /// Only the Newton-side bound moved.
    Newton,
    /// Only the secant-side bound moved.
    Secant,
    /// Both bounds moved (one LZ1 iteration).
    Both,
    /// An iterate turned out to be the root itself.
    Root,
}

/// One enclosure along the way. `iteration` counts completed Newton steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub iteration: usize,
    pub kind: StepKind,
    pub lo: Rational,
    pub hi: Rational,
    /// Working precision in interval mode.
    pub precision: Option<u32>,
}

impl Step {
    /// Shared leading decimal digits of the endpoints; `point_digits` when
    /// they coincide.
    pub fn correct_digits(&self, point_digits: u32) -> u32 {
        common_digits(&self.lo, &self.hi).unwrap_or(point_digits)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub enclosure: ClosedInterval,
    /// Completed Newton steps.
    pub iterations: usize,
    /// Every intermediate enclosure, starting with the input.
    pub steps: Vec<Step>,
}

impl Refinement {
    /// Correct digits of the last enclosure of each iteration.
    pub fn convergence_trace(&self, point_digits: u32) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = Vec::new();
        for s in &self.steps {
            let d = s.correct_digits(point_digits);
            match out.last_mut() {
                Some(last) if last.0 == s.iteration => last.1 = d,
                _ => out.push((s.iteration, d)),
            }
        }
        out
    }

    /// Width of the enclosure closing each complete iteration, i.e. after
    /// both bounds have moved. A run that stops right after a Newton step
    /// leaves its last iteration half done; that one is left out.
    pub fn widths(&self) -> Vec<Rational> {
        let mut out: Vec<(usize, Rational)> = Vec::new();
        for s in &self.steps {
            if s.kind == StepKind::Newton && s.iteration > 0 {
                continue;
            }
            let w = &s.hi - &s.lo;
            match out.last_mut() {
                Some(last) if last.0 == s.iteration => last.1 = w,
                _ => out.push((s.iteration, w)),
            }
        }
        out.into_iter().map(|(_, w)| w).collect()
    }
}

impl Refinement {
    /// `log(w_k / w_(k-1)) / log(w_(k-1) / w_(k-2))` over the last three
    /// iteration widths; `None` with fewer than three nonzero widths.
    pub fn empirical_order(&self) -> Option<f64> {
        let w: Vec<f64> = self
            .widths()
            .iter()
            .filter(|w| !w.is_zero())
            .map(log10_abs)
            .collect();
        if w.len() < 3 {
            return None;
        }
        let k = w.len() - 1;
        Some((w[k] - w[k - 1]) / (w[k - 1] - w[k - 2]))
    }
}

/// `(x, c)`: `x` is the endpoint with `f(x) f''(x) > 0`.
pub fn select_start(f: &Poly, iv: &ClosedInterval) -> Result<(Rational, Rational)> {
    let (a, b) = (iv.lo(), iv.hi());
    if a >= b {
        return Err(Error::InvalidInterval(format!("need lo < hi, got {iv}")));
    }
    if a * b <= Rational::from_integer(0.into()) {
        return Err(Error::InvalidInterval(format!("{iv} touches or contains zero")));
    }
    let (fa, fb) = (f.sign_at(a), f.sign_at(b));
    if fa * fb >= 0 {
        return Err(Error::NotBracketing);
    }
    let f2 = f.derivative().derivative();
    if fa * f2.sign_at(a) > 0 {
        Ok((a.clone(), b.clone()))
    } else {
        Ok((b.clone(), a.clone()))
    }
}

/// Refine `iv` with full trace. `policy` only matters in interval mode.
pub fn refine(f: &Poly, iv: &ClosedInterval, config: &RefineConfig, policy: &PrecisionPolicy) -> Result<Refinement> {
    if config.digits < 1 || config.max_iterations < 1 {
        return Err(Error::InvalidArgument("L and max_iterations must be positive".into()));
    }
    validate_refinement_input(f, iv)?;
    let (x, c) = select_start(f, iv)?;
    let cap = config.max_iterations;
    match config.mode {
        Mode::Exact => {
            let mut e = exact::ExactEngine::new(f, config.digits);
            let (x, c) = (Mpq::from_rational(&x), Mpq::from_rational(&c));
            match config.method {
                Method::Lz1 => driver::lz1(&mut e, x, c, cap),
                Method::Lz2 => driver::lz2(&mut e, x, c, cap),
            }
        }
        Mode::Interval => {
            let mut e = interval::IntervalEngine::new(f, &x, &c, config.digits, config.method, policy);
            match config.method {
                Method::Lz1 => driver::lz1(&mut e, x, c, cap),
                Method::Lz2 => driver::lz2(&mut e, x, c, cap),
            }
        }
    }
}

fn run(f: &Poly, iv: &ClosedInterval, digits: u32, method: Method, mode: Mode, policy: Option<&PrecisionPolicy>) -> Result<ClosedInterval> {
    let config = RefineConfig::new(digits, method, mode);
    let default;
    let policy = match policy {
        Some(p) => p,
        None => {
            default = PrecisionPolicy::for_input(f, iv, digits);
            &default
        }
    };
    refine(f, iv, &config, policy).map(|r| r.enclosure)
}

pub fn lz1_exact(f: &Poly, iv: &ClosedInterval, digits: u32) -> Result<ClosedInterval> {
    run(f, iv, digits, Method::Lz1, Mode::Exact, None)
}

pub fn lz2_exact(f: &Poly, iv: &ClosedInterval, digits: u32) -> Result<ClosedInterval> {
    run(f, iv, digits, Method::Lz2, Mode::Exact, None)
}

pub fn lz1_interval(f: &Poly, iv: &ClosedInterval, digits: u32, policy: &PrecisionPolicy) -> Result<ClosedInterval> {
    run(f, iv, digits, Method::Lz1, Mode::Interval, Some(policy))
}

pub fn lz2_interval(f: &Poly, iv: &ClosedInterval, digits: u32, policy: &PrecisionPolicy) -> Result<ClosedInterval> {
    run(f, iv, digits, Method::Lz2, Mode::Interval, Some(policy))
}

/// `(iteration, correct digits)` per iteration, with the default precision
/// policy in interval mode.
pub fn convergence_trace(f: &Poly, iv: &ClosedInterval, config: &RefineConfig) -> Result<Vec<(usize, u32)>> {
    let policy = PrecisionPolicy::for_input(f, iv, config.digits);
    Ok(refine(f, iv, config, &policy)?.convergence_trace(config.digits))
}
