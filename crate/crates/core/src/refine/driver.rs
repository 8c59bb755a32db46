//! The LZ1/LZ2 iteration skeleton, shared by the exact and interval modes.
//!
//! `x` is always the Newton-side bound (where `f * f'' > 0`) and `c` the
//! secant-side bound; the root stays strictly between them.

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::isolate::ClosedInterval;

use super::{Refinement, Step, StepKind};

/// Arithmetic backend for one refinement run.
pub(crate) trait Engine {
    type Point: Clone;
    type Value;

    /// `f(x)`, or `None` when `x` is exactly a root.
    fn eval(&mut self, x: &Self::Point) -> Option<Self::Value>;

    /// Newton step from `from`; the result lies on the Newton side. In
    /// interval mode it is never farther from the root than `previous`.
    fn newton(&mut self, from: &Self::Point, value: &Self::Value, previous: Option<&Self::Point>) -> Self::Point;

    /// Secant through `(x, u)` and `(c, v)`; the result replaces `c`.
    fn secant(&mut self, x: &Self::Point, u: &Self::Value, c: &Self::Point, v: &Self::Value) -> Self::Point;

    /// `z` within the closed hull of `a` and `b`.
    fn inside(&self, z: &Self::Point, a: &Self::Point, b: &Self::Point) -> bool;

    /// `|x - c| <= 10^-L * min(|x|, |c|)`.
    fn narrow(&self, x: &Self::Point, c: &Self::Point) -> bool;

    fn rational(&self, p: &Self::Point) -> Rational;

    /// Called before every step with the current bounds.
    fn prepare(&mut self, _x: &Self::Point, _c: &Self::Point) {}

    /// Working precision in decimal digits, if the mode has one.
    fn precision(&self) -> Option<u32> {
        None
    }
}

struct Run<'e, E: Engine> {
    engine: &'e mut E,
    steps: Vec<Step>,
    iteration: usize,
    passes: usize,
    cap: usize,
}

impl<E: Engine> Run<'_, E> {
    fn snapshot(&mut self, kind: StepKind, x: &E::Point, c: &E::Point) {
        let (x, c) = (self.engine.rational(x), self.engine.rational(c));
        let (lo, hi) = if x <= c { (x, c) } else { (c, x) };
        self.steps.push(Step {
            iteration: self.iteration,
            kind,
            lo,
            hi,
            precision: self.engine.precision(),
        });
    }

    fn tick(&mut self) -> Result<()> {
        self.passes += 1;
        if self.passes > self.cap {
            return Err(Error::IterationLimitExceeded(self.cap));
        }
        Ok(())
    }

    fn finish(self) -> Refinement {
        let last = self.steps.last().expect("at least the initial snapshot");
        Refinement {
            enclosure: ClosedInterval::new(last.lo.clone(), last.hi.clone()).expect("ordered snapshot"),
            iterations: self.iteration,
            steps: self.steps,
        }
    }

    fn root(mut self, r: &E::Point) -> Refinement {
        self.snapshot(StepKind::Root, r, r);
        self.finish()
    }
}

pub(crate) fn lz1<E: Engine>(engine: &mut E, x0: E::Point, c0: E::Point, cap: usize) -> Result<Refinement> {
    let mut run = Run {
        engine,
        steps: Vec::new(),
        iteration: 0,
        passes: 0,
        cap,
    };
    let (mut x, mut c) = (x0, c0);
    run.snapshot(StepKind::Start, &x, &c);
    while !run.engine.narrow(&x, &c) {
        run.tick()?;
        run.engine.prepare(&x, &c);
        let Some(u) = run.engine.eval(&x) else {
            return Ok(run.root(&x));
        };
        let Some(v) = run.engine.eval(&c) else {
            return Ok(run.root(&c));
        };
        let p = run.engine.newton(&x, &u, Some(&x));
        c = run.engine.secant(&x, &u, &c, &v);
        x = p;
        run.iteration += 1;
        run.snapshot(StepKind::Both, &x, &c);
    }
    Ok(run.finish())
}

pub(crate) fn lz2<E: Engine>(engine: &mut E, x0: E::Point, c0: E::Point, cap: usize) -> Result<Refinement> {
    let mut run = Run {
        engine,
        steps: Vec::new(),
        iteration: 0,
        passes: 0,
        cap,
    };
    let (a, b) = (x0.clone(), c0.clone());
    let (mut x, mut c) = (x0, c0);
    run.snapshot(StepKind::Start, &x, &c);
    if run.engine.narrow(&x, &c) {
        return Ok(run.finish());
    }
    run.engine.prepare(&x, &c);
    let Some(u) = run.engine.eval(&x) else {
        return Ok(run.root(&x));
    };
    let Some(mut v) = run.engine.eval(&c) else {
        return Ok(run.root(&c));
    };
    // Stage 1: secant steps on c until Newton from c stays inside [a, b].
    let mut z = run.engine.newton(&c, &v, None);
    while !run.engine.inside(&z, &a, &b) {
        run.tick()?;
        c = run.engine.secant(&x, &u, &c, &v);
        run.snapshot(StepKind::Secant, &x, &c);
        run.engine.prepare(&x, &c);
        v = match run.engine.eval(&c) {
            Some(v) => v,
            None => return Ok(run.root(&c)),
        };
        z = run.engine.newton(&c, &v, None);
    }
    x = z;
    run.iteration = 1;
    run.snapshot(StepKind::Newton, &x, &c);
    // Stage 2: x and c approach the root from opposite sides.
    while !run.engine.narrow(&x, &c) {
        run.tick()?;
        run.engine.prepare(&x, &c);
        let Some(u) = run.engine.eval(&x) else {
            return Ok(run.root(&x));
        };
        c = run.engine.secant(&x, &u, &c, &v);
        run.snapshot(StepKind::Secant, &x, &c);
        if run.engine.narrow(&x, &c) {
            break;
        }
        run.engine.prepare(&x, &c);
        v = match run.engine.eval(&c) {
            Some(v) => v,
            None => return Ok(run.root(&c)),
        };
        x = run.engine.newton(&c, &v, Some(&x));
        run.iteration += 1;
        run.snapshot(StepKind::Newton, &x, &c);
    }
    Ok(run.finish())
}
