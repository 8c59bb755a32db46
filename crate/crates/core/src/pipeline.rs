//! The whole chain from an arbitrary polynomial to refined enclosures of all
//! its real roots: square-free decomposition, then a split into factors
//! coprime with their second derivative, an isolation in which `f'` and
//! `f''` keep their sign, and finally LZ1 or LZ2 on every non-point
//! interval.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::arith::decimal::{common_digits, render_common};
use crate::decompose::lmcd;
use crate::error::{Error, Result};
use crate::isolate::{mci, ClosedInterval};
use crate::poly::{square_free_decomposition, Poly};
use crate::refine::{refine, Method, Mode, PrecisionPolicy, RefineConfig};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootReport {
    #[serde(flatten)]
    pub enclosure: ClosedInterval,
    /// Multiplicity of the root in the input polynomial.
    pub multiplicity: u32,
    /// Leading digits shared by both endpoints (the exact value for a
    /// point enclosure, truncated to `L` digits if it does not terminate).
    pub decimal: String,
    pub correct_digits: u32,
    /// Completed Newton steps; zero for roots found exactly.
    pub iterations: usize,
    /// Seconds spent refining this root.
    pub wall_time: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RefineReport {
    #[serde(serialize_with = "render_poly")]
    pub polynomial: Poly,
    pub method: Method,
    pub mode: Mode,
    #[serde(rename = "L")]
    pub digits: u32,
    /// Sorted by position; enclosures are pairwise disjoint.
    pub roots: Vec<RootReport>,
}

fn render_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.render())
}

struct Pending {
    factor: Poly,
    isolating: ClosedInterval,
    multiplicity: u32,
    digits: u32,
    enclosure: ClosedInterval,
    iterations: usize,
    seconds: f64,
}

/// Refine every real root of `f` to relative width `10^-config.digits`.
/// With `policy = None` each interval gets the default interval-mode
/// policy for its factor. Enclosures of different factors that happen to
/// overlap are refined further until they separate.
pub fn refine_pipeline(f: &Poly, config: &RefineConfig, policy: Option<&PrecisionPolicy>) -> Result<RefineReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut pending = Vec::new();
    for sf in square_free_decomposition(f)?.factors {
        for factor in lmcd(&sf.factor)?.factors {
            for iv in mci(&factor)?.intervals {
                pending.push(Pending {
                    factor: factor.clone(),
                    enclosure: iv.clone(),
                    isolating: iv,
                    multiplicity: sf.multiplicity,
                    digits: config.digits,
                    iterations: 0,
                    seconds: 0.0,
                });
            }
        }
    }
    for p in &mut pending {
        if !p.isolating.is_point() {
            run(p, config, policy)?;
        }
    }
    loop {
        pending.sort_by(|a, b| a.enclosure.lo().cmp(b.enclosure.lo()));
        let mut clash = vec![false; pending.len()];
        for i in 1..pending.len() {
            if pending[i - 1].enclosure.hi() >= pending[i].enclosure.lo() {
                clash[i - 1] = true;
                clash[i] = true;
            }
        }
        if !clash.contains(&true) {
            break;
        }
        // Distinct roots: enough extra digits always separate them.
        for (p, _) in pending.iter_mut().zip(&clash).filter(|(p, &c)| c && !p.isolating.is_point()) {
            p.digits *= 2;
            run(p, config, policy)?;
        }
    }
    let roots = pending
        .into_iter()
        .map(|p| {
            let (lo, hi) = (p.enclosure.lo(), p.enclosure.hi());
            RootReport {
                decimal: render_common(lo, hi, config.digits),
                correct_digits: common_digits(lo, hi).unwrap_or(config.digits),
                multiplicity: p.multiplicity,
                iterations: p.iterations,
                wall_time: p.seconds,
                enclosure: p.enclosure,
            }
        })
        .collect();
    Ok(RefineReport {
        polynomial: f.clone(),
        method: config.method,
        mode: config.mode,
        digits: config.digits,
        roots,
    })
}

/// Refine `p.isolating` to `p.digits`, replacing any earlier result.
fn run(p: &mut Pending, config: &RefineConfig, policy: Option<&PrecisionPolicy>) -> Result<()> {
    let mut cfg = RefineConfig::new(p.digits, config.method, config.mode);
    cfg.max_iterations = cfg.max_iterations.max(config.max_iterations);
    let default;
    let policy = match policy {
        Some(pol) => pol,
        None => {
            default = PrecisionPolicy::for_input(&p.factor, &p.isolating, p.digits);
            &default
        }
    };
    let t0 = Instant::now();
    let r = refine(&p.factor, &p.isolating, &cfg, policy)?;
    p.seconds += t0.elapsed().as_secs_f64();
    p.iterations = r.iterations;
    p.enclosure = r.enclosure;
    Ok(())
}

impl fmt::Display for RefineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polynomial: {}", self.polynomial.render())?;
        writeln!(f, "method: {}  mode: {}  L: {}", self.method, self.mode, self.digits)?;
        writeln!(f, "real roots: {}", self.roots.len())?;
        for (i, r) in self.roots.iter().enumerate() {
            let shown = if r.decimal.is_empty() { "?" } else { &r.decimal };
            writeln!(
                f,
                "  #{:<3} {}  (multiplicity {}, {} correct digits, {} iterations, {:.6} s)",
                i + 1,
                shown,
                r.multiplicity,
                r.correct_digits,
                r.iterations,
                r.wall_time
            )?;
            writeln!(f, "        {}", r.enclosure)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn cfg(digits: u32, method: Method, mode: Mode) -> RefineConfig {
        RefineConfig::new(digits, method, mode)
    }

    #[test]
    fn cubic_three_roots() {
        let f = Poly::from_ints(&[7, -20, 0, 1]);
        for mode in [Mode::Exact, Mode::Interval] {
            let rep = refine_pipeline(&f, &cfg(8, Method::Lz2, mode), None).unwrap();
            assert_eq!(rep.roots.len(), 3);
            for r in &rep.roots {
                assert_eq!(r.multiplicity, 1);
                assert!(r.enclosure.relative_width().unwrap() <= rat(1, 100_000_000));
                assert!(f.sign_at(r.enclosure.lo()) * f.sign_at(r.enclosure.hi()) < 0);
            }
            assert!(rep.roots[2].decimal.starts_with("4.2856312"), "{}", rep.roots[2].decimal);
        }
    }

    #[test]
    fn repeated_rational_roots() {
        // (x - 1)^2 (x + 2)
        let f = Poly::from_ints(&[2, -3, 0, 1]);
        let rep = refine_pipeline(&f, &cfg(10, Method::Lz1, Mode::Exact), None).unwrap();
        assert_eq!(rep.roots.len(), 2);
        assert_eq!(rep.roots[0].enclosure, ClosedInterval::point(int(-2)));
        assert_eq!(rep.roots[0].multiplicity, 1);
        assert_eq!(rep.roots[1].enclosure, ClosedInterval::point(int(1)));
        assert_eq!(rep.roots[1].multiplicity, 2);
        assert_eq!(rep.roots[1].decimal, "1");
        assert_eq!(rep.roots[1].correct_digits, 10);
    }

    #[test]
    fn single_zero_root() {
        let rep = refine_pipeline(&Poly::x(), &cfg(5, Method::Lz2, Mode::Interval), None).unwrap();
        assert_eq!(rep.roots.len(), 1);
        assert_eq!(rep.roots[0].enclosure, ClosedInterval::point(int(0)));
        assert_eq!(rep.roots[0].multiplicity, 1);
    }

    #[test]
    fn constants_and_zero() {
        assert!(refine_pipeline(&Poly::from_ints(&[3]), &cfg(5, Method::Lz1, Mode::Exact), None)
            .unwrap()
            .roots
            .is_empty());
        assert_eq!(
            refine_pipeline(&Poly::zero(), &cfg(5, Method::Lz1, Mode::Exact), None),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn close_roots_of_different_factors_separate() {
        // (x^2 - 2)(500x - 707)^2: sqrt 2 and 1.414 sit in different
        // square-free factors and are 2e-4 apart, closer than L = 2 demands.
        let f = &Poly::from_ints(&[-2, 0, 1]) * &Poly::from_ints(&[-707, 500]).pow(2);
        let rep = refine_pipeline(&f, &cfg(2, Method::Lz1, Mode::Exact), None).unwrap();
        assert_eq!(rep.roots.len(), 3);
        for w in rep.roots.windows(2) {
            assert!(w[0].enclosure.hi() < w[1].enclosure.lo());
        }
        assert_eq!(rep.roots[1].enclosure, ClosedInterval::point(rat(707, 500)));
        assert_eq!(rep.roots[1].multiplicity, 2);
        let g = Poly::from_ints(&[-2, 0, 1]);
        let top = &rep.roots[2].enclosure;
        assert!(g.sign_at(top.lo()) < 0 && g.sign_at(top.hi()) > 0);
    }

    #[test]
    fn text_rendering() {
        let f = Poly::from_ints(&[-2, 0, 1]);
        let rep = refine_pipeline(&f, &cfg(5, Method::Lz1, Mode::Exact), None).unwrap();
        let text = rep.to_string();
        assert!(text.contains("real roots: 2"));
        assert!(text.contains("1.4142"));
    }
}
