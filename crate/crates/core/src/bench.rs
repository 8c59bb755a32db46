//! Chebyshev benchmark: isolate `T_n`, pre-narrow one middle root and time
//! each refiner on it.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::decimal::ten_to_minus;
use crate::error::{Error, Result};
use crate::isolate::{isolate_roots, narrow_to_mci, ClosedInterval};
use crate::poly::Poly;
use crate::refine::{refine, Method, Mode, PrecisionPolicy, RefineConfig};

/// `T_0 = 1`, `T_1 = x`, `T_(k+1) = 2x T_k - T_(k-1)`.
pub fn chebyshev(n: u32) -> Poly {
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    if n == 0 {
        return Poly::from_big_ints(prev);
    }
    let mut cur: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(1)];
    for _ in 1..n {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Poly::from_big_ints(cur)
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub method: Method,
    pub seconds: f64,
    pub iterations: usize,
    /// Empirical convergence order over the last three iterations.
    pub order: Option<f64>,
    pub enclosure: ClosedInterval,
    /// Relative width at most `10^-L`.
    pub contract: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub n: u32,
    #[serde(rename = "L")]
    pub digits: u32,
    /// The pre-narrowed starting interval handed to every refiner.
    pub start: ClosedInterval,
    pub rows: Vec<BenchRow>,
}

/// The `(n/2)`-th isolating interval of `T_n` in ascending order, bisected
/// to width at most `1e-5` and then until `f'` and `f''` keep their sign.
pub fn bench_start(f: &Poly, n: u32) -> Result<ClosedInterval> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("n must be even and at least 2, got {n}")));
    }
    let iso = isolate_roots(f)?;
    let mut iv = iso.intervals[(n / 2 - 1) as usize].clone();
    let limit = ten_to_minus(5);
    while !iv.is_point() && iv.width() > limit {
        let m = iv.midpoint();
        iv = if f.sign_at(&m) == f.sign_at(iv.lo()) {
            ClosedInterval::new(m, iv.hi().clone())?
        } else {
            ClosedInterval::new(iv.lo().clone(), m)?
        };
    }
    Ok(narrow_to_mci(f, iv))
}

/// Time each method in interval mode on the `(n/2)`-th root of `T_n`; a
/// warm-up run precedes each timed run.
pub fn bench_chebyshev(n: u32, digits: u32, methods: &[Method]) -> Result<BenchReport> {
    let f = chebyshev(n);
    let start = bench_start(&f, n)?;
    let policy = PrecisionPolicy::for_input(&f, &start, digits);
    let mut rows = Vec::new();
    for &method in methods {
        let config = RefineConfig::new(digits, method, Mode::Interval);
        refine(&f, &start, &config, &policy)?;
        let t0 = Instant::now();
        let r = refine(&f, &start, &config, &policy)?;
        let elapsed: Duration = t0.elapsed();
        let contract = r
            .enclosure
            .relative_width()
            .is_some_and(|w| w <= ten_to_minus(digits));
        rows.push(BenchRow {
            method,
            seconds: elapsed.as_secs_f64(),
            iterations: r.iterations,
            order: r.empirical_order(),
            enclosure: r.enclosure,
            contract,
        });
    }
    Ok(BenchReport { n, digits, start, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Rational};

    #[test]
    fn recurrence() {
        assert_eq!(chebyshev(0), Poly::one());
        assert_eq!(chebyshev(1), Poly::x());
        assert_eq!(chebyshev(2), Poly::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev(3), Poly::from_ints(&[0, -3, 0, 4]));
        let t100 = chebyshev(100);
        assert_eq!(t100.deg(), 100);
        assert_eq!(t100.leading(), Rational::from_integer(BigInt::from(1) << 99));
        assert_eq!(t100.eval(&int(1)), int(1));
    }

    #[test]
    fn small_bench() {
        let r = bench_chebyshev(4, 50, &[Method::Lz1, Method::Lz2]).unwrap();
        assert!(r.start.width() <= ten_to_minus(5));
        for row in &r.rows {
            assert!(row.contract);
        }
    }
}
