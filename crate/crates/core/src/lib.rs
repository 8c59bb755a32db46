//! Certified real-root isolation and refinement for polynomials with
//! rational coefficients.
//!
//! The pipeline runs square-free decomposition, splits each factor into
//! pieces coprime with their second derivative, isolates every root in an
//! interval on which `f'` and `f''` keep their sign, and then narrows those
//! intervals with a combined Newton/secant iteration, either in exact
//! rational arithmetic or in outward-rounded interval arithmetic.

pub mod arith;
pub mod bench;
pub mod decompose;
pub mod error;
pub mod isolate;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod refine;

pub use arith::{BigFloat, FloatInterval, Precision, Rational};
pub use decompose::{lmcd, Lmcd};
pub use error::{Error, Result};
pub use isolate::{isolate_roots, mci, ClosedInterval, Isolation};
pub use parse::parse_poly;
pub use pipeline::{refine_pipeline, RefineReport, RootReport};
pub use poly::{square_free_decomposition, Poly, SquareFreeDecomposition, SquareFreeFactor};
pub use refine::{
    certified_sign_eval, convergence_trace, lz1_exact, lz1_interval, lz2_exact, lz2_interval, refine, select_start,
    Method, Mode, PrecisionPolicy, RefineConfig, Refinement, SignEval, Step, StepKind,
};
pub use bench::{bench_chebyshev, chebyshev, BenchReport, BenchRow};
