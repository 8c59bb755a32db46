//! `rootrefine`: command-line front end for the root isolation and
//! refinement library.
//!
//! Exit status: 0 on success, 2 for unreadable input (including bad flags),
//! 3 when an input violates a precondition, 4 when an iteration cap is hit.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rootrefine::arith::decimal::{common_digits, log10_abs, render_common};
use rootrefine::{
    bench_chebyshev, isolate_roots, lmcd, mci, parse_poly, refine, refine_pipeline, square_free_decomposition,
    ClosedInterval, Error, Method, Mode, Poly, PrecisionPolicy, Rational, RefineConfig, Result,
};

#[derive(Parser)]
#[command(name = "rootrefine", version, about = "Certified real root isolation and refinement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Square-free decomposition f = c * g1^1 * g2^2 * ...
    Sqfree(PolyArgs),
    /// Split a square-free polynomial into factors coprime with their f''.
    Lmcd(PolyArgs),
    /// Isolating intervals of the real roots of a square-free polynomial.
    Isolate {
        #[command(flatten)]
        poly: PolyArgs,
        /// Also make f' and f'' sign-constant on every interval.
        #[arg(long)]
        mci: bool,
    },
    /// Refine one isolating interval with LZ1 or LZ2.
    Refine {
        #[command(flatten)]
        poly: PolyArgs,
        /// `lo,hi` with exact rational ("1097/256") or decimal endpoints.
        #[arg(long, allow_hyphen_values = true)]
        interval: String,
        #[command(flatten)]
        run: RunArgs,
        /// Starting float precision in interval mode (default: chosen from
        /// the input).
        #[arg(long)]
        initial_l: Option<u32>,
        /// Print every intermediate enclosure.
        #[arg(long)]
        trace: bool,
    },
    /// Isolate and refine every real root.
    Pipeline {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Benchmarks.
    #[command(subcommand)]
    Bench(Bench),
}

#[derive(Subcommand)]
enum Bench {
    /// Time the refiners on the middle root of the Chebyshev polynomial T_n.
    Chebyshev {
        /// Even degree, at least 2.
        #[arg(long)]
        n: u32,
        /// Target relative precision 10^-L.
        #[arg(short = 'L', long = "digits", value_parser = clap::value_parser!(u32).range(1..))]
        digits: u32,
        #[arg(long, value_delimiter = ',', default_value = "lz1,lz2")]
        methods: Vec<Method>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct PolyArgs {
    /// Expression in x, such as "x^3 - 20*x + 7", or ascending
    /// coefficients "7,-20,0,1".
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value = "lz2")]
    method: Method,
    #[arg(long, default_value = "interval")]
    mode: Mode,
    /// Target relative precision 10^-L.
    #[arg(short = 'L', long = "digits", value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Sqfree(p) => sqfree(&p),
        Command::Lmcd(p) => lmcd_cmd(&p),
        Command::Isolate { poly, mci } => isolate(&poly, mci),
        Command::Refine {
            poly,
            interval,
            run,
            initial_l,
            trace,
        } => refine_cmd(&poly, &interval, &run, initial_l, trace),
        Command::Pipeline { poly, run } => {
            let f = parse_poly(&poly.poly)?;
            let config = RefineConfig::new(run.digits, run.method, run.mode);
            let report = refine_pipeline(&f, &config, None)?;
            Ok(match poly.format {
                Format::Text => report.to_string(),
                Format::Json => to_json(&report),
            })
        }
        Command::Bench(Bench::Chebyshev {
            n,
            digits,
            methods,
            format,
        }) => {
            let report = bench_chebyshev(n, digits, &methods)?;
            Ok(match format {
                Format::Json => to_json(&report),
                Format::Text => {
                    let mut out = format!("T_{n}, root {} of {n}, L = {digits}\nstart {}\n", n / 2, report.start);
                    out.push_str("method   seconds    iterations  order  contract\n");
                    for r in &report.rows {
                        let order = r.order.map_or("-".to_string(), |p| format!("{p:.2}"));
                        out.push_str(&format!(
                            "{:<8} {:<10.4} {:<11} {:<6} {}\n",
                            r.method.to_string(),
                            r.seconds,
                            r.iterations,
                            order,
                            if r.contract { "ok" } else { "VIOLATED" }
                        ));
                    }
                    out
                }
            })
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn sqfree(p: &PolyArgs) -> Result<String> {
    let f = parse_poly(&p.poly)?;
    let d = square_free_decomposition(&f)?;
    Ok(match p.format {
        Format::Json => to_json(&d),
        Format::Text => {
            let mut out = format!("constant: {}\n", d.constant);
            for sf in &d.factors {
                out.push_str(&format!("({})^{}\n", sf.factor.render(), sf.multiplicity));
            }
            out
        }
    })
}

fn lmcd_cmd(p: &PolyArgs) -> Result<String> {
    let f = parse_poly(&p.poly)?;
    let d = lmcd(&f)?;
    let factors: Vec<String> = d.factors.iter().map(Poly::render).collect();
    Ok(match p.format {
        Format::Json => to_json(&json!({ "constant": d.constant.to_string(), "factors": factors })),
        Format::Text => {
            let mut out = format!("constant: {}\n", d.constant);
            for g in factors {
                out.push_str(&g);
                out.push('\n');
            }
            out
        }
    })
}

fn isolate(p: &PolyArgs, monotonic_convex: bool) -> Result<String> {
    let f = parse_poly(&p.poly)?;
    let iso = if monotonic_convex { mci(&f)? } else { isolate_roots(&f)? };
    Ok(match p.format {
        Format::Json => to_json(&iso),
        Format::Text => iso.intervals.iter().map(|iv| format!("{iv}\n")).collect(),
    })
}

/// An endpoint is any constant expression: `1097/256`, `-4.5`, `3e-2`.
fn parse_endpoint(text: &str, offset: usize) -> Result<Rational> {
    let shift = |e: Error| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
        Error::UnsupportedExponent { pos } => Error::UnsupportedExponent { pos: pos + offset },
        other => other,
    };
    let p = parse_poly(text).map_err(shift)?;
    if !p.is_constant() {
        return Err(Error::Parse {
            pos: offset,
            msg: format!("interval endpoint {text:?} is not a number"),
        });
    }
    Ok(p.coeff(0))
}

fn parse_interval(text: &str) -> Result<ClosedInterval> {
    let Some((lo, hi)) = text.split_once(',') else {
        return Err(Error::Parse {
            pos: 0,
            msg: "interval must be written lo,hi".into(),
        });
    };
    let lo = parse_endpoint(lo, 0)?;
    let hi = parse_endpoint(hi, text.find(',').unwrap_or(0) + 1)?;
    ClosedInterval::new(lo, hi)
}

fn refine_cmd(p: &PolyArgs, interval: &str, run: &RunArgs, initial_l: Option<u32>, trace: bool) -> Result<String> {
    let f = parse_poly(&p.poly)?;
    let iv = parse_interval(interval)?;
    let config = RefineConfig::new(run.digits, run.method, run.mode);
    let mut policy = PrecisionPolicy::for_input(&f, &iv, run.digits);
    if let Some(l) = initial_l {
        policy = PrecisionPolicy::new(l, policy.escalation, policy.exact_fallback_threshold.max(l))?;
    }
    let r = refine(&f, &iv, &config, &policy)?;
    let (lo, hi) = (r.enclosure.lo(), r.enclosure.hi());
    let decimal = render_common(lo, hi, run.digits);
    let correct = common_digits(lo, hi).unwrap_or(run.digits);
    let rel = r.enclosure.relative_width();
    let steps: Vec<Value> = r
        .steps
        .iter()
        .map(|s| {
            json!({
                "iteration": s.iteration,
                "kind": s.kind,
                "lo": s.lo.to_string(),
                "hi": s.hi.to_string(),
                "decimal": render_common(&s.lo, &s.hi, run.digits),
                "correct_digits": s.correct_digits(run.digits),
                "precision": s.precision,
            })
        })
        .collect();
    Ok(match p.format {
        Format::Json => {
            let mut doc = json!({
                "polynomial": f.render(),
                "method": run.method,
                "mode": run.mode,
                "L": run.digits,
                "lo": lo.to_string(),
                "hi": hi.to_string(),
                "decimal": decimal,
                "correct_digits": correct,
                "iterations": r.iterations,
                "relative_width_log10": rel.as_ref().map(log10_abs).filter(|v| v.is_finite()),
            });
            if trace {
                doc["trace"] = Value::Array(steps);
                doc["convergence_trace"] = json!(r.convergence_trace(run.digits));
            }
            to_json(&doc)
        }
        Format::Text => {
            let mut out = String::new();
            if trace {
                out.push_str("iter kind     digits  precision  shared digits\n");
                for s in &r.steps {
                    out.push_str(&format!(
                        "{:<4} {:<8} {:<7} {:<10} {}\n",
                        s.iteration,
                        format!("{:?}", s.kind).to_lowercase(),
                        s.correct_digits(run.digits),
                        s.precision.map_or("-".to_string(), |l| l.to_string()),
                        render_common(&s.lo, &s.hi, run.digits)
                    ));
                }
            }
            out.push_str(&format!("enclosure: {}\n", r.enclosure));
            out.push_str(&format!("decimal: {decimal}\n"));
            out.push_str(&format!("correct digits: {correct}\n"));
            out.push_str(&format!("iterations: {}\n", r.iterations));
            if let Some(w) = rel.filter(|w| *w > Rational::from_integer(0.into())) {
                out.push_str(&format!("relative width: 10^{:.4}\n", log10_abs(&w)));
            }
            out
        }
    })
}
