//! Decimal views of exact rationals: leading significant digits, the number
//! of digits two endpoints agree on, and truncated renderings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

fn pow10(k: u64) -> BigInt {
    num_traits::pow(BigInt::from(10u32), k as usize)
}

/// `e` such that `10^e <= |x| < 10^(e+1)`. `x` must be nonzero.
pub fn decimal_exponent(x: &Rational) -> i64 {
    assert!(!x.is_zero(), "decimal exponent of zero");
    let n = x.numer().abs();
    let d = x.denom().clone();
    // Estimate from bit lengths, then correct.
    let est = ((n.bits() as f64 - d.bits() as f64) * std::f64::consts::LOG10_2).floor() as i64;
    let mut e = est;
    loop {
        // Check 10^e <= n/d.
        let ge_lo = if e >= 0 {
            n >= &d * pow10(e as u64)
        } else {
            &n * pow10((-e) as u64) >= d
        };
        if !ge_lo {
            e -= 1;
            continue;
        }
        let lt_hi = if e + 1 >= 0 {
            n < &d * pow10((e + 1) as u64)
        } else {
            &n * pow10((-(e + 1)) as u64) < d
        };
        if !lt_hi {
            e += 1;
            continue;
        }
        return e;
    }
}

/// The first `k` significant decimal digits of `|x|`, truncated, as an
/// integer with exactly `k` digits. `x` must be nonzero.
pub fn leading_digits(x: &Rational, exponent: i64, k: u32) -> BigInt {
    let shift = i64::from(k) - 1 - exponent;
    let n = x.numer().abs();
    let d = x.denom();
    if shift >= 0 {
        (n * pow10(shift as u64)).div_floor(d)
    } else {
        n.div_floor(&(d * pow10((-shift) as u64)))
    }
}

/// Number of leading significant decimal digits shared by `lo` and `hi`
/// (truncation, not rounding). `None` when the two values are equal.
/// Values of different sign, or zero, share no digits.
pub fn common_digits(lo: &Rational, hi: &Rational) -> Option<u32> {
    if lo == hi {
        return None;
    }
    if lo.is_zero() || hi.is_zero() || lo.is_negative() != hi.is_negative() {
        return Some(0);
    }
    let e = decimal_exponent(lo);
    if decimal_exponent(hi) != e {
        return Some(0);
    }
    let agree = |k: u32| leading_digits(lo, e, k) == leading_digits(hi, e, k);
    // Upper bound from the relative width, then bisect on k (agreement on k
    // digits implies agreement on every shorter prefix).
    let width = (hi - lo).abs();
    let mag = lo.abs().min(hi.abs());
    let rel = width / mag;
    let bits_gap = rel.denom().bits() as i64 - rel.numer().bits() as i64;
    let mut upper = ((bits_gap.max(0) as f64) * std::f64::consts::LOG10_2) as u32 + 4;
    while agree(upper) {
        upper *= 2;
    }
    let mut lower = 0u32;
    // Invariant: agree(lower) && !agree(upper).
    while upper - lower > 1 {
        let mid = lower + (upper - lower) / 2;
        if agree(mid) {
            lower = mid;
        } else {
            upper = mid;
        }
    }
    Some(lower)
}

fn place_point(digits: &str, exponent: i64, negative: bool) -> String {
    let sign = if negative { "-" } else { "" };
    let k = digits.len() as i64;
    if !(-20..=20).contains(&exponent) {
        let (head, tail) = digits.split_at(1);
        let frac = if tail.is_empty() {
            String::new()
        } else {
            format!(".{tail}")
        };
        return format!("{sign}{head}{frac}e{exponent}");
    }
    if exponent >= 0 {
        let int_len = (exponent + 1) as usize;
        if k as usize <= int_len {
            format!("{sign}{digits}{}", "0".repeat(int_len - k as usize))
        } else {
            format!("{sign}{}.{}", &digits[..int_len], &digits[int_len..])
        }
    } else {
        format!("{sign}0.{}{digits}", "0".repeat((-exponent - 1) as usize))
    }
}

/// First `k` significant digits of `x`, truncated toward zero.
pub fn render_truncated(x: &Rational, k: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let k = k.max(1);
    let e = decimal_exponent(x);
    let digits = leading_digits(x, e, k).to_string();
    place_point(&digits, e, x.is_negative())
}

/// Exact decimal expansion when it terminates within `max_digits`
/// significant digits; otherwise the truncated `max_digits` prefix.
pub fn render_exact_or_truncated(x: &Rational, max_digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let e = decimal_exponent(x);
    for k in 1..=max_digits.max(1) {
        let d = leading_digits(x, e, k);
        let shift = i64::from(k) - 1 - e;
        let back = if shift >= 0 {
            Rational::new(d.clone(), pow10(shift as u64))
        } else {
            Rational::from_integer(&d * pow10((-shift) as u64))
        };
        if back == x.abs() {
            return place_point(&d.to_string(), e, x.is_negative());
        }
    }
    render_truncated(x, max_digits)
}

/// Decimal digits common to both endpoints, e.g. `4.285631226` for an
/// enclosure of `x^3 - 20x + 7`'s largest root. Empty when the endpoints
/// disagree from the first digit.
pub fn render_common(lo: &Rational, hi: &Rational, exact_cap: u32) -> String {
    match common_digits(lo, hi) {
        None => render_exact_or_truncated(lo, exact_cap),
        Some(0) => String::new(),
        Some(k) => render_truncated(lo, k),
    }
}

/// Rational value of a decimal literal such as `-12.5e-3`, exactly.
pub fn parse_decimal(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i64>().ok()?),
        None => (text, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exp - frac_part.len() as i64;
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * pow10(scale as u64))
    } else {
        Rational::new(digits, pow10((-scale) as u64))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// Approximate `log10 |x|` (about 15 significant digits); `-inf` at zero.
pub fn log10_abs(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let top = |n: &BigInt| -> f64 {
        let n = n.abs();
        let shift = n.bits().saturating_sub(60);
        let head = (n >> shift as usize).to_f64().unwrap_or(f64::MAX);
        head.log10() + shift as f64 * std::f64::consts::LOG10_2
    };
    top(x.numer()) - top(x.denom())
}

/// `10^-k` as a rational.
pub fn ten_to_minus(k: u32) -> Rational {
    Rational::new(BigInt::one(), pow10(u64::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn log10_estimates() {
        assert!((log10_abs(&q(1000, 1)) - 3.0).abs() < 1e-12);
        assert!((log10_abs(&q(-1, 400)) + 2.0 + 2.0 * 2f64.log10()).abs() < 1e-12);
        let big = Rational::new(BigInt::from(3).pow(2000), BigInt::from(7));
        assert!((log10_abs(&big) - (2000.0 * 3f64.log10() - 7f64.log10())).abs() < 1e-9);
        assert_eq!(log10_abs(&q(0, 1)), f64::NEG_INFINITY);
    }

    #[test]
    fn exponents() {
        assert_eq!(decimal_exponent(&q(1, 1)), 0);
        assert_eq!(decimal_exponent(&q(999, 100)), 0);
        assert_eq!(decimal_exponent(&q(10, 1)), 1);
        assert_eq!(decimal_exponent(&q(1, 10)), -1);
        assert_eq!(decimal_exponent(&q(-1, 11)), -2);
    }

    #[test]
    fn shared_digits_of_example_endpoints() {
        // 4.28515625 and 4.2861328125 agree on "4.28".
        assert_eq!(common_digits(&q(1097, 256), &q(4389, 1024)), Some(3));
        assert_eq!(render_common(&q(1097, 256), &q(4389, 1024), 10), "4.28");
        assert_eq!(common_digits(&q(1, 2), &q(1, 2)), None);
        assert_eq!(common_digits(&q(-1, 2), &q(1, 2)), Some(0));
        assert_eq!(common_digits(&q(9, 10), &q(11, 10)), Some(0));
    }

    #[test]
    fn rendering() {
        assert_eq!(render_truncated(&q(4389, 1024), 12), "4.28613281250");
        assert_eq!(render_truncated(&q(-1, 3), 4), "-0.3333");
        assert_eq!(render_truncated(&q(1234, 1), 2), "1200");
        assert_eq!(render_truncated(&q(1, 1000), 3), "0.00100");
        assert_eq!(render_exact_or_truncated(&q(1, 8), 50), "0.125");
        assert_eq!(render_exact_or_truncated(&q(-2, 1), 50), "-2");
        assert_eq!(render_exact_or_truncated(&q(1, 3), 5), "0.33333");
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(parse_decimal("0.5"), Some(q(1, 2)));
        assert_eq!(parse_decimal("-4.25"), Some(q(-17, 4)));
        assert_eq!(parse_decimal("1e-3"), Some(q(1, 1000)));
        assert_eq!(parse_decimal("12"), Some(q(12, 1)));
        assert_eq!(parse_decimal("."), None);
        assert_eq!(parse_decimal("1x"), None);
    }
}
