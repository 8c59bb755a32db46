//! Minimal safe wrapper over the system GMP library, used where exact
//! rationals grow to millions of bits and subquadratic gcd matters.
//!
//! Only the handful of `mpz`/`mpq` entry points the exact refiners need are
//! bound. Values are owned; moving the struct is fine because GMP never
//! stores pointers to the header itself.

use std::cmp::Ordering;
use std::ffi::{c_int, c_void};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::Ratio;

use super::Rational;

#[repr(C)]
struct MpzRaw {
    alloc: c_int,
    size: c_int,
    limbs: *mut u64,
}

#[repr(C)]
struct MpqRaw {
    num: MpzRaw,
    den: MpzRaw,
}

#[link(name = "gmp")]
extern "C" {
    #[link_name = "__gmpz_init"]
    fn mpz_init(x: *mut MpzRaw);
    #[link_name = "__gmpz_clear"]
    fn mpz_clear(x: *mut MpzRaw);
    #[link_name = "__gmpz_set"]
    fn mpz_set(r: *mut MpzRaw, a: *const MpzRaw);
    #[link_name = "__gmpz_mul"]
    fn mpz_mul(r: *mut MpzRaw, a: *const MpzRaw, b: *const MpzRaw);
    #[link_name = "__gmpz_addmul"]
    fn mpz_addmul(r: *mut MpzRaw, a: *const MpzRaw, b: *const MpzRaw);
    #[link_name = "__gmpz_neg"]
    fn mpz_neg(r: *mut MpzRaw, a: *const MpzRaw);
    #[link_name = "__gmpz_import"]
    fn mpz_import(r: *mut MpzRaw, count: usize, order: c_int, size: usize, endian: c_int, nails: usize, op: *const c_void);
    #[link_name = "__gmpz_export"]
    fn mpz_export(
        r: *mut c_void,
        count: *mut usize,
        order: c_int,
        size: usize,
        endian: c_int,
        nails: usize,
        op: *const MpzRaw,
    ) -> *mut c_void;
    #[link_name = "__gmpz_sizeinbase"]
    fn mpz_sizeinbase(op: *const MpzRaw, base: c_int) -> usize;

    #[link_name = "__gmpq_init"]
    fn mpq_init(x: *mut MpqRaw);
    #[link_name = "__gmpq_clear"]
    fn mpq_clear(x: *mut MpqRaw);
    #[link_name = "__gmpq_set"]
    fn mpq_set(r: *mut MpqRaw, a: *const MpqRaw);
    #[link_name = "__gmpq_sub"]
    fn mpq_sub(r: *mut MpqRaw, a: *const MpqRaw, b: *const MpqRaw);
    #[link_name = "__gmpq_mul"]
    fn mpq_mul(r: *mut MpqRaw, a: *const MpqRaw, b: *const MpqRaw);
    #[link_name = "__gmpq_div"]
    fn mpq_div(r: *mut MpqRaw, a: *const MpqRaw, b: *const MpqRaw);
    #[link_name = "__gmpq_abs"]
    fn mpq_abs(r: *mut MpqRaw, a: *const MpqRaw);
    #[link_name = "__gmpq_cmp"]
    fn mpq_cmp(a: *const MpqRaw, b: *const MpqRaw) -> c_int;
    #[link_name = "__gmpq_canonicalize"]
    fn mpq_canonicalize(x: *mut MpqRaw);
    #[link_name = "__gmpq_set_num"]
    fn mpq_set_num(r: *mut MpqRaw, a: *const MpzRaw);
    #[link_name = "__gmpq_set_den"]
    fn mpq_set_den(r: *mut MpqRaw, a: *const MpzRaw);
}

/// Arbitrary-precision integer.
pub(crate) struct Mpz(MpzRaw);

impl Mpz {
    pub fn zero() -> Self {
        let mut raw = MpzRaw {
            alloc: 0,
            size: 0,
            limbs: std::ptr::null_mut(),
        };
        // SAFETY: `raw` is a valid, uninitialised header for mpz_init.
        unsafe { mpz_init(&mut raw) };
        Mpz(raw)
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        let mut out = Mpz::zero();
        let (sign, digits) = x.to_u32_digits();
        if !digits.is_empty() {
            // SAFETY: `digits` holds `len` u32 words, least significant first.
            unsafe {
                mpz_import(&mut out.0, digits.len(), -1, 4, 0, 0, digits.as_ptr().cast());
            }
        }
        if sign == Sign::Minus {
            // SAFETY: in-place negation is allowed by GMP.
            unsafe { mpz_neg(&mut out.0, &out.0) };
        }
        out
    }

    #[cfg(test)]
    pub fn to_bigint(&self) -> BigInt {
        self.to_bigint_raw(&self.0)
    }

    fn to_bigint_raw(&self, raw: &MpzRaw) -> BigInt {
        if raw.size == 0 {
            return BigInt::from(0);
        }
        // SAFETY: sizeinbase on an initialised mpz.
        let bits = unsafe { mpz_sizeinbase(raw, 2) };
        let mut words = vec![0u32; bits.div_ceil(32)];
        let mut count = 0usize;
        // SAFETY: `words` has room for every 32-bit word of |raw|.
        unsafe {
            mpz_export(words.as_mut_ptr().cast(), &mut count, -1, 4, 0, 0, raw);
        }
        words.truncate(count);
        let sign = if raw.size < 0 { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(sign, BigUint::new(words))
    }

    pub fn signum(&self) -> i32 {
        self.0.size.signum()
    }

    /// `self += a * b`.
    pub fn add_mul(&mut self, a: &Mpz, b: &Mpz) {
        // SAFETY: all operands initialised; GMP allows aliasing here.
        unsafe { mpz_addmul(&mut self.0, &a.0, &b.0) };
    }

    pub fn mul_assign(&mut self, other: &Mpz) {
        // SAFETY: in-place multiplication is allowed by GMP.
        unsafe { mpz_mul(&mut self.0, &self.0, &other.0) };
    }
}

impl Clone for Mpz {
    fn clone(&self) -> Self {
        let mut out = Mpz::zero();
        // SAFETY: both initialised.
        unsafe { mpz_set(&mut out.0, &self.0) };
        out
    }
}

impl Drop for Mpz {
    fn drop(&mut self) {
        // SAFETY: initialised by `Mpz::zero` and cleared exactly once.
        unsafe { mpz_clear(&mut self.0) };
    }
}

/// Arbitrary-precision rational, always canonical (reduced, positive
/// denominator).
pub(crate) struct Mpq(MpqRaw);

impl Mpq {
    pub fn zero() -> Self {
        let mut raw = MpqRaw {
            num: MpzRaw {
                alloc: 0,
                size: 0,
                limbs: std::ptr::null_mut(),
            },
            den: MpzRaw {
                alloc: 0,
                size: 0,
                limbs: std::ptr::null_mut(),
            },
        };
        // SAFETY: valid header for mpq_init.
        unsafe { mpq_init(&mut raw) };
        Mpq(raw)
    }

    pub fn from_rational(x: &Rational) -> Self {
        Mpq::from_parts(&Mpz::from_bigint(x.numer()), &Mpz::from_bigint(x.denom()))
    }

    /// `num / den` reduced; `den` must be nonzero.
    pub fn from_parts(num: &Mpz, den: &Mpz) -> Self {
        assert!(den.signum() != 0, "zero denominator");
        let mut out = Mpq::zero();
        // SAFETY: both components initialised; canonicalize fixes signs and
        // common factors.
        unsafe {
            mpq_set_num(&mut out.0, &num.0);
            mpq_set_den(&mut out.0, &den.0);
            mpq_canonicalize(&mut out.0);
        }
        out
    }

    pub fn numer(&self) -> Mpz {
        let mut out = Mpz::zero();
        // SAFETY: both initialised.
        unsafe { mpz_set(&mut out.0, &self.0.num) };
        out
    }

    pub fn denom(&self) -> Mpz {
        let mut out = Mpz::zero();
        // SAFETY: both initialised.
        unsafe { mpz_set(&mut out.0, &self.0.den) };
        out
    }

    pub fn to_rational(&self) -> Rational {
        let helper = Mpz::zero();
        // Already reduced, so skip num-rational's own gcd.
        Ratio::new_raw(helper.to_bigint_raw(&self.0.num), helper.to_bigint_raw(&self.0.den))
    }

    pub fn signum(&self) -> i32 {
        self.0.num.size.signum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.num.size == 0
    }

    pub fn sub(&self, other: &Mpq) -> Mpq {
        let mut out = Mpq::zero();
        // SAFETY: all operands initialised.
        unsafe { mpq_sub(&mut out.0, &self.0, &other.0) };
        out
    }

    pub fn mul(&self, other: &Mpq) -> Mpq {
        let mut out = Mpq::zero();
        // SAFETY: all operands initialised.
        unsafe { mpq_mul(&mut out.0, &self.0, &other.0) };
        out
    }

    /// Panics on division by zero rather than letting GMP abort.
    pub fn div(&self, other: &Mpq) -> Mpq {
        assert!(!other.is_zero(), "rational division by zero");
        let mut out = Mpq::zero();
        // SAFETY: operands initialised, divisor nonzero.
        unsafe { mpq_div(&mut out.0, &self.0, &other.0) };
        out
    }

    pub fn abs(&self) -> Mpq {
        let mut out = Mpq::zero();
        // SAFETY: operands initialised.
        unsafe { mpq_abs(&mut out.0, &self.0) };
        out
    }
}

impl Clone for Mpq {
    fn clone(&self) -> Self {
        let mut out = Mpq::zero();
        // SAFETY: both initialised.
        unsafe { mpq_set(&mut out.0, &self.0) };
        out
    }
}

impl Drop for Mpq {
    fn drop(&mut self) {
        // SAFETY: initialised by `Mpq::zero` and cleared exactly once.
        unsafe { mpq_clear(&mut self.0) };
    }
}

impl PartialEq for Mpq {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Mpq {}

impl PartialOrd for Mpq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mpq {
    fn cmp(&self, other: &Self) -> Ordering {
        // SAFETY: both initialised.
        unsafe { mpq_cmp(&self.0, &other.0) }.cmp(&0)
    }
}

impl std::fmt::Debug for Mpq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// Polynomial prepared for exact evaluation: `f = scale * sum(coeffs[i] x^i)`
/// with integer `coeffs`, evaluated homogeneously so only one gcd is paid
/// per evaluation.
#[derive(Clone)]
pub(crate) struct MpzPoly {
    scale: Mpq,
    coeffs: Vec<Mpz>,
}

impl MpzPoly {
    pub fn new(scale: &Rational, coeffs: &[BigInt]) -> Self {
        MpzPoly {
            scale: Mpq::from_rational(scale),
            coeffs: coeffs.iter().map(Mpz::from_bigint).collect(),
        }
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: &Mpq) -> Mpq {
        let n = self.coeffs.len();
        if n == 0 {
            return Mpq::zero();
        }
        let p = x.numer();
        let q = x.denom();
        // sum c_i p^i q^(n-1-i), Horner in p with a running power of q.
        let mut acc = self.coeffs[n - 1].clone();
        let mut qpow = q.clone();
        for c in self.coeffs[..n - 1].iter().rev() {
            acc.mul_assign(&p);
            acc.add_mul(c, &qpow);
            qpow.mul_assign(&q);
        }
        // qpow ended at q^n; the denominator is q^(n-1).
        let mut den = Mpz::from_bigint(&BigInt::from(1));
        for _ in 1..n {
            den.mul_assign(&q);
        }
        Mpq::from_parts(&acc, &den).mul(&self.scale)
    }
}
