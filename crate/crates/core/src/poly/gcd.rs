use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Poly;

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn make_primitive(v: &mut Vec<BigInt>) {
    trim(v);
    let Some(last) = v.last() else { return };
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if last.is_negative() {
        g = -g;
    }
    for c in v.iter_mut() {
        *c /= &g;
    }
}

/// Pseudo-remainder of `a` by `b` over the integers: the remainder of
/// `lc(b)^k * a` for a suitable `k`, with content stripped along the way.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim(&mut r);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let g = lr.gcd(lb);
        let mul_r = lb / &g;
        let mul_b = &lr / &g;
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &mul_r;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &mul_b * bc;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
    }
    make_primitive(&mut r);
    r
}

/// Greatest common divisor, normalized to coprime integer coefficients with a
/// positive leading coefficient. `gcd(f, 0) = primitive(f)`.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    assert!(!(f.is_zero() && g.is_zero()), "gcd(0, 0) is undefined");
    let (_, mut a) = f.content_and_primitive();
    let (_, mut b) = g.content_and_primitive();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return Poly::one();
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r;
    }
    Poly::from_big_ints(a)
}

/// `gcd(f, f') == 1`; the zero polynomial is not square-free.
pub fn is_square_free(f: &Poly) -> bool {
    if f.is_zero() {
        return false;
    }
    f.is_constant() || poly_gcd(f, &f.derivative()).is_constant()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        let x2m1 = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(poly_gcd(&x2m1, &Poly::from_ints(&[-1, 1])), Poly::from_ints(&[-1, 1]));
        // x(x+1)(x+2) and its second derivative share x + 1.
        let f = Poly::from_ints(&[0, 2, 3, 1]);
        assert_eq!(poly_gcd(&f, &Poly::from_ints(&[6, 6])), Poly::from_ints(&[1, 1]));
        assert_eq!(poly_gcd(&Poly::from_ints(&[-2, 0, 1]), &Poly::from_ints(&[0, 2])), Poly::one());
    }

    #[test]
    fn gcd_normalization() {
        let f = Poly::from_ints(&[2, -2]); // -2x + 2
        assert_eq!(poly_gcd(&f, &Poly::zero()), Poly::from_ints(&[-1, 1]));
        let g = Poly::from_ints(&[-6, 0, 6]);
        assert_eq!(poly_gcd(&f, &g), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn square_free_check() {
        assert!(is_square_free(&Poly::from_ints(&[7, -20, 0, 1])));
        assert!(!is_square_free(&Poly::from_ints(&[0, 0, 1])));
        assert!(!is_square_free(&Poly::zero()));
        assert!(is_square_free(&Poly::from_ints(&[3])));
    }
}
