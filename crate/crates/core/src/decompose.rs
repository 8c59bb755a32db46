//! Local monotonic convex decomposition: split a square-free polynomial into
//! factors that are linear or coprime with their own second derivative, so
//! each one admits an isolation on which `f'` and `f''` keep their sign.

use std::cmp::Ordering;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::{is_square_free, poly_gcd, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lmcd {
    /// `f = constant * prod(factors)`.
    pub constant: Rational,
    /// Primitive integer factors, sorted by degree and then coefficients.
    pub factors: Vec<Poly>,
}

/// Compute an LMCD of `f`: `g = gcd(f, f'')`; if `g = 1` the answer is `{f}`,
/// otherwise recurse on `g` and `f / g`.
pub fn lmcd(f: &Poly) -> Result<Lmcd> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if !is_square_free(f) {
        return Err(Error::NotSquareFree);
    }
    let mut factors = Vec::new();
    split(f.primitive(), &mut factors);
    factors.sort_by(canonical_order);
    let product = factors.iter().fold(Poly::one(), |acc, g| &acc * g);
    let constant = f.leading() / product.leading();
    Ok(Lmcd { constant, factors })
}

fn split(f: Poly, out: &mut Vec<Poly>) {
    if f.deg() == 1 {
        out.push(f);
        return;
    }
    let g = poly_gcd(&f, &f.derivative().derivative());
    if g.is_constant() {
        out.push(f);
        return;
    }
    let h = f.exact_div(&g).primitive();
    split(g, out);
    split(h, out);
}

fn canonical_order(a: &Poly, b: &Poly) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn splits_the_three_consecutive_integers_cubic() {
        let f = Poly::from_ints(&[0, 2, 3, 1]);
        let d = lmcd(&f).unwrap();
        assert_eq!(d.factors, vec![Poly::from_ints(&[1, 1]), Poly::from_ints(&[0, 2, 1])]);
        assert_eq!(d.constant, int(1));
    }

    #[test]
    fn base_cases() {
        assert_eq!(lmcd(&Poly::from_ints(&[1, 1])).unwrap().factors, vec![Poly::from_ints(&[1, 1])]);
        assert_eq!(lmcd(&Poly::from_ints(&[-2, 0, 1])).unwrap().factors, vec![Poly::from_ints(&[-2, 0, 1])]);
    }

    #[test]
    fn constant_scalar_is_tracked() {
        let f = Poly::from_ints(&[0, -6, -9, -3]); // -3 x (x+1)(x+2)
        let d = lmcd(&f).unwrap();
        let product = d.factors.iter().fold(Poly::constant(d.constant.clone()), |acc, g| &acc * g);
        assert_eq!(product, f);
        assert_eq!(d.constant, int(-3));
    }

    #[test]
    fn errors() {
        assert_eq!(lmcd(&Poly::from_ints(&[4])), Err(Error::ConstantInput));
        assert_eq!(lmcd(&Poly::from_ints(&[0, 0, 1])), Err(Error::NotSquareFree));
    }
}
