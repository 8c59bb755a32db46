//! Square-free decomposition `f = c * g_1^1 * g_2^2 * ... ` (Yun).

use num_traits::Zero;
use serde::Serialize;

use super::{poly_gcd, Poly};
use crate::arith::Rational;
use crate::error::{Error, Result};

/// One square-free factor and the multiplicity its roots carry in `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeFactor {
    pub factor: Poly,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    /// Rational scalar with `f = constant * prod(factor^multiplicity)`.
    pub constant: Rational,
    /// Pairwise coprime, square-free, primitive factors; multiplicities
    /// strictly increasing.
    pub factors: Vec<SquareFreeFactor>,
}

impl SquareFreeDecomposition {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.constant.clone()), |acc, sf| {
                &acc * &sf.factor.pow(sf.multiplicity)
            })
    }
}

#[derive(Serialize)]
struct FactorView {
    factor: String,
    multiplicity: u32,
}

impl Serialize for SquareFreeDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let factors: Vec<FactorView> = self
            .factors
            .iter()
            .map(|f| FactorView {
                factor: f.factor.render(),
                multiplicity: f.multiplicity,
            })
            .collect();
        let mut st = s.serialize_struct("SquareFreeDecomposition", 2)?;
        st.serialize_field("constant", &self.constant.to_string())?;
        st.serialize_field("factors", &factors)?;
        st.end()
    }
}

pub fn square_free_decomposition(f: &Poly) -> Result<SquareFreeDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    if !f.is_constant() {
        let prim = f.primitive();
        let d = prim.derivative();
        let g = poly_gcd(&prim, &d);
        let mut a = prim.exact_div(&g);
        let mut b = d.exact_div(&g);
        let mut c = &b - &a.derivative();
        let mut k = 1u32;
        while !a.is_constant() {
            let dk = if c.is_zero() { a.clone() } else { poly_gcd(&a, &c) };
            if !dk.is_constant() {
                factors.push(SquareFreeFactor {
                    factor: dk.primitive(),
                    multiplicity: k,
                });
            }
            a = a.exact_div(&dk);
            if c.is_zero() {
                break;
            }
            b = c.exact_div(&dk);
            c = &b - &a.derivative();
            k += 1;
        }
    }
    let mut lead = Rational::from_integer(1.into());
    for sf in &factors {
        let l = sf.factor.leading();
        for _ in 0..sf.multiplicity {
            lead *= &l;
        }
    }
    let constant = f.leading() / lead;
    debug_assert!(!constant.is_zero());
    Ok(SquareFreeDecomposition { constant, factors })
}
