//! Reading polynomials from text.
//!
//! Two forms are accepted: an expression in `x` built from `+ - * / ^`,
//! parentheses and integer, fraction or decimal literals, such as
//! `x^3 - 20*x + 7` or `1/2*x^2 - 3`; or a coefficient list `c0, c1, ...`
//! in ascending powers, such as `7, -20, 0, 1`. Literals are read exactly.
//! Positions in errors are byte offsets into the input.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::decimal::parse_decimal;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest exponent accepted; beyond it the expansion is not worth doing.
const MAX_EXPONENT: u32 = 100_000;

pub fn parse_poly(text: &str) -> Result<Poly> {
    if has_top_level_comma(text) {
        return parse_coefficient_list(text);
    }
    let mut p = Parser { text, pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(Error::parse(p.pos, format!("unexpected {:?}", p.peek().unwrap_or(' '))));
    }
    Ok(f)
}

fn has_top_level_comma(text: &str) -> bool {
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

/// Each entry is a constant expression; entry `i` multiplies `x^i`.
fn parse_coefficient_list(text: &str) -> Result<Poly> {
    let mut coeffs = Vec::new();
    let mut start = 0;
    for piece in text.split(',') {
        let mut p = Parser {
            text: &text[..start + piece.len()],
            pos: start,
        };
        p.skip_ws();
        if p.pos == start + piece.len() {
            return Err(Error::parse(p.pos, "empty coefficient"));
        }
        let at = p.pos;
        let c = p.expr()?;
        p.skip_ws();
        if p.pos < start + piece.len() {
            return Err(Error::parse(p.pos, format!("unexpected {:?}", p.peek().unwrap_or(' '))));
        }
        if !c.is_constant() {
            return Err(Error::parse(at, "coefficient list entries must be constants"));
        }
        coeffs.push(c.coeff(0));
        start += piece.len() + 1;
    }
    Ok(Poly::new(coeffs))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    /// Next non-blank character, consumed if it is `want`.
    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                self.skip_ws();
                let at = self.pos;
                let d = self.unary()?;
                if !d.is_constant() {
                    return Err(Error::parse(at, "division by a non-constant"));
                }
                if d.is_zero() {
                    return Err(Error::parse(at, "division by zero"));
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / d.coeff(0)));
            } else {
                return Ok(acc);
            }
        }
    }

    // unary := ('+' | '-') unary | power
    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    // power := atom ('^' unary)?; the exponent must be a non-negative
    // integer constant. Right associative through `unary`.
    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        let e = self.unary()?;
        if !e.is_constant() {
            return Err(Error::UnsupportedExponent { pos: at });
        }
        let e = e.coeff(0);
        if !e.is_integer() || e < Rational::zero() {
            return Err(Error::UnsupportedExponent { pos: at });
        }
        match e.to_integer().to_u32().filter(|&n| n <= MAX_EXPONENT) {
            Some(n) => Ok(base.pow(n)),
            None => Err(Error::parse(at, format!("exponent larger than {MAX_EXPONENT}"))),
        }
    }

    // atom := number | 'x' | '(' expr ')'
    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) => Err(Error::parse(at, format!("unexpected {c:?}"))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }

    /// Digits with an optional fraction and an optional `e`/`E` exponent.
    fn number(&mut self) -> Result<Poly> {
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let digits = |mut i: usize| {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            i
        };
        let mut end = digits(start);
        if end < bytes.len() && bytes[end] == b'.' {
            end = digits(end + 1);
        }
        if end < bytes.len() && (bytes[end] == b'e' || bytes[end] == b'E') {
            let mut k = end + 1;
            if k < bytes.len() && (bytes[k] == b'+' || bytes[k] == b'-') {
                k += 1;
            }
            let after = digits(k);
            if after > k {
                end = after;
            }
        }
        let literal = &self.text[start..end];
        let value = if literal.contains(['.', 'e', 'E']) {
            parse_decimal(literal).ok_or_else(|| Error::parse(start, format!("bad number {literal:?}")))?
        } else {
            let n: BigInt = literal
                .parse()
                .map_err(|_| Error::parse(start, format!("bad number {literal:?}")))?;
            Rational::from_integer(n)
        };
        self.pos = end;
        Ok(Poly::constant(value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn coeffs(f: &Poly) -> Vec<Rational> {
        f.coeffs().to_vec()
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_poly("x^3-20*x+7").unwrap(), Poly::from_ints(&[7, -20, 0, 1]));
        assert_eq!(
            coeffs(&parse_poly("1/2*x^2 - 3").unwrap()),
            vec![rat(-3, 1), rat(0, 1), rat(1, 2)]
        );
        assert_eq!(parse_poly("(x-1)^2*(x+2)").unwrap(), Poly::from_ints(&[2, -3, 0, 1]));
        assert_eq!(parse_poly("-x^2").unwrap(), Poly::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("2^3^2").unwrap(), Poly::from_ints(&[512]));
        assert_eq!(parse_poly("x^(1+1)").unwrap(), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(parse_poly("0.25*x - 1.5e1").unwrap().coeffs(), &[rat(-15, 1), rat(1, 4)]);
        assert_eq!(parse_poly(" x / 4 ").unwrap().coeffs(), &[rat(0, 1), rat(1, 4)]);
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
    }

    #[test]
    fn coefficient_lists() {
        assert_eq!(parse_poly("7,-20,0,1").unwrap(), Poly::from_ints(&[7, -20, 0, 1]));
        assert_eq!(parse_poly(" -3 , 0 , 1/2 ").unwrap().coeffs(), &[rat(-3, 1), rat(0, 1), rat(1, 2)]);
        assert_eq!(parse_poly("1,0,0").unwrap(), Poly::one());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly("x^-1"), Err(Error::UnsupportedExponent { pos: 2 })));
        assert!(matches!(parse_poly("x^(1/2)"), Err(Error::UnsupportedExponent { .. })));
        assert!(matches!(parse_poly("x^x"), Err(Error::UnsupportedExponent { .. })));
        assert!(matches!(parse_poly("x^2.5"), Err(Error::UnsupportedExponent { .. })));
        assert!(matches!(parse_poly("x +* 2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly("(x+1"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("1/x"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("2 x"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("y"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_poly("1,,2"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("1,x"), Err(Error::Parse { pos: 2, .. })));
    }

    #[test]
    fn render_round_trip() {
        for f in [
            Poly::from_ints(&[7, -20, 0, 1]),
            Poly::new(vec![rat(-3, 1), rat(0, 1), rat(-1, 2)]),
            Poly::from_ints(&[0, 1]),
            Poly::from_ints(&[-5]),
            Poly::zero(),
        ] {
            assert_eq!(parse_poly(&f.render()).unwrap(), f);
        }
    }
}
