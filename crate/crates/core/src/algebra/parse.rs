//! Parser for univariate polynomial expressions such as
//! `u^4*(u^3 - 11)*(3*u^2 + 5) - 7/2`.
//!
//! Grammar: sums and differences of products; factors are integers, the
//! variable, or parenthesized expressions, optionally raised to a
//! nonnegative integer power. Division is allowed by nonzero constants only.

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::Rational;
use super::unipoly::{UniPoly, Var};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: Var,
    name: String,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = if self.eat(b'-') {
            -&self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let d = self.power()?;
                let c = match d.degree() {
                    Some(0) => d.coeff(0),
                    _ => return Err(err("division by a non-constant")),
                };
                if c.is_zero() {
                    return Err(err("division by zero"));
                }
                acc = acc.scale(&(Rational::from_integer(1.into()) / c));
            } else if matches!(self.peek(), Some(b'(')) {
                // implicit product before a parenthesis
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<UniPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let n = self.integer()?;
            let n: u32 = n.try_into().map_err(|_| err("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(format!("expected a number at offset {start}")));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<UniPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(err(format!("expected ')' at offset {}", self.pos)));
                }
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(UniPoly::constant(self.var, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if word != self.name {
                    return Err(err(format!(
                        "unknown symbol '{word}', expected '{}'",
                        self.name
                    )));
                }
                Ok(UniPoly::x(self.var))
            }
            other => Err(err(format!(
                "unexpected {} at offset {}",
                other.map_or("end of input".to_string(), |c| format!("'{}'", c as char)),
                self.pos
            ))),
        }
    }
}

/// Parses `text` as a polynomial in `var` (written with the variable's
/// display name, e.g. `u`, `s`, `x1`).
pub fn parse_poly(text: &str, var: Var) -> Result<UniPoly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        var,
        name: var.to_string(),
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input at offset {}", p.pos)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_powers() {
        let p = parse_poly("u^4*(u^3-11)", Var::U).unwrap();
        assert_eq!(p, UniPoly::from_ints(Var::U, &[0, 0, 0, 0, -11, 0, 0, 1]));
        let q = parse_poly("-u^2(3u - 1)", Var::U);
        assert!(
            q.is_err(),
            "implicit number-variable products are not supported"
        );
        let q = parse_poly("-u^2*(3*u - 1) + 7/2", Var::U).unwrap();
        assert_eq!(q.coeff(0), Rational::new(7.into(), 2.into()));
        assert_eq!(q.coeff(3), Rational::from_integer((-3).into()));
    }

    #[test]
    fn implicit_product_with_parenthesis() {
        let a = parse_poly("s(s+121)", Var::S).unwrap();
        assert_eq!(a, UniPoly::from_ints(Var::S, &[0, 121, 1]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("u +", Var::U).is_err());
        assert!(parse_poly("v", Var::U).is_err());
        assert!(parse_poly("u/0", Var::U).is_err());
        assert!(parse_poly("1/u", Var::U).is_err());
    }
}
