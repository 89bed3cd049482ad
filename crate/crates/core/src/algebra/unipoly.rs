use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, Rational};
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Name of the indeterminate a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    U,
    S,
    X1,
    X2,
    Z,
    /// Chart variable `t = 1/s` at infinity.
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::U => "u",
            Var::S => "s",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::Z => "z",
            Var::T => "t",
        })
    }
}

/// Dense polynomial over the rationals in a tagged indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(var: Var, coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { var, coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero(var: Var) -> Self {
        UniPoly::new(var, Vec::new())
    }

    pub fn one(var: Var) -> Self {
        UniPoly::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        UniPoly::new(var, vec![c])
    }

    /// The indeterminate itself.
    pub fn x(var: Var) -> Self {
        UniPoly::monomial(var, Rational::one(), 1)
    }

    pub fn monomial(var: Var, c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly::new(var, coeffs)
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        UniPoly::new(
            var,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients, different indeterminate tag.
    pub fn with_var(&self, var: Var) -> Self {
        UniPoly {
            var,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    fn same_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VarMismatch(self.var, other.var));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(UniPoly::new(
            self.var,
            (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(UniPoly::zero(self.var));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(UniPoly::new(self.var, coeffs))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_var(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree().filter(|&d| d >= db) else {
            return Ok((UniPoly::zero(self.var), self.clone()));
        };
        let inv_lc = divisor.lc().recip();
        let mut q = vec![Rational::zero(); da - db + 1];
        for top in (db..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let c = &r[top] * &inv_lc;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[top - db + i] -= &c * b;
            }
            q[top - db] = c;
        }
        r.truncate(db);
        Ok((UniPoly::new(self.var, q), UniPoly::new(self.var, r)))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        UniPoly::new(self.var, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self(g)`; the result is written in `g`'s indeterminate.
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(g.var), |acc, c| {
                &(&acc * g) + &UniPoly::constant(g.var, c.clone())
            })
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        (0..n).fold(UniPoly::one(self.var), |acc, _| &acc * self)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_var(other)?;
        let (_, a) = self.to_zpoly();
        let (_, b) = other.to_zpoly();
        Ok(UniPoly::from_zpoly(self.var, &Rational::one(), &a.gcd(&b)).monic())
    }

    /// `self = c * p` with `p` a primitive integer polynomial of positive
    /// leading coefficient.
    pub fn to_zpoly(&self) -> (Rational, ZPoly) {
        if self.is_zero() {
            return (Rational::zero(), ZPoly::zero());
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = ZPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        );
        let (k, p) = ints.primitive_part();
        (Rational::new(k, l), p)
    }

    pub fn from_zpoly(var: Var, c: &Rational, p: &ZPoly) -> Self {
        UniPoly::new(
            var,
            p.coeffs()
                .iter()
                .map(|a| c * Rational::from_integer(a.clone()))
                .collect(),
        )
    }

    /// `p(-x)`
    pub fn negate_var(&self) -> Self {
        UniPoly::new(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Descending-power rendering, e.g. `3*s^2 - s + 1/2`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, i),
            };
            if i == 0 {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), mono));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

// Operator forms panic on an indeterminate mismatch; use the `checked_*`
// methods where the tags are not known to agree.
impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.checked_add(rhs).expect("indeterminate mismatch")
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.checked_sub(rhs).expect("indeterminate mismatch")
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.checked_mul(rhs).expect("indeterminate mismatch")
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
