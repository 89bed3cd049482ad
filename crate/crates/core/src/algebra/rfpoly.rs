use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::unipoly::{UniPoly, Var};
use crate::error::{Error, Result};

/// Dense polynomial in `outer` with coefficients in `Q(inner)`, e.g. an
/// element of `Q(u)[x1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RfPoly {
    outer: Var,
    inner: Var,
    coeffs: Vec<RatFunc>,
}

impl RfPoly {
    pub fn new(outer: Var, inner: Var, coeffs: Vec<RatFunc>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.var() == inner));
        let mut p = RfPoly {
            outer,
            inner,
            coeffs,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(RatFunc::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero(outer: Var, inner: Var) -> Self {
        RfPoly::new(outer, inner, Vec::new())
    }

    pub fn constant(outer: Var, c: RatFunc) -> Self {
        let inner = c.var();
        RfPoly::new(outer, inner, vec![c])
    }

    pub fn one(outer: Var, inner: Var) -> Self {
        RfPoly::constant(outer, RatFunc::one(inner))
    }

    /// The outer indeterminate.
    pub fn x(outer: Var, inner: Var) -> Self {
        RfPoly::new(
            outer,
            inner,
            vec![RatFunc::zero(inner), RatFunc::one(inner)],
        )
    }

    /// Lifts a rational polynomial, coefficients becoming constants.
    pub fn from_unipoly(p: &UniPoly, inner: Var) -> Self {
        RfPoly::new(
            p.var(),
            inner,
            p.coeffs()
                .iter()
                .map(|c| RatFunc::constant(inner, c.clone()))
                .collect(),
        )
    }

    pub fn outer(&self) -> Var {
        self.outer
    }

    pub fn inner(&self) -> Var {
        self.inner
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.inner))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> RatFunc {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.inner))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.outer != other.outer {
            return Err(Error::VarMismatch(self.outer, other.outer));
        }
        if self.inner != other.inner {
            return Err(Error::VarMismatch(self.inner, other.inner));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).checked_add(&other.coeff(i)))
            .collect::<Result<_>>()?;
        Ok(RfPoly::new(self.outer, self.inner, coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RfPoly::zero(self.outer, self.inner));
        }
        let mut coeffs =
            vec![RatFunc::zero(self.inner); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].checked_add(&a.checked_mul(b)?)?;
                }
            }
        }
        Ok(RfPoly::new(self.outer, self.inner, coeffs))
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        RfPoly::new(
            self.outer,
            self.inner,
            self.coeffs.iter().map(|c| c * k).collect(),
        )
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        RfPoly::new(
            self.outer,
            self.inner,
            self.coeffs.iter().map(|c| c.scale_by(k)).collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Euclidean division over the coefficient field.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(da) = self.degree().filter(|&d| d >= db) else {
            return Ok((RfPoly::zero(self.outer, self.inner), self.clone()));
        };
        let inv_lc = divisor.lc().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![RatFunc::zero(self.inner); da - db + 1];
        for top in (db..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let c = &r[top] * &inv_lc;
            for (i, b) in divisor.coeffs.iter().enumerate().take(db) {
                r[top - db + i] = &r[top - db + i] - &(&c * b);
            }
            r[top] = RatFunc::zero(self.inner);
            q[top - db] = c;
        }
        r.truncate(db);
        Ok((
            RfPoly::new(self.outer, self.inner, q),
            RfPoly::new(self.outer, self.inner, r),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.divrem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Monic gcd by the Euclidean algorithm over `Q(inner)`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (mut a, mut b) = (self.monic(), other.monic());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    pub fn derivative(&self) -> Self {
        RfPoly::new(
            self.outer,
            self.inner,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale_by(&Rational::from_integer(i.into())))
                .collect(),
        )
    }

    pub fn eval(&self, x: &RatFunc) -> Result<RatFunc> {
        let mut acc = RatFunc::zero(self.inner);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x)?.checked_add(c)?;
        }
        Ok(acc)
    }

    /// Applies `f` to every coefficient (e.g. `u -> -u`).
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let coeffs: Vec<RatFunc> = self.coeffs.iter().map(f).collect();
        let inner = coeffs.first().map_or(self.inner, RatFunc::var);
        RfPoly::new(self.outer, inner, coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(RfPoly::one(self.outer, self.inner), |acc, _| &acc * self)
    }

    /// Same coefficients in a renamed outer indeterminate.
    pub fn with_outer(&self, outer: Var) -> Self {
        RfPoly {
            outer,
            ..self.clone()
        }
    }
}

impl fmt::Display for RfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.outer)?,
                _ => write!(f, "({c})*{}^{i}", self.outer)?,
            }
        }
        Ok(())
    }
}

impl Add<&RfPoly> for &RfPoly {
    type Output = RfPoly;
    fn add(self, rhs: &RfPoly) -> RfPoly {
        self.checked_add(rhs).expect("indeterminate mismatch")
    }
}

impl Sub<&RfPoly> for &RfPoly {
    type Output = RfPoly;
    fn sub(self, rhs: &RfPoly) -> RfPoly {
        self.checked_add(&-rhs).expect("indeterminate mismatch")
    }
}

impl Mul<&RfPoly> for &RfPoly {
    type Output = RfPoly;
    fn mul(self, rhs: &RfPoly) -> RfPoly {
        self.checked_mul(rhs).expect("indeterminate mismatch")
    }
}

impl Neg for &RfPoly {
    type Output = RfPoly;
    fn neg(self) -> RfPoly {
        RfPoly {
            outer: self.outer,
            inner: self.inner,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: RatFunc, b: RatFunc) -> RfPoly {
        // a + b*x1
        RfPoly::new(Var::X1, Var::U, vec![a, b])
    }

    #[test]
    fn gcd_over_function_field() {
        let u = RatFunc::x(Var::U);
        let one = RatFunc::one(Var::U);
        // (x - u)(x + 1) and (x - u)(x - 1)
        let f = &lin(-&u, one.clone()) * &lin(one.clone(), one.clone());
        let g = &lin(-&u, one.clone()) * &lin(-&one, one.clone());
        assert_eq!(f.gcd(&g).unwrap(), lin(-&u, one.clone()));
    }

    #[test]
    fn divrem_identity() {
        let u = RatFunc::x(Var::U);
        let one = RatFunc::one(Var::U);
        let f = RfPoly::new(
            Var::X1,
            Var::U,
            vec![one.clone(), u.clone(), &u * &u, one.clone()],
        );
        let g = lin(u.clone(), &u + &one);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(&(&q * &g) + &r, f);
        assert_eq!(r.degree(), Some(0));
    }

    #[test]
    fn eval_matches_substitution() {
        let u = RatFunc::x(Var::U);
        let one = RatFunc::one(Var::U);
        let f = RfPoly::new(Var::X1, Var::U, vec![one.clone(), u.clone(), one.clone()]);
        // f(u) = 1 + u^2 + u^2
        let v = f.eval(&u).unwrap();
        let expect = &one + &(&(&u * &u) + &(&u * &u));
        assert_eq!(v, expect);
    }
}
