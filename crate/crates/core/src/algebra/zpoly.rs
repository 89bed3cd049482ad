//! Dense univariate polynomials over the integers.
//!
//! This is the workhorse behind [`RatFunc`](super::RatFunc): every rational
//! function is stored as a rational scalar times a quotient of two primitive
//! integer polynomials, so all gcds and products happen here without any
//! rational-coefficient normalization.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

/// Integer polynomial, coefficients in ascending order, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        ZPoly::from_coeffs(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        ZPoly::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        ZPoly::monomial(BigInt::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        ZPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits `self = c * p` with `p` primitive and `lc(p) > 0`.
    pub fn primitive_part(&self) -> (BigInt, ZPoly) {
        if self.is_zero() {
            return (BigInt::zero(), ZPoly::zero());
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar_exact(&c))
    }

    pub fn primitive(&self) -> ZPoly {
        self.primitive_part().1
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Divides every coefficient by `k`; the caller guarantees exactness.
    pub fn div_scalar_exact(&self, k: &BigInt) -> ZPoly {
        if k.is_one() {
            return self.clone();
        }
        debug_assert!(self.coeffs.iter().all(|c| (c % k).is_zero()));
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> ZPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    /// Order of vanishing at 0 (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the lowest `k` coefficients, i.e. exact division by `x^k` when
    /// `k <= valuation`.
    pub fn shift_down(&self, k: usize) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn derivative(&self) -> ZPoly {
        ZPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        // Homogenized Horner keeps everything integral until the final division.
        let (p, q) = (x.numer(), x.denom());
        let n = self.deg();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        BigRational::new(acc, q.pow(n as u32))
    }

    /// `p(-x)`
    pub fn negate_var(&self) -> ZPoly {
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `p(x^k)`
    pub fn inflate(&self, k: usize) -> ZPoly {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        ZPoly { coeffs }
    }

    /// Inverse of [`inflate`](Self::inflate): `Some(q)` with `q(x^k) = p(x)`
    /// when every exponent of `p` is a multiple of `k`.
    pub fn deflate(&self, k: usize) -> Option<ZPoly> {
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i % k != 0 && !c.is_zero())
        {
            return None;
        }
        Some(ZPoly::from_coeffs(
            self.coeffs.iter().step_by(k).cloned().collect(),
        ))
    }

    pub fn pow(&self, n: u32) -> ZPoly {
        let mut result = ZPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `lc(b)^(deg a - deg b + 1) * a mod b`, computed without fractions.
    pub fn pseudo_rem(&self, b: &ZPoly) -> ZPoly {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return self.clone(),
        };
        let lcb = b.lc();
        let mut r = self.coeffs.clone();
        let mut steps = 0u32;
        for top in (db..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let lead = std::mem::take(&mut r[top]);
            for c in r.iter_mut().take(top) {
                *c *= &lcb;
            }
            let shift = top - db;
            for (i, bc) in b.coeffs.iter().take(db).enumerate() {
                r[shift + i] -= &lead * bc;
            }
            steps += 1;
        }
        let missing = (da - db + 1) as u32 - steps;
        let mut rem = ZPoly::from_coeffs(r);
        if missing > 0 {
            rem = rem.scale(&Pow::pow(&lcb, missing));
        }
        rem
    }

    /// Exact quotient `self / b` over the integers, `None` when `b` does not
    /// divide `self` in `Z[x]`.
    pub fn div_exact(&self, b: &ZPoly) -> Option<ZPoly> {
        let db = b.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if db == 0 {
            let k = &b.coeffs[0];
            if self.coeffs.iter().any(|c| !(c % k).is_zero()) {
                return None;
            }
            return Some(self.div_scalar_exact(k));
        }
        let da = self.deg();
        if da < db {
            return None;
        }
        let lcb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for top in (db..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let (qc, rem) = r[top].div_rem(&lcb);
            if !rem.is_zero() {
                return None;
            }
            let shift = top - db;
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[shift + i] -= &qc * bc;
            }
            q[shift] = qc;
        }
        if r.iter().take(db).any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::from_coeffs(q))
    }

    /// Primitive gcd with positive leading coefficient, via the subresultant
    /// polynomial remainder sequence. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.is_constant() || other.is_constant() {
            return ZPoly::one();
        }
        if self == other {
            return self.primitive();
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        // Cheap exit for the common "b divides a" case.
        if a.div_exact(&b).is_some() {
            return b;
        }
        subresultant_gcd(a, b)
    }

    /// Integer polynomial square root, if `self` is a perfect square in `Z[x]`.
    pub fn sqrt(&self) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let n = self.deg();
        if n % 2 == 1 || self.lc().is_negative() {
            return None;
        }
        let m = n / 2;
        let top = self.lc().sqrt();
        if &top * &top != self.lc() {
            return None;
        }
        let mut s = vec![BigInt::zero(); m + 1];
        s[m] = top;
        let two_top = &s[m] * 2;
        for k in 1..=m {
            // coefficient of x^(n-k) in s^2 involves s[m-k] linearly
            let idx = n - k;
            let mut acc = self.coeff(idx);
            for i in (m - k + 1)..=m {
                let j = idx - i;
                if j > m - k && j <= m {
                    acc -= &s[i] * &s[j];
                }
            }
            let (q, r) = acc.div_rem(&two_top);
            if !r.is_zero() {
                return None;
            }
            s[m - k] = q;
        }
        let root = ZPoly::from_coeffs(s);
        (&root * &root == *self).then_some(root)
    }
}

fn subresultant_gcd(mut a: ZPoly, mut b: ZPoly) -> ZPoly {
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (a.deg() - b.deg()) as u32;
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            break;
        }
        if r.is_constant() {
            return ZPoly::one();
        }
        let divisor = &g * Pow::pow(&h, delta);
        a = b;
        b = r.div_scalar_exact(&divisor);
        g = a.lc();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => Pow::pow(&g, delta) / Pow::pow(&h, delta - 1),
        };
    }
    b.primitive()
}

impl Add<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Sub<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Mul<&ZPoly> for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        ZPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ZPoly> for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: ZPoly) -> ZPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ZPoly> for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: &ZPoly) -> ZPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        -&self
    }
}
