use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::unipoly::{UniPoly, Var};
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Element of the rational function field `Q(var)` in lowest terms.
///
/// Internally the value is `scale * num / den` where `num` and `den` are
/// coprime primitive integer polynomials with positive leading coefficients
/// (`num` is empty for zero). This is a canonical form, so derived equality is
/// mathematical equality. [`RatFunc::num`] and [`RatFunc::den`] expose the
/// conventional view with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    var: Var,
    scale: Rational,
    num: ZPoly,
    den: ZPoly,
}

fn split_rational(r: &Rational) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

impl RatFunc {
    pub fn zero(var: Var) -> Self {
        RatFunc {
            var,
            scale: Rational::zero(),
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one(var: Var) -> Self {
        RatFunc::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        if c.is_zero() {
            return RatFunc::zero(var);
        }
        RatFunc {
            var,
            scale: c,
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_int(var: Var, c: i64) -> Self {
        RatFunc::constant(var, Rational::from_integer(c.into()))
    }

    /// The indeterminate.
    pub fn x(var: Var) -> Self {
        RatFunc::from_zpolys_coprime(var, Rational::one(), ZPoly::x(), ZPoly::one())
    }

    pub fn from_poly(p: &UniPoly) -> Self {
        let (c, z) = p.to_zpoly();
        RatFunc::from_zpolys_coprime(p.var(), c, z, ZPoly::one())
    }

    /// `num / den` reduced to lowest terms.
    pub fn new(num: &UniPoly, den: &UniPoly) -> Result<Self> {
        if num.var() != den.var() {
            return Err(Error::VarMismatch(num.var(), den.var()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (cn, n) = num.to_zpoly();
        let (cd, d) = den.to_zpoly();
        Ok(RatFunc::from_zpolys(num.var(), cn / cd, n, d))
    }

    /// `scale * num / den` for arbitrary integer polynomials (den nonzero).
    pub fn from_zpolys(var: Var, scale: Rational, num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() || scale.is_zero() {
            return RatFunc::zero(var);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        RatFunc::from_zpolys_coprime(var, scale, num, den)
    }

    /// Like [`from_zpolys`](Self::from_zpolys) but trusts `gcd(num, den) = 1`.
    fn from_zpolys_coprime(var: Var, scale: Rational, num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() || scale.is_zero() {
            return RatFunc::zero(var);
        }
        let (cn, num) = num.primitive_part();
        let (cd, den) = den.primitive_part();
        RatFunc {
            var,
            scale: scale * Rational::new(cn, cd),
            num,
            den,
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same value, indeterminate renamed.
    pub fn with_var(&self, var: Var) -> Self {
        RatFunc {
            var,
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one() && self.scale.is_one()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        (self.num.is_constant() && self.den.is_constant()).then(|| self.scale.clone())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Numerator in the canonical view (denominator monic).
    pub fn num(&self) -> UniPoly {
        let c = &self.scale / Rational::from_integer(self.den.lc());
        UniPoly::from_zpoly(self.var, &c, &self.num)
    }

    /// Monic denominator.
    pub fn den(&self) -> UniPoly {
        let c = Rational::new(BigInt::one(), self.den.lc());
        UniPoly::from_zpoly(self.var, &c, &self.den)
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_poly(&self) -> Option<UniPoly> {
        self.is_polynomial().then(|| self.num())
    }

    /// Integer-polynomial parts: `self = scale * numer_z / denom_z`.
    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn numer_z(&self) -> &ZPoly {
        &self.num
    }

    pub fn denom_z(&self) -> &ZPoly {
        &self.den
    }

    pub fn num_degree(&self) -> usize {
        self.num.deg()
    }

    pub fn den_degree(&self) -> usize {
        self.den.deg()
    }

    /// `max(deg num, deg den)`, a rough size measure.
    pub fn size_degree(&self) -> usize {
        self.num.deg().max(self.den.deg())
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VarMismatch(self.var, other.var));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let (pa, qa) = split_rational(&self.scale);
        let (pb, qb) = split_rational(&other.scale);
        let ka = &pa * &qb;
        let kb = &pb * &qa;
        let scale = Rational::new(BigInt::one(), &qa * &qb);
        if self.den == other.den {
            let num = &self.num.scale(&ka) + &other.num.scale(&kb);
            return Ok(RatFunc::from_zpolys(self.var, scale, num, self.den.clone()));
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = self.den.gcd(&other.den);
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &db).scale(&ka) + &(&other.num * &da).scale(&kb);
        if num.is_zero() {
            return Ok(RatFunc::zero(self.var));
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (
                num.div_exact(&h).expect("gcd divides"),
                g.div_exact(&h).expect("gcd divides"),
            )
        };
        let den = &(&da * &db) * &g;
        Ok(RatFunc::from_zpolys_coprime(self.var, scale, num, den))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RatFunc::zero(self.var));
        }
        let cancel = |n: &ZPoly, d: &ZPoly| -> (ZPoly, ZPoly) {
            let g = n.gcd(d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (
                    n.div_exact(&g).expect("gcd divides"),
                    d.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Ok(RatFunc::from_zpolys_coprime(
            self.var,
            &self.scale * &other.scale,
            &n1 * &n2,
            &d1 * &d2,
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::from_zpolys_coprime(
            self.var,
            self.scale.recip(),
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn scale_by(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return RatFunc::zero(self.var);
        }
        RatFunc {
            scale: &self.scale * k,
            ..self.clone()
        }
    }

    /// Integer powers; negative exponents invert.
    pub fn pow(&self, n: i32) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let e = n.unsigned_abs();
        if base.is_zero() {
            return Ok(if e == 0 { RatFunc::one(self.var) } else { base });
        }
        // Powers of coprime polynomials stay coprime.
        Ok(RatFunc {
            var: self.var,
            scale: num_traits::Pow::pow(&base.scale, e),
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Value at a rational point.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.scale * self.num.eval_rational(x) / d)
    }

    /// `f(-x)`
    pub fn negate_var(&self) -> Self {
        RatFunc::from_zpolys_coprime(
            self.var,
            self.scale.clone(),
            self.num.negate_var(),
            self.den.negate_var(),
        )
    }

    /// `f(g)` for a rational function `g` (in any indeterminate; the result
    /// takes `g`'s). Fails when the composed denominator vanishes.
    pub fn compose(&self, g: &RatFunc) -> Result<Self> {
        let horner = |p: &ZPoly| -> Result<RatFunc> {
            let mut acc = RatFunc::zero(g.var);
            for c in p.coeffs().iter().rev() {
                acc = acc
                    .checked_mul(g)?
                    .checked_add(&RatFunc::constant(g.var, Rational::from_integer(c.clone())))?;
            }
            Ok(acc)
        };
        let n = horner(&self.num)?;
        let d = horner(&self.den)?;
        Ok(n.checked_div(&d)?.scale_by(&self.scale))
    }

    /// `f(x^k)` written in `var`.
    pub fn inflate(&self, k: usize, var: Var) -> Self {
        RatFunc {
            var,
            scale: self.scale.clone(),
            num: self.num.inflate(k),
            den: self.den.inflate(k),
        }
    }

    /// Recognizes `f` as `g(x^k)` and returns `g` written in `var`.
    pub fn deflate(&self, k: usize, var: Var) -> Result<Self> {
        match (self.num.deflate(k), self.den.deflate(k)) {
            (Some(num), Some(den)) => Ok(RatFunc {
                var,
                scale: self.scale.clone(),
                num,
                den,
            }),
            _ => Err(Error::NotInSubfield(self.to_string())),
        }
    }

    /// Order of vanishing at `x = 0` (negative for poles). Zero maps to 0.
    pub fn ord_at_zero(&self) -> i64 {
        self.num.valuation() as i64 - self.den.valuation() as i64
    }

    /// `deg den - deg num`, the order of vanishing at infinity.
    pub fn ord_at_infinity(&self) -> i64 {
        self.den.deg() as i64 - self.num.deg() as i64
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num());
        }
        let num = self.num();
        let den = self.den();
        if let Some(c) = self.as_constant() {
            return f.write_str(&format_rational(&c));
        }
        let wrap = |p: &UniPoly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&num), wrap(&den))
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.checked_add(rhs).expect("indeterminate mismatch")
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.checked_sub(rhs).expect("indeterminate mismatch")
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("indeterminate mismatch")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            scale: -&self.scale,
            ..self.clone()
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(mut self) -> RatFunc {
        self.scale = -self.scale;
        self
    }
}

/// Scales a vector of rational functions by a common factor so that all
/// entries become integer polynomials with no common polynomial factor, no
/// common integer content, and a positive leading coefficient on the first
/// nonzero entry. `None` for the zero vector.
pub fn primitive_vector(v: &[RatFunc]) -> Option<Vec<ZPoly>> {
    if v.iter().all(RatFunc::is_zero) {
        return None;
    }
    let mut den = ZPoly::one();
    let mut scalar_den = BigInt::one();
    for c in v.iter().filter(|c| !c.is_zero()) {
        let g = den.gcd(c.denom_z());
        den = &den * &c.denom_z().div_exact(&g).expect("gcd divides");
        scalar_den = scalar_den.lcm(c.scale().denom());
    }
    let mut ints: Vec<ZPoly> = v
        .iter()
        .map(|c| {
            if c.is_zero() {
                return ZPoly::zero();
            }
            let k = c.scale().numer() * (&scalar_den / c.scale().denom());
            let cof = den.div_exact(c.denom_z()).expect("lcm is divisible");
            (c.numer_z() * &cof).scale(&k)
        })
        .collect();
    make_primitive(&mut ints);
    Some(ints)
}

/// Divides an integer-polynomial vector by the gcd of its entries and by its
/// integer content, fixing the sign so the first nonzero entry has a
/// positive leading coefficient. The zero vector is left unchanged.
pub fn make_primitive(v: &mut [ZPoly]) {
    if v.iter().all(ZPoly::is_zero) {
        return;
    }
    let mut g = ZPoly::zero();
    for p in v.iter() {
        if g.is_one() {
            break;
        }
        g = g.gcd(p);
    }
    if !g.is_one() {
        for p in v.iter_mut() {
            *p = p.div_exact(&g).expect("gcd divides");
        }
    }
    let content = v
        .iter()
        .fold(BigInt::zero(), |acc, p| acc.gcd(&p.content()));
    let lead = v.iter().find(|p| !p.is_zero()).expect("nonzero").lc();
    let k = if lead.is_negative() {
        -content
    } else {
        content
    };
    if !k.is_one() {
        for p in v.iter_mut() {
            *p = p.div_scalar_exact(&k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::U, c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(&up(n), &up(d)).unwrap()
    }

    #[test]
    fn simple_sums_collapse() {
        // 1/u + (u-1)/u = 1
        assert_eq!(
            &rf(&[1], &[0, 1]) + &rf(&[-1, 1], &[0, 1]),
            RatFunc::one(Var::U)
        );
    }

    #[test]
    fn powers_cancel() {
        let u6 = RatFunc::x(Var::U).pow(6).unwrap();
        assert!((&u6 * &u6.pow(-1).unwrap()).is_one());
    }

    #[test]
    fn canonical_view_has_monic_den() {
        let f = rf(&[2, 4], &[6, 3]);
        assert_eq!(f.den(), up(&[2, 1]));
        assert_eq!(f.num(), UniPoly::new(Var::U, vec![rat(2, 3), rat(4, 3)]));
        let g = rf(&[3], &[1, 2]);
        assert_eq!(g.den(), UniPoly::new(Var::U, vec![rat(1, 2), rat(1, 1)]));
        assert_eq!(g.num(), UniPoly::new(Var::U, vec![rat(3, 2)]));
        assert_eq!(RatFunc::new(&g.num(), &g.den()).unwrap(), g);
        // (2 + 4u) / (6 + 3u) equals (4u + 2) / (3u + 6) and reduces nowhere
        assert_eq!(f, rf(&[4, 8], &[12, 6]));
        // common factor cancels
        assert_eq!(rf(&[-1, 0, 1], &[1, 1]), rf(&[-1, 1], &[1]));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(RatFunc::zero(Var::U).inv(), Err(Error::DivisionByZero));
        assert!(RatFunc::new(&up(&[1]), &UniPoly::zero(Var::U)).is_err());
        assert_eq!(rf(&[1], &[-1, 1]).eval(&int(1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn negation_of_variable() {
        let u3 = RatFunc::x(Var::U).pow(3).unwrap();
        assert_eq!(u3.negate_var(), -&u3);
    }

    #[test]
    fn descend_and_inflate() {
        let f = RatFunc::from_poly(&up(&[0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 1]));
        let g = f.deflate(6, Var::S).unwrap();
        assert_eq!(
            g,
            RatFunc::from_poly(&UniPoly::from_ints(Var::S, &[0, 3, 1]))
        );
        assert_eq!(g.inflate(6, Var::U), f);
        let u4 = RatFunc::x(Var::U).pow(4).unwrap();
        assert!(matches!(
            u4.deflate(6, Var::S),
            Err(Error::NotInSubfield(_))
        ));
    }

    #[test]
    fn composition() {
        // (u^2 + 1) o (1/u) = (1 + u^2)/u^2
        let f = RatFunc::from_poly(&up(&[1, 0, 1]));
        let g = rf(&[1], &[0, 1]);
        assert_eq!(f.compose(&g).unwrap(), rf(&[1, 0, 1], &[0, 0, 1]));
        // denominator u - 1 composed with the constant 1 vanishes
        let h = rf(&[1], &[-1, 1]);
        assert!(h.compose(&RatFunc::one(Var::U)).is_err());
    }

    #[test]
    fn orders() {
        let f = rf(&[0, 0, 1, 1], &[0, 0, 0, 0, 1]);
        assert_eq!(f.ord_at_zero(), -2);
        assert_eq!(f.ord_at_infinity(), 1);
    }
}
