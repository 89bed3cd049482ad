use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{RatFunc, Rational, RfPoly, Var};
use crate::error::{Error, Result};

use super::point::ProjPoint;

/// Exponent triple `(i, j, k)` of `x1^i x2^j z^k`.
pub type Exponent = [u32; 3];

/// Homogeneous polynomial in `(x1, x2, z)` with coefficients in `Q(inner)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriPoly {
    degree: u32,
    inner: Var,
    terms: BTreeMap<Exponent, RatFunc>,
}

/// Monomials of degree `l` in the fixed order used for coefficient vectors:
/// descending power of `x1`, then descending power of `x2`.
pub fn monomials(l: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    for i in (0..=l).rev() {
        for j in (0..=l - i).rev() {
            out.push([i, j, l - i - j]);
        }
    }
    out
}

impl TriPoly {
    pub fn zero(degree: u32, inner: Var) -> Self {
        TriPoly {
            degree,
            inner,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(
        degree: u32,
        inner: Var,
        terms: impl IntoIterator<Item = (Exponent, RatFunc)>,
    ) -> Self {
        let mut p = TriPoly::zero(degree, inner);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Coefficients listed in [`monomials`] order.
    pub fn from_coeff_vector(degree: u32, coeffs: &[RatFunc]) -> Self {
        let mons = monomials(degree);
        assert_eq!(mons.len(), coeffs.len(), "coefficient vector length");
        let inner = coeffs.first().map_or(Var::U, RatFunc::var);
        TriPoly::from_terms(degree, inner, mons.into_iter().zip(coeffs.iter().cloned()))
    }

    pub fn coeff_vector(&self) -> Vec<RatFunc> {
        monomials(self.degree)
            .iter()
            .map(|e| self.coeff(*e))
            .collect()
    }

    fn add_term(&mut self, e: Exponent, c: &RatFunc) {
        assert_eq!(e.iter().sum::<u32>(), self.degree, "inhomogeneous term");
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(e)
            .or_insert_with(|| RatFunc::zero(c.var()));
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn inner(&self) -> Var {
        self.inner
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, e: Exponent) -> RatFunc {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.inner))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TriPoly) -> TriPoly {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn scale(&self, k: &RatFunc) -> TriPoly {
        TriPoly::from_terms(
            self.degree,
            self.inner,
            self.terms.iter().map(|(e, c)| (*e, c * k)),
        )
    }

    pub fn mul(&self, other: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero(self.degree + other.degree, self.inner);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], &(ca * cb));
            }
        }
        out
    }

    /// Partial derivative with respect to coordinate `idx` (0 = x1, 1 = x2,
    /// 2 = z).
    pub fn partial(&self, idx: usize) -> TriPoly {
        let mut out = TriPoly::zero(self.degree.saturating_sub(1), self.inner);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut f = *e;
            f[idx] -= 1;
            out.add_term(f, &c.scale_by(&Rational::from_integer(e[idx].into())));
        }
        out
    }

    /// Value at a triple of rational functions.
    pub fn eval_rf(&self, p: &[RatFunc; 3]) -> Result<RatFunc> {
        let mut pows: [Vec<RatFunc>; 3] = Default::default();
        for (k, v) in p.iter().enumerate() {
            pows[k].push(RatFunc::one(v.var()));
            for _ in 0..self.degree {
                let next = pows[k].last().expect("nonempty").checked_mul(v)?;
                pows[k].push(next);
            }
        }
        let mut acc = RatFunc::zero(p[0].var());
        for (e, c) in &self.terms {
            let term = c
                .checked_mul(&pows[0][e[0] as usize])?
                .checked_mul(&pows[1][e[1] as usize])?
                .checked_mul(&pows[2][e[2] as usize])?;
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// `f(p)` on the canonical representative of `p`; zero iff `p` lies on
    /// `f = 0`.
    pub fn evaluate(&self, p: &ProjPoint) -> RatFunc {
        self.eval_rf(&p.to_ratfuncs())
            .expect("point and curve share the coefficient field")
    }

    /// Restriction to the parametrized line `p + t*v`, as a polynomial in `t`.
    pub fn restrict_to_line(&self, p: &[RatFunc; 3], v: &[RatFunc; 3]) -> Result<RfPoly> {
        let inner = self.inner;
        let lines: Vec<RfPoly> = (0..3)
            .map(|k| RfPoly::new(Var::T, inner, vec![p[k].clone(), v[k].clone()]))
            .collect();
        let mut pows: Vec<Vec<RfPoly>> = Vec::new();
        for line in &lines {
            let mut row = vec![RfPoly::one(Var::T, inner)];
            for _ in 0..self.degree {
                let next = row.last().expect("nonempty").checked_mul(line)?;
                row.push(next);
            }
            pows.push(row);
        }
        let mut acc = RfPoly::zero(Var::T, inner);
        for (e, c) in &self.terms {
            let term = pows[0][e[0] as usize]
                .checked_mul(&pows[1][e[1] as usize])?
                .checked_mul(&pows[2][e[2] as usize])?
                .scale(c);
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Affine chart `z = 1` viewed as a polynomial in `x2` whose coefficients
    /// lie in `Q(inner)[x1]`; entry `j` is the coefficient of `x2^j`.
    pub fn in_x2_over_x1(&self) -> Vec<RfPoly> {
        self.chart_coeffs(0, Var::X1)
    }

    /// Chart `x1 = 1`, coefficients of `x2^j` as polynomials in `z`.
    pub fn in_x2_over_z(&self) -> Vec<RfPoly> {
        self.chart_coeffs(2, Var::Z)
    }

    fn chart_coeffs(&self, kept: usize, outer: Var) -> Vec<RfPoly> {
        let top = self.terms.keys().map(|e| e[1]).max().unwrap_or(0) as usize;
        let mut coeffs: Vec<Vec<RatFunc>> = vec![Vec::new(); top + 1];
        for (e, c) in &self.terms {
            let row = &mut coeffs[e[1] as usize];
            let k = e[kept] as usize;
            if row.len() <= k {
                row.resize(k + 1, RatFunc::zero(self.inner));
            }
            row[k] = &row[k] + c;
        }
        coeffs
            .into_iter()
            .map(|c| RfPoly::new(outer, self.inner, c))
            .collect()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> TriPoly {
        let terms: Vec<(Exponent, RatFunc)> = self.terms.iter().map(|(e, c)| (*e, f(c))).collect();
        let inner = terms.first().map_or(self.inner, |(_, c)| c.var());
        TriPoly::from_terms(self.degree, inner, terms)
    }

    /// `u -> -u` on the coefficients.
    pub fn negate_var(&self) -> TriPoly {
        self.map_coeffs(RatFunc::negate_var)
    }

    /// Coefficients evaluated at `inner = value`.
    pub fn specialize(&self, value: &Rational) -> Result<TriPoly> {
        let inner = self.inner;
        let mut out = TriPoly::zero(self.degree, inner);
        for (e, c) in &self.terms {
            out.add_term(*e, &RatFunc::constant(inner, c.eval(value)?));
        }
        Ok(out)
    }

    /// `other = c * self` for some `c` in `Q(inner)`.
    pub fn is_multiple_of(&self, other: &TriPoly) -> bool {
        if self.degree != other.degree || self.is_zero() || other.is_zero() {
            return false;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (e0, c0) = self.terms.iter().next().expect("nonzero");
        let Some(d0) = other.terms.get(e0) else {
            return false;
        };
        self.terms.iter().all(|(e, c)| match other.terms.get(e) {
            Some(d) => c * d0 == d * c0,
            None => false,
        })
    }

    pub fn check_inner(&self, p: &ProjPoint) -> Result<()> {
        if p.var() != self.inner {
            return Err(Error::VarMismatch(self.inner, p.var()));
        }
        Ok(())
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = ["x1", "x2", "z"];
        let mut first = true;
        for e in monomials(self.degree) {
            let Some(c) = self.terms.get(&e) else {
                continue;
            };
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (k, name) in names.iter().enumerate() {
                match e[k] {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    n => write!(f, "*{name}^{n}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order_matches_convention() {
        let m = monomials(3);
        assert_eq!(m.len(), 10);
        assert_eq!(m[0], [3, 0, 0]);
        assert_eq!(m[1], [2, 1, 0]);
        assert_eq!(m[2], [2, 0, 1]);
        assert_eq!(m[9], [0, 0, 3]);
    }

    #[test]
    fn partials_and_products() {
        let one = RatFunc::one(Var::U);
        let x1 = TriPoly::from_terms(1, Var::U, [([1, 0, 0], one.clone())]);
        let z = TriPoly::from_terms(1, Var::U, [([0, 0, 1], one.clone())]);
        let f = x1.mul(&x1).mul(&z); // x1^2 z
        assert_eq!(
            f.partial(0),
            x1.mul(&z).scale(&RatFunc::from_int(Var::U, 2))
        );
        assert_eq!(f.partial(1), TriPoly::zero(2, Var::U));
    }

    #[test]
    fn multiple_detection() {
        let u = RatFunc::x(Var::U);
        let one = RatFunc::one(Var::U);
        let f = TriPoly::from_terms(
            1,
            Var::U,
            [([1, 0, 0], one.clone()), ([0, 1, 0], u.clone())],
        );
        assert!(f.is_multiple_of(&f.scale(&u)));
        let g = TriPoly::from_terms(1, Var::U, [([1, 0, 0], one.clone()), ([0, 1, 0], one)]);
        assert!(!f.is_multiple_of(&g));
    }
}
