use std::fmt;

use num_traits::One;

use crate::algebra::ratfunc::primitive_vector;
use crate::algebra::{RatFunc, Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// Point of `P^2` over `Q(u)` with polynomial coordinates `(x1 : x2 : z)`.
///
/// Always stored in canonical form: integer coefficients, the triple has no
/// common polynomial factor and no common integer content, and the first
/// nonzero coordinate has a positive leading coefficient. Two points are
/// projectively equal iff their canonical forms are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [UniPoly; 3],
}

impl ProjPoint {
    pub fn new(coords: [UniPoly; 3]) -> Result<Self> {
        let var = coords[0].var();
        let rf = coords
            .iter()
            .map(|c| {
                if c.var() != var {
                    return Err(Error::VarMismatch(var, c.var()));
                }
                Ok(RatFunc::from_poly(c))
            })
            .collect::<Result<Vec<_>>>()?;
        ProjPoint::from_ratfuncs([rf[0].clone(), rf[1].clone(), rf[2].clone()])
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_ints(var: Var, x1: &[i64], x2: &[i64], z: &[i64]) -> Self {
        ProjPoint::new([
            UniPoly::from_ints(var, x1),
            UniPoly::from_ints(var, x2),
            UniPoly::from_ints(var, z),
        ])
        .expect("nonzero point")
    }

    /// Clears denominators and normalizes. Fails on `(0 : 0 : 0)`.
    pub fn from_ratfuncs(coords: [RatFunc; 3]) -> Result<Self> {
        let var = coords[0].var();
        if coords.iter().all(RatFunc::is_zero) {
            return Err(Error::DivisionByZero);
        }
        let ints = primitive_vector(&coords).expect("nonzero point");
        let coords = [0, 1, 2].map(|i| UniPoly::from_zpoly(var, &Rational::one(), &ints[i]));
        Ok(ProjPoint { coords })
    }

    pub fn coords(&self) -> &[UniPoly; 3] {
        &self.coords
    }

    pub fn var(&self) -> Var {
        self.coords[0].var()
    }

    pub fn x1(&self) -> &UniPoly {
        &self.coords[0]
    }

    pub fn x2(&self) -> &UniPoly {
        &self.coords[1]
    }

    pub fn z(&self) -> &UniPoly {
        &self.coords[2]
    }

    pub fn to_ratfuncs(&self) -> [RatFunc; 3] {
        [0, 1, 2].map(|i| RatFunc::from_poly(&self.coords[i]))
    }

    /// All 2x2 cross-products vanish.
    pub fn proj_eq(&self, other: &ProjPoint) -> bool {
        let a = &self.coords;
        let b = &other.coords;
        (0..3).all(|i| {
            let j = (i + 1) % 3;
            (&a[i] * &b[j]) == (&a[j] * &b[i])
        })
    }

    /// `u -> -u` applied to every coordinate.
    pub fn negate_var(&self) -> ProjPoint {
        ProjPoint::new(self.coords.clone().map(|c| c.negate_var())).expect("nonzero point")
    }

    /// Coordinates evaluated at `u = value`; `None` if they all vanish there.
    pub fn specialize(&self, value: &Rational) -> Option<ProjPoint> {
        let var = self.var();
        let vals = self
            .coords
            .clone()
            .map(|c| RatFunc::constant(var, c.eval(value)));
        ProjPoint::from_ratfuncs(vals).ok()
    }

    /// Lies on the line `z = 0`.
    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_scaling_and_common_factors() {
        // (2u : 2u^3 : 0) ~ (1 : u^2 : 0)
        let p = ProjPoint::from_ints(Var::U, &[0, 2], &[0, 0, 0, 2], &[]);
        assert_eq!(p, ProjPoint::from_ints(Var::U, &[1], &[0, 0, 1], &[]));
        let q = ProjPoint::from_ints(Var::U, &[-3], &[0, 0, -3], &[]);
        assert_eq!(p, q);
        assert!(p.proj_eq(&q));
    }

    #[test]
    fn clears_denominators() {
        let u = RatFunc::x(Var::U);
        let half = RatFunc::constant(Var::U, Rational::new(1.into(), 2.into()));
        let inv_u = u.inv().unwrap();
        let p = ProjPoint::from_ratfuncs([half, inv_u, RatFunc::one(Var::U)]).unwrap();
        assert_eq!(p, ProjPoint::from_ints(Var::U, &[0, 1], &[2], &[0, 2]));
    }

    #[test]
    fn canonical_is_idempotent() {
        let p = ProjPoint::from_ints(Var::U, &[4, 0, 6], &[-2, 2], &[0, 8]);
        let again = ProjPoint::new(p.coords().clone()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn rejects_zero_triple() {
        assert!(ProjPoint::new([
            UniPoly::zero(Var::U),
            UniPoly::zero(Var::U),
            UniPoly::zero(Var::U)
        ])
        .is_err());
    }
}
