//! Elliptic curves over `Q`, explicit isogenies, and short Weierstrass models
//! over a rational function field with their group law.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{RatFunc, Rational, UniPoly, Var};
use crate::error::{Error, Result};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `y^2 = x^3 + a2 x^2 + a4 x + a6` over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    pub a2: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

impl EllipticCurve {
    /// Fails with `SingularInput` when the cubic has a repeated root.
    pub fn new(a2: Rational, a4: Rational, a6: Rational) -> Result<Self> {
        let e = EllipticCurve { a2, a4, a6 };
        if e.discriminant().is_zero() {
            return Err(Error::SingularInput(format!(
                "y^2 = x^3 + ({})x^2 + ({})x + ({}) has zero discriminant",
                e.a2, e.a4, e.a6
            )));
        }
        Ok(e)
    }

    pub fn from_ints(a2: i64, a4: i64, a6: i64) -> Result<Self> {
        EllipticCurve::new(q(a2), q(a4), q(a6))
    }

    /// `16 (a2^2 a4^2 - 4 a4^3 - 4 a2^3 a6 + 18 a2 a4 a6 - 27 a6^2)`.
    pub fn discriminant(&self) -> Rational {
        let (a2, a4, a6) = (&self.a2, &self.a4, &self.a6);
        let a2sq = a2 * a2;
        let t = &a2sq * a4 * a4 - q(4) * a4 * a4 * a4 - q(4) * &a2sq * a2 * a6
            + q(18) * a2 * a4 * a6
            - q(27) * a6 * a6;
        q(16) * t
    }

    /// `c4 = 16 (a2^2 - 3 a4)`.
    pub fn c4(&self) -> Rational {
        q(16) * (&self.a2 * &self.a2 - q(3) * &self.a4)
    }

    pub fn j_invariant(&self) -> Rational {
        let c4 = self.c4();
        &c4 * &c4 * &c4 / self.discriminant()
    }

    /// The cubic `x^3 + a2 x^2 + a4 x + a6` in the given variable.
    pub fn cubic(&self, var: Var) -> UniPoly {
        UniPoly::new(
            var,
            vec![
                self.a6.clone(),
                self.a4.clone(),
                self.a2.clone(),
                Rational::one(),
            ],
        )
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = UniPoly::new(
            Var::X1,
            vec![
                self.a6.clone(),
                self.a4.clone(),
                self.a2.clone(),
                Rational::one(),
            ],
        );
        write!(f, "y^2 = {}", p.to_pretty().replace("x1", "x"))
    }
}

/// An isogeny `(x, y) -> (x_num/x_den (x), y * y_num/y_den (x))` with declared
/// degree. Construction only checks that the parts are polynomials in `x1`
/// with nonzero denominators; the isogeny shape and the curve identity are
/// checked by [`verify_isogeny`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    x_num: UniPoly,
    x_den: UniPoly,
    y_num: UniPoly,
    y_den: UniPoly,
    degree: u32,
}

fn reduce_pair(num: &UniPoly, den: &UniPoly) -> Result<(UniPoly, UniPoly)> {
    let g = num.gcd(den)?;
    let (n, _) = num.divrem(&g)?;
    let (d, _) = den.divrem(&g)?;
    let lc = d.lc();
    Ok((n.scale(&lc.recip()), d.monic()))
}

impl RationalMap {
    pub fn new(
        x_num: UniPoly,
        x_den: UniPoly,
        y_num: UniPoly,
        y_den: UniPoly,
        degree: u32,
    ) -> Result<Self> {
        for p in [&x_num, &x_den, &y_num, &y_den] {
            if p.var() != Var::X1 {
                return Err(Error::VarMismatch(Var::X1, p.var()));
            }
        }
        if x_den.is_zero() || y_den.is_zero() {
            return Err(Error::IsogenyInvalid("zero denominator".into()));
        }
        if x_num.is_zero() || y_num.is_zero() {
            return Err(Error::IsogenyInvalid("constant map".into()));
        }
        let (x_num, x_den) = reduce_pair(&x_num, &x_den)?;
        let (y_num, y_den) = reduce_pair(&y_num, &y_den)?;
        Ok(RationalMap {
            x_num,
            x_den,
            y_num,
            y_den,
            degree,
        })
    }

    pub fn x_num(&self) -> &UniPoly {
        &self.x_num
    }

    pub fn x_den(&self) -> &UniPoly {
        &self.x_den
    }

    pub fn y_num(&self) -> &UniPoly {
        &self.y_num
    }

    pub fn y_den(&self) -> &UniPoly {
        &self.y_den
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn phi_x(&self) -> RatFunc {
        RatFunc::new(&self.x_num, &self.x_den).expect("nonzero denominator")
    }

    pub fn phi_y(&self) -> RatFunc {
        RatFunc::new(&self.y_num, &self.y_den).expect("nonzero denominator")
    }
}

/// Outcome of [`verify_isogeny`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsogenyReport {
    /// The two curve equations agree under the map.
    pub identity_holds: bool,
    /// `deg x_num = d`, `deg x_den = d - 1` and `d >= 2`.
    pub degree_ok: bool,
    pub declared_degree: u32,
    pub x_num_degree: usize,
    pub x_den_degree: usize,
}

impl IsogenyReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.degree_ok
    }
}

/// Checks `phi` maps `e1` into `e2`:
/// `(N^3 + a2' N^2 D + a4' N D^2 + a6' D^3) * y_den^2 = y_num^2 * f1(x) * D^3`
/// with `phi_x = N / D`, plus the degree shape.
pub fn verify_isogeny(e1: &EllipticCurve, e2: &EllipticCurve, phi: &RationalMap) -> IsogenyReport {
    let n = &phi.x_num;
    let d = &phi.x_den;
    let c = |r: &Rational| UniPoly::constant(Var::X1, r.clone());
    let d2 = d * d;
    let d3 = &d2 * d;
    let lhs_cubic = &(&(&(n * n) * n) + &(&(&c(&e2.a2) * &(n * n)) * d))
        + &(&(&(&c(&e2.a4) * n) * &d2) + &(&c(&e2.a6) * &d3));
    let lhs = &lhs_cubic * &(&phi.y_den * &phi.y_den);
    let rhs = &(&(&phi.y_num * &phi.y_num) * &e1.cubic(Var::X1)) * &d3;
    let xn = n.degree().unwrap_or(0);
    let xd = d.degree().unwrap_or(0);
    let dd = phi.degree as usize;
    IsogenyReport {
        identity_holds: lhs == rhs,
        degree_ok: dd >= 2 && xn == dd && xd + 1 == dd,
        declared_degree: phi.degree,
        x_num_degree: xn,
        x_den_degree: xd,
    }
}

/// `Y^2 = X^3 + alpha X + beta` over `Q(var)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    alpha: RatFunc,
    beta: RatFunc,
}

/// A point of a [`WeierstrassModel`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ECPoint {
    Infinity,
    Affine { x: RatFunc, y: RatFunc },
}

impl ECPoint {
    pub fn affine(x: RatFunc, y: RatFunc) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn x(&self) -> Option<&RatFunc> {
        match self {
            ECPoint::Affine { x, .. } => Some(x),
            ECPoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&RatFunc> {
        match self {
            ECPoint::Affine { y, .. } => Some(y),
            ECPoint::Infinity => None,
        }
    }

    /// Coordinatewise `u -> -u`.
    pub fn negate_var(&self) -> ECPoint {
        match self {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => ECPoint::affine(x.negate_var(), y.negate_var()),
        }
    }

    /// Evaluates the coordinates at `var = value`; `None` at a pole.
    pub fn specialize(&self, value: &Rational) -> Option<ECPoint> {
        match self {
            ECPoint::Infinity => Some(ECPoint::Infinity),
            ECPoint::Affine { x, y } => {
                let var = x.var();
                Some(ECPoint::affine(
                    RatFunc::constant(var, x.eval(value).ok()?),
                    RatFunc::constant(var, y.eval(value).ok()?),
                ))
            }
        }
    }
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => f.write_str("O"),
            ECPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl WeierstrassModel {
    /// Fails with `SingularInput` when `4 alpha^3 + 27 beta^2 = 0`.
    pub fn new(alpha: RatFunc, beta: RatFunc) -> Result<Self> {
        let m = WeierstrassModel { alpha, beta };
        if m.discriminant().is_zero() {
            return Err(Error::SingularInput(
                "Weierstrass model has zero discriminant".into(),
            ));
        }
        Ok(m)
    }

    pub fn alpha(&self) -> &RatFunc {
        &self.alpha
    }

    pub fn beta(&self) -> &RatFunc {
        &self.beta
    }

    pub fn var(&self) -> Var {
        self.alpha.var()
    }

    /// `-16 (4 alpha^3 + 27 beta^2)`.
    pub fn discriminant(&self) -> RatFunc {
        let a3 = &(&self.alpha * &self.alpha) * &self.alpha;
        let b2 = &self.beta * &self.beta;
        (&a3.scale_by(&q(4)) + &b2.scale_by(&q(27))).scale_by(&q(-16))
    }

    /// `X^3 + alpha X + beta`.
    pub fn rhs(&self, x: &RatFunc) -> RatFunc {
        &(&(&(x * x) * x) + &(&self.alpha * x)) + &self.beta
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => {
                x.var() == self.var() && y.var() == self.var() && (y * y) == self.rhs(x)
            }
        }
    }

    fn check(&self, p: &ECPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    pub fn neg(&self, p: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        Ok(neg_unchecked(p))
    }

    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn sub(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, &neg_unchecked(q)))
    }

    pub fn double(&self, p: &ECPoint) -> Result<ECPoint> {
        self.add(p, p)
    }

    /// `n * p` by double-and-add; negative `n` uses `-p`.
    pub fn mul(&self, n: i64, p: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        let mut base = if n < 0 { neg_unchecked(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    fn add_unchecked(&self, p: &ECPoint, r: &ECPoint) -> ECPoint {
        let (x1, y1, x2, y2) = match (p, r) {
            (ECPoint::Infinity, _) => return r.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let lambda = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                return ECPoint::Infinity;
            }
            // tangent slope (3 x^2 + alpha) / (2 y)
            let num = &(x1 * x1).scale_by(&q(3)) + &self.alpha;
            num.checked_div(&y1.scale_by(&q(2))).expect("y is nonzero")
        } else {
            (y2 - y1).checked_div(&(x2 - x1)).expect("x1 != x2")
        };
        let x3 = &(&(&lambda * &lambda) - x1) - x2;
        let y3 = &(&lambda * &(x1 - &x3)) - y1;
        ECPoint::affine(x3, y3)
    }

    /// Coefficients evaluated at `var = value`.
    pub fn specialize(&self, value: &Rational) -> Result<WeierstrassModel> {
        let var = self.var();
        WeierstrassModel::new(
            RatFunc::constant(var, self.alpha.eval(value)?),
            RatFunc::constant(var, self.beta.eval(value)?),
        )
    }
}

fn neg_unchecked(p: &ECPoint) -> ECPoint {
    match p {
        ECPoint::Infinity => ECPoint::Infinity,
        ECPoint::Affine { x, y } => ECPoint::affine(x.clone(), -y),
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 = X^3 + ({})*X + ({})", self.alpha, self.beta)
    }
}
