use serde::Serialize;

use crate::algebra::rational::format_rational;
use crate::algebra::{RatFunc, Rational, Var, ZPoly};
use crate::curves::{tangent_third_point, ProjPoint, TriPoly};
use crate::elliptic::{EllipticCurve, WeierstrassModel};
use crate::error::{Error, Result};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The constants of the Weierstrass model attached to a pair of curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InoseData {
    pub a: Rational,
    pub b: Rational,
    pub delta1: Rational,
    pub delta2: Rational,
}

#[derive(Serialize)]
struct InoseDataDoc {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    delta1: String,
    delta2: String,
}

impl Serialize for InoseData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InoseDataDoc {
            a: format_rational(&self.a),
            b: format_rational(&self.b),
            delta1: format_rational(&self.delta1),
            delta2: format_rational(&self.delta2),
        }
        .serialize(s)
    }
}

/// `2 a2^3 - 9 a2 a4 + 27 a6`.
fn cubic_invariant(e: &EllipticCurve) -> Rational {
    q(2) * &e.a2 * &e.a2 * &e.a2 - q(9) * &e.a2 * &e.a4 + q(27) * &e.a6
}

/// `a2^2 - 3 a4`.
fn quadratic_invariant(e: &EllipticCurve) -> Rational {
    &e.a2 * &e.a2 - q(3) * &e.a4
}

pub fn inose_coefficients(e1: &EllipticCurve, e2: &EllipticCurve) -> Result<InoseData> {
    let delta1 = e1.discriminant();
    let delta2 = e2.discriminant();
    for (name, d) in [("E1", &delta1), ("E2", &delta2)] {
        if num_traits::Zero::is_zero(d) {
            return Err(Error::SingularInput(format!(
                "{name} has zero discriminant"
            )));
        }
    }
    Ok(InoseData {
        a: quadratic_invariant(e1) * quadratic_invariant(e2),
        b: Rational::new(32.into(), 27.into()) * cubic_invariant(e1) * cubic_invariant(e2),
        delta1,
        delta2,
    })
}

impl InoseData {
    /// `Y^2 = X^3 - (A/3) X + (delta1 v^n + B + delta2 / v^n) / 64` over `Q(v)`.
    pub fn model_in(&self, n: u32, var: Var) -> Result<WeierstrassModel> {
        let n = n as usize;
        let alpha = RatFunc::constant(var, -&self.a / q(3));
        // (delta1 v^{2n} + B v^n + delta2) / (64 v^n)
        let num = ZPoly::monomial(1.into(), 2 * n);
        let mid = ZPoly::monomial(1.into(), n);
        let one = ZPoly::one();
        let term =
            |c: &Rational, p: &ZPoly| RatFunc::from_zpolys(var, c.clone(), p.clone(), one.clone());
        let top = &(&term(&self.delta1, &num) + &term(&self.b, &mid)) + &term(&self.delta2, &one);
        let beta = top
            .checked_div(&RatFunc::from_zpolys(var, q(64), mid, one.clone()))
            .expect("nonzero");
        WeierstrassModel::new(alpha, beta)
    }
}

/// `F^(n)`: over `Q(s)` for `n = 1` and over `Q(u)` otherwise.
pub fn build_model(data: &InoseData, n: u32) -> Result<WeierstrassModel> {
    let var = if n == 1 { Var::S } else { Var::U };
    data.model_in(n, var)
}

/// `C_u : x2^3 + a2' x2^2 z + a4' x2 z^2 + a6' z^3 - u^6 (x1^3 + a2 x1^2 z + a4 x1 z^2 + a6 z^3)`.
pub fn build_cubic(e1: &EllipticCurve, e2: &EllipticCurve) -> TriPoly {
    build_cubic_at(e1, e2, &RatFunc::x(Var::U))
}

/// [`build_cubic`] with `u` replaced by the given element of `Q(u)`
/// (typically a constant, to specialize).
pub fn build_cubic_at(e1: &EllipticCurve, e2: &EllipticCurve, u: &RatFunc) -> TriPoly {
    let var = u.var();
    let c = |r: &Rational| RatFunc::constant(var, r.clone());
    let u6 = u.pow(6).expect("nonnegative power");
    let neg_u6 = -&u6;
    TriPoly::from_terms(
        3,
        var,
        [
            ([0, 3, 0], RatFunc::one(var)),
            ([0, 2, 1], c(&e2.a2)),
            ([0, 1, 2], c(&e2.a4)),
            ([0, 0, 3], c(&e2.a6)),
            ([3, 0, 0], neg_u6.clone()),
            ([2, 0, 1], &neg_u6 * &c(&e1.a2)),
            ([1, 0, 2], &neg_u6 * &c(&e1.a4)),
            ([0, 0, 3], &neg_u6 * &c(&e1.a6)),
        ],
    )
}

/// The chosen origin `O = (1 : u^2 : 0)`.
pub fn origin() -> ProjPoint {
    origin_at(&RatFunc::x(Var::U))
}

pub fn origin_at(u: &RatFunc) -> ProjPoint {
    let var = u.var();
    ProjPoint::from_ratfuncs([RatFunc::one(var), u * u, RatFunc::zero(var)]).expect("nonzero")
}

/// Third intersection of `C_u` with its tangent at `O`.
pub fn origin_bar(cu: &TriPoly) -> Result<ProjPoint> {
    let o = origin_at(&RatFunc::x(cu.inner()));
    tangent_third_point(cu, &o)
}

/// The polynomial tables of the coordinate change from `C_u` to `F^(6)`.
#[derive(Clone, Debug)]
pub struct TransformTables {
    pub c6: TriPoly,
    pub c4: TriPoly,
    pub c2: TriPoly,
    pub c0: TriPoly,
    pub d10: TriPoly,
    pub d6: TriPoly,
    pub d4: TriPoly,
    pub d0: TriPoly,
    e1: EllipticCurve,
    e2: EllipticCurve,
}

fn tri(degree: u32, terms: Vec<([u32; 3], Rational)>) -> TriPoly {
    TriPoly::from_terms(
        degree,
        Var::U,
        terms
            .into_iter()
            .map(|(e, c)| (e, RatFunc::constant(Var::U, c))),
    )
}

impl TransformTables {
    pub fn new(e1: &EllipticCurve, e2: &EllipticCurve) -> Self {
        let (a2, a4, a6) = (&e1.a2, &e1.a4, &e1.a6);
        let (b2, b4, b6) = (&e2.a2, &e2.a4, &e2.a6);
        let qa = quadratic_invariant(e1);
        let qb = quadratic_invariant(e2);
        let ca = cubic_invariant(e1);
        let cb = cubic_invariant(e2);
        const X1: [u32; 3] = [1, 0, 0];
        const X2: [u32; 3] = [0, 1, 0];
        const Z: [u32; 3] = [0, 0, 1];
        const X1X1: [u32; 3] = [2, 0, 0];
        const X1Z: [u32; 3] = [1, 0, 1];
        const X2X2: [u32; 3] = [0, 2, 0];
        const X2Z: [u32; 3] = [0, 1, 1];
        const ZZ: [u32; 3] = [0, 0, 2];
        let a2sq = a2 * a2;
        let b2sq = b2 * b2;
        let c6 = tri(1, vec![(X1, q(6) * &qa), (Z, q(3) * (a2 * a4 - q(9) * a6))]);
        let c4 = tri(1, vec![(X2, q(3) * &qa), (Z, &qa * b2)]);
        let c2 = tri(1, vec![(X1, q(-3) * &qb), (Z, -(&qb * a2))]);
        let c0 = tri(
            1,
            vec![(X2, q(-6) * &qb), (Z, q(-3) * (b2 * b4 - q(9) * b6))],
        );
        let d10 = tri(
            2,
            vec![
                (X1X1, q(-3) * &ca),
                (
                    X1Z,
                    q(2) * (&a2sq * &a2sq - q(9) * &a2sq * a4 - q(27) * a2 * a6 + q(27) * a4 * a4),
                ),
                (ZZ, &a2sq * a2 * a4 - q(27) * &a2sq * a6 + q(54) * a4 * a6),
            ],
        );
        let d6 = tri(
            2,
            vec![
                (X1Z, q(-6) * &qa * &qb),
                (X2X2, q(3) * &ca),
                (X2Z, q(2) * b2 * &ca),
                (
                    ZZ,
                    q(2) * &a2sq * a2 * b4 - q(3) * a2 * a4 * &b2sq + q(27) * a6 * &b2sq
                        - q(54) * a6 * b4,
                ),
            ],
        );
        let d4 = tri(
            2,
            vec![
                (X1X1, q(3) * &cb),
                (X1Z, q(2) * a2 * &cb),
                (X2Z, q(-6) * &qa * &qb),
                (
                    ZZ,
                    -(q(3) * &a2sq * b2 * b4 - q(2) * a4 * &b2sq * b2 - q(27) * &a2sq * b6
                        + q(54) * a4 * b6),
                ),
            ],
        );
        let d0 = tri(
            2,
            vec![
                (X2X2, q(-3) * &cb),
                (
                    X2Z,
                    q(2) * (&b2sq * &b2sq - q(9) * &b2sq * b4 - q(27) * b2 * b6 + q(27) * b4 * b4),
                ),
                (ZZ, &b2sq * b2 * b4 - q(27) * &b2sq * b6 + q(54) * b4 * b6),
            ],
        );
        TransformTables {
            c6,
            c4,
            c2,
            c0,
            d10,
            d6,
            d4,
            d0,
            e1: e1.clone(),
            e2: e2.clone(),
        }
    }

    pub fn curves(&self) -> (&EllipticCurve, &EllipticCurve) {
        (&self.e1, &self.e2)
    }

    /// `c6 u^6 + c4 u^4 + c2 u^2 + c0` as a linear form over `Q(u)`.
    pub fn x_numerator(&self, u: &RatFunc) -> TriPoly {
        combine(
            &[(&self.c6, 6), (&self.c4, 4), (&self.c2, 2), (&self.c0, 0)],
            u,
        )
    }

    /// `d10 u^10 + d6 u^6 + d4 u^4 + d0` as a quadratic form over `Q(u)`.
    pub fn y_numerator(&self, u: &RatFunc) -> TriPoly {
        combine(
            &[(&self.d10, 10), (&self.d6, 6), (&self.d4, 4), (&self.d0, 0)],
            u,
        )
    }

    /// The linear form `(3 x1 + a2 z) u^2 - (3 x2 + a2' z)`, which is the
    /// tangent line of `C_u` at `O`.
    pub fn denominator_line(&self, u: &RatFunc) -> TriPoly {
        let var = u.var();
        let c = |r: Rational| RatFunc::constant(var, r);
        let u2 = u * u;
        TriPoly::from_terms(
            1,
            var,
            [
                ([1, 0, 0], u2.scale_by(&q(3))),
                ([0, 1, 0], c(q(-3))),
                (
                    [0, 0, 1],
                    &(&u2 * &c(self.e1.a2.clone())) - &c(self.e2.a2.clone()),
                ),
            ],
        )
    }
}

fn combine(parts: &[(&TriPoly, i32)], u: &RatFunc) -> TriPoly {
    let var = u.var();
    let mut acc = TriPoly::zero(parts[0].0.degree(), var);
    for (t, k) in parts {
        let t = t.map_coeffs(|c| c.with_var(var));
        acc = acc.add(&t.scale(&u.pow(*k).expect("nonnegative power")));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair5() -> (EllipticCurve, EllipticCurve) {
        (
            EllipticCurve::from_ints(-4, 0, 16).unwrap(),
            EllipticCurve::from_ints(-4, -160, -1264).unwrap(),
        )
    }

    #[test]
    fn coefficient_block_degree_five() {
        let (e1, e2) = pair5();
        let d = inose_coefficients(&e1, &e2).unwrap();
        assert_eq!(d.a, q(7936));
        assert_eq!(&d.b / q(64), Rational::new((-6082432).into(), 27.into()));
        assert_eq!(d.delta1, q(-45056));
        assert_eq!(&d.delta2 / q(64), q(-10307264));
    }

    #[test]
    fn coefficient_block_equal_curves() {
        let e = EllipticCurve::from_ints(0, 0, 1).unwrap();
        let d = inose_coefficients(&e, &e).unwrap();
        assert_eq!(d.a, q(0));
        assert_eq!(d.b, q(864));
        assert_eq!(d.delta1, q(-432));
        assert_eq!(d.delta2, q(-432));
    }

    #[test]
    fn origin_on_cubic() {
        let (e1, e2) = pair5();
        let cu = build_cubic(&e1, &e2);
        assert!(cu.evaluate(&origin()).is_zero());
    }

    #[test]
    fn models_in_u_and_s() {
        let (e1, e2) = pair5();
        let d = inose_coefficients(&e1, &e2).unwrap();
        let f6 = build_model(&d, 6).unwrap();
        assert_eq!(f6.var(), Var::U);
        assert_eq!(
            f6.alpha().as_constant(),
            Some(Rational::new((-7936).into(), 3.into()))
        );
        let f1 = build_model(&d, 1).unwrap();
        assert_eq!(f1.var(), Var::S);
        assert_eq!(f1.beta().inflate(6, Var::U), f6.beta().clone());
    }
}
