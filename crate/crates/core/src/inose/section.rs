use crate::algebra::{RatFunc, Rational, Var};
use crate::elliptic::ECPoint;
use crate::error::{Error, Result};

use super::data::{build_model, InoseData};

/// A section of `F^(1)` over `Q(s)` with its height data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionF1 {
    pub point: ECPoint,
    pub height: Rational,
    /// Intersection number with the zero section.
    pub intersection: u32,
    /// Degree of the isogeny the section came from, when known.
    pub degree: Option<u32>,
}

impl SectionF1 {
    pub fn x(&self) -> Option<&RatFunc> {
        self.point.x()
    }

    pub fn y(&self) -> Option<&RatFunc> {
        self.point.y()
    }
}

/// `P+ - P-` on `F^(6)`, pulled back to `F^(1)` through `s = u^6`.
pub fn assemble_section(
    p_plus: &ECPoint,
    p_minus: &ECPoint,
    data: &InoseData,
    degree: Option<u32>,
) -> Result<SectionF1> {
    let f6 = build_model(data, 6)?;
    let diff = f6.sub(p_plus, p_minus)?;
    let (x, y) = match &diff {
        ECPoint::Infinity => return Err(Error::ZeroSection),
        ECPoint::Affine { x, y } => (x, y),
    };
    let point = ECPoint::affine(x.deflate(6, Var::S)?, y.deflate(6, Var::S)?);
    let f1 = build_model(data, 1)?;
    if !f1.contains(&point) {
        return Err(Error::PointNotOnCurve);
    }
    let intersection = intersection_with_zero(&point)?;
    Ok(SectionF1 {
        point,
        height: height_from_intersection(intersection),
        intersection,
        degree,
    })
}

fn height_from_intersection(n: u32) -> Rational {
    Rational::from_integer((4 + 2 * n).into())
}

fn half_excess(order: usize, place: &str) -> Result<u32> {
    if order <= 2 {
        return Ok(0);
    }
    let excess = order - 2;
    if excess % 2 == 1 {
        return Err(Error::NonIntegralIntersection(format!(
            "pole of order {order} of X at {place}"
        )));
    }
    Ok((excess / 2) as u32)
}

/// `(P . O)` read off the poles of `X`: half the order of every pole at a
/// finite place other than `s = 0`, plus the excess over 2 (halved) at `s = 0`
/// and at `s = infinity`, where the model is minimalized by `X = ξ / s^2`
/// and `X = ξ s^2` respectively.
pub fn intersection_with_zero(p: &ECPoint) -> Result<u32> {
    let x = match p {
        ECPoint::Infinity => return Ok(0),
        ECPoint::Affine { x, .. } => x,
    };
    let den = x.denom_z();
    let e0 = den.valuation();
    let at_zero = half_excess(e0, "s = 0")?;
    let rest = den.shift_down(e0);
    let finite = match rest.sqrt() {
        Some(r) => r.deg() as u32,
        None => {
            return Err(Error::NonIntegralIntersection(
                "denominator of X is not a square away from s = 0".into(),
            ))
        }
    };
    let pole_inf = x.num_degree() as i64 - x.den_degree() as i64;
    let at_inf = half_excess(pole_inf.max(0) as usize, "s = infinity")?;
    Ok(at_zero + finite + at_inf)
}

/// `4 + 2 (P . O)`; zero for the zero section.
pub fn section_height(p: &ECPoint) -> Result<Rational> {
    if p.is_infinity() {
        return Ok(Rational::from_integer(0.into()));
    }
    Ok(height_from_intersection(intersection_with_zero(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, ZPoly};

    fn rf(num: &str, den: &str) -> RatFunc {
        RatFunc::new(
            &parse_poly(num, Var::S).unwrap(),
            &parse_poly(den, Var::S).unwrap(),
        )
        .unwrap()
    }

    fn pt(x: RatFunc) -> ECPoint {
        ECPoint::affine(x, RatFunc::zero(Var::S))
    }

    #[test]
    fn pole_bookkeeping() {
        // double pole at s = 0 and at s = -1: contributes 0 + 1
        assert_eq!(
            intersection_with_zero(&pt(rf("1", "s^2*(s+1)^2"))).unwrap(),
            1
        );
        // quadruple pole at s = 0: (4 - 2)/2
        assert_eq!(intersection_with_zero(&pt(rf("1", "s^4"))).unwrap(), 1);
        // X ~ s^6 at infinity: (6 - 2)/2
        assert_eq!(intersection_with_zero(&pt(rf("s^6+1", "1"))).unwrap(), 2);
        assert_eq!(
            section_height(&ECPoint::Infinity).unwrap(),
            Rational::from_integer(0.into())
        );
    }

    #[test]
    fn odd_poles_are_rejected() {
        for (n, d) in [("1", "s+1"), ("1", "s^5"), ("s^5", "1")] {
            assert!(matches!(
                intersection_with_zero(&pt(rf(n, d))),
                Err(Error::NonIntegralIntersection(_))
            ));
        }
    }

    #[test]
    fn descent_failure_is_reported() {
        // a point whose coordinates are not functions of u^6
        let u = RatFunc::x(Var::U);
        assert!(matches!(u.deflate(6, Var::S), Err(Error::NotInSubfield(_))));
        let u12 = RatFunc::from_zpolys(
            Var::U,
            Rational::from_integer(1.into()),
            ZPoly::monomial(1.into(), 12),
            ZPoly::one(),
        );
        assert!(u12.deflate(6, Var::S).is_ok());
    }
}
