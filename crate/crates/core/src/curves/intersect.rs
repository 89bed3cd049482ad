use crate::algebra::{RatFunc, RfPoly, Var};
use crate::error::{Error, Result};

use super::point::ProjPoint;
use super::tripoly::TriPoly;

fn cross(a: &[RatFunc; 3], b: &[RatFunc; 3]) -> [RatFunc; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn combine(a: &RatFunc, p: &[RatFunc; 3], b: &RatFunc, v: &[RatFunc; 3]) -> [RatFunc; 3] {
    [0, 1, 2].map(|i| &(a * &p[i]) + &(b * &v[i]))
}

/// Residual intersection of the tangent line to the cubic `c` at `p`.
///
/// The tangent meets `c` at `p` with multiplicity at least two; the third
/// intersection point is returned, which is `p` itself at a flex.
pub fn tangent_third_point(c: &TriPoly, p: &ProjPoint) -> Result<ProjPoint> {
    assert_eq!(c.degree(), 3, "tangent_third_point expects a cubic");
    c.check_inner(p)?;
    let pr = p.to_ratfuncs();
    if !c.eval_rf(&pr)?.is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    let grad = [0, 1, 2].map(|i| c.partial(i).eval_rf(&pr));
    let grad = [grad[0].clone()?, grad[1].clone()?, grad[2].clone()?];
    if grad.iter().all(RatFunc::is_zero) {
        return Err(Error::SingularPoint);
    }
    // Second point on the tangent line: its intersection with the coordinate
    // line x_i = 0 for a coordinate where p does not vanish (the chart x_i = 1).
    let i = (0..3).find(|&i| !pr[i].is_zero()).expect("nonzero point");
    let mut e = [0, 1, 2].map(|_| RatFunc::zero(c.inner()));
    e[i] = RatFunc::one(c.inner());
    let v = cross(&grad, &e);
    let g = c.restrict_to_line(&pr, &v)?;
    // g(t) = a t^2 + b t^3 since p is a double root
    debug_assert!(g.coeff(0).is_zero() && g.coeff(1).is_zero());
    let a = g.coeff(2);
    let b = g.coeff(3);
    if a.is_zero() {
        return Ok(p.clone());
    }
    ProjPoint::from_ratfuncs(combine(&b, &pr, &(-&a), &v))
}

/// Third intersection of the cubic `c` with the line through two distinct
/// points `p`, `q` of `c` (the tangent residual when they coincide).
pub fn chord_third_point(c: &TriPoly, p: &ProjPoint, q: &ProjPoint) -> Result<ProjPoint> {
    assert_eq!(c.degree(), 3, "chord_third_point expects a cubic");
    if p.proj_eq(q) {
        return tangent_third_point(c, p);
    }
    let pr = p.to_ratfuncs();
    let qr = q.to_ratfuncs();
    if !c.eval_rf(&pr)?.is_zero() || !c.eval_rf(&qr)?.is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    // c(p + t q) = a t + b t^2; the residual parameter is t = -a/b
    let g = c.restrict_to_line(&pr, &qr)?;
    let a = g.coeff(1);
    let b = g.coeff(2);
    ProjPoint::from_ratfuncs(combine(&b, &pr, &(-&a), &qr))
}

/// Which affine chart to dehomogenize in before eliminating `x2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    /// `z = 1`; the resultant is a polynomial in `x1`.
    Z,
    /// `x1 = 1`; the resultant is a polynomial in `z`.
    X1,
}

/// Resultant with respect to `x2`, together with the degree deficiency
/// `deg f * deg g - deg res` counting intersections off the chart.
#[derive(Clone, Debug)]
pub struct Resultant {
    pub poly: RfPoly,
    pub deficiency: usize,
}

/// `Res_{x2}(f(x1, x2, 1), g(x1, x2, 1))` via the Sylvester matrix.
pub fn resultant_x2(f: &TriPoly, g: &TriPoly) -> Result<Resultant> {
    resultant_x2_in_chart(f, g, Chart::Z)
}

pub fn resultant_x2_in_chart(f: &TriPoly, g: &TriPoly, chart: Chart) -> Result<Resultant> {
    let (fc, gc) = match chart {
        Chart::Z => (f.in_x2_over_x1(), g.in_x2_over_x1()),
        Chart::X1 => (f.in_x2_over_z(), g.in_x2_over_z()),
    };
    let outer = match chart {
        Chart::Z => Var::X1,
        Chart::X1 => Var::Z,
    };
    let inner = f.inner();
    let fc = trim_top(fc);
    let gc = trim_top(gc);
    if fc.is_empty() || gc.is_empty() {
        return Err(Error::CommonComponent);
    }
    let poly = sylvester_resultant(&fc, &gc, outer, inner)?;
    if poly.is_zero() {
        return Err(Error::CommonComponent);
    }
    let expected = (f.degree() * g.degree()) as usize;
    let deficiency = expected.saturating_sub(poly.degree().unwrap_or(0));
    Ok(Resultant { poly, deficiency })
}

fn trim_top(mut c: Vec<RfPoly>) -> Vec<RfPoly> {
    while c.last().is_some_and(RfPoly::is_zero) {
        c.pop();
    }
    c
}

/// Determinant of the Sylvester matrix of two polynomials given by their
/// coefficient lists (ascending in the eliminated variable).
pub fn sylvester_resultant(f: &[RfPoly], g: &[RfPoly], outer: Var, inner: Var) -> Result<RfPoly> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let zero = RfPoly::zero(outer, inner);
    if size == 0 {
        return Ok(RfPoly::one(outer, inner));
    }
    let mut rows: Vec<Vec<RfPoly>> = Vec::with_capacity(size);
    // descending coefficient order, shifted per row
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    bareiss_determinant(rows, outer, inner)
}

/// Fraction-free determinant over `Q(inner)[outer]`; every division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<RfPoly>>, outer: Var, inner: Var) -> Result<RfPoly> {
    let n = m.len();
    let mut negate = false;
    let mut prev = RfPoly::one(outer, inner);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(RfPoly::zero(outer, inner));
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][k] = RfPoly::zero(outer, inner);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn rf(c: i64) -> RatFunc {
        RatFunc::from_int(Var::U, c)
    }

    #[test]
    fn flex_is_fixed() {
        // y^2 z = x^3 + x z^2 in (x1, x2, z) = (x, y, z)
        let c = TriPoly::from_terms(
            3,
            Var::U,
            [([0, 2, 1], rf(1)), ([3, 0, 0], rf(-1)), ([1, 0, 2], rf(-1))],
        );
        let p = ProjPoint::from_ints(Var::U, &[], &[1], &[]);
        assert_eq!(tangent_third_point(&c, &p).unwrap(), p);
    }

    #[test]
    fn singular_point_is_rejected() {
        // nodal cubic y^2 z = x^3 + x^2 z at (0 : 0 : 1)
        let c = TriPoly::from_terms(
            3,
            Var::U,
            [([0, 2, 1], rf(1)), ([3, 0, 0], rf(-1)), ([2, 0, 1], rf(-1))],
        );
        let p = ProjPoint::from_ints(Var::U, &[], &[], &[1]);
        assert_eq!(tangent_third_point(&c, &p), Err(Error::SingularPoint));
    }

    #[test]
    fn two_lines_meet_once() {
        // x2 - x1 and x2 - 2 x1 meet at x1 = 0
        let f = TriPoly::from_terms(1, Var::U, [([0, 1, 0], rf(1)), ([1, 0, 0], rf(-1))]);
        let g = TriPoly::from_terms(1, Var::U, [([0, 1, 0], rf(1)), ([1, 0, 0], rf(-2))]);
        let r = resultant_x2(&f, &g).unwrap();
        assert_eq!(r.poly.degree(), Some(1));
        assert_eq!(r.deficiency, 0);
        assert!(r.poly.coeff(0).is_zero());
        // a shifted second line moves the root to x1 = 1
        let h = TriPoly::from_terms(
            1,
            Var::U,
            [([0, 1, 0], rf(1)), ([1, 0, 0], rf(-2)), ([0, 0, 1], rf(1))],
        );
        let r = resultant_x2(&f, &h).unwrap();
        let root = -&(&r.poly.coeff(0) * &r.poly.coeff(1).inv().unwrap());
        assert_eq!(root.as_constant(), Some(Rational::from_integer(1.into())));
    }

    #[test]
    fn identical_curves_share_a_component() {
        let f = TriPoly::from_terms(1, Var::U, [([0, 1, 0], rf(1)), ([1, 0, 0], rf(-1))]);
        assert_eq!(resultant_x2(&f, &f).unwrap_err(), Error::CommonComponent);
    }

    #[test]
    fn chord_on_rational_cubic() {
        // y^2 z = x^3 - x z^2 + z^3 contains (0:1:1), (1:1:1); the chord y = 1
        // meets the cubic again at x^3 - x = 0 -> x = -1
        let c = TriPoly::from_terms(
            3,
            Var::U,
            [
                ([0, 2, 1], rf(1)),
                ([3, 0, 0], rf(-1)),
                ([1, 0, 2], rf(1)),
                ([0, 0, 3], rf(-1)),
            ],
        );
        let p = ProjPoint::from_ints(Var::U, &[], &[1], &[1]);
        let q = ProjPoint::from_ints(Var::U, &[1], &[1], &[1]);
        let r = chord_third_point(&c, &p, &q).unwrap();
        assert_eq!(r, ProjPoint::from_ints(Var::U, &[-1], &[1], &[1]));
    }
}
