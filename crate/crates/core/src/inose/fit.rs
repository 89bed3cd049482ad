use crate::algebra::{RatFunc, RfPoly, UniPoly, Var};
use crate::curves::{monomials, resultant_x2_in_chart, Chart, ProjPoint, TriPoly};
use crate::elliptic::RationalMap;
use crate::error::{Error, Result};
use crate::linsolve::FFMatrix;

/// Degree of the fitted curve for a degree-`d` isogeny: `ceil(d / 2)`.
pub fn fit_degree(d: u32) -> u32 {
    d.div_ceil(2)
}

/// Homogeneous linear conditions on the coefficients of a degree-`l` curve
/// `q` (in [`monomials`] order): `q(x1, phi_x(x1), 1)` vanishes modulo `p`,
/// and `q` passes through each of `points`.
pub fn fitting_system(
    phi: &RationalMap,
    p: &RfPoly,
    points: &[&ProjPoint],
    l: u32,
) -> Result<FFMatrix> {
    let mons = monomials(l);
    let r = p.degree().unwrap_or(0);
    // x1^i * x_num^j * x_den^(l-j), reduced modulo p
    let x1 = UniPoly::x(Var::X1);
    let reduced: Vec<RfPoly> = mons
        .iter()
        .map(|e| {
            let m = &(&x1.pow(e[0]) * &phi.x_num().pow(e[1])) * &phi.x_den().pow(l - e[1]);
            RfPoly::from_unipoly(&m, p.inner()).rem(p)
        })
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<RatFunc>> = (0..r)
        .map(|k| reduced.iter().map(|m| m.coeff(k)).collect())
        .collect();
    for pt in points {
        let c = pt.to_ratfuncs();
        rows.push(
            mons.iter()
                .map(|e| {
                    (0..3).fold(RatFunc::one(p.inner()), |acc, i| {
                        &acc * &c[i].pow(e[i] as i32).expect("nonnegative power")
                    })
                })
                .collect(),
        );
    }
    FFMatrix::new(mons.len(), p.inner(), rows)
}

/// Basis of all degree-`ceil(d/2)` curves satisfying the fitting conditions
/// (through `O` and `Ō` as well when `d` is odd).
pub fn fitting_family(
    phi: &RationalMap,
    p: &RfPoly,
    o: &ProjPoint,
    obar: &ProjPoint,
) -> Result<Vec<TriPoly>> {
    let d = phi.degree();
    let l = fit_degree(d);
    let points: Vec<&ProjPoint> = if d % 2 == 1 { vec![o, obar] } else { vec![] };
    let m = fitting_system(phi, p, &points, l)?;
    Ok(m.nullspace()
        .iter()
        .map(|v| TriPoly::from_coeff_vector(l, v))
        .collect())
}

/// A fitted curve distinct from `C_u`: among the kernel basis vectors that are
/// not multiples of `C_u`, the one with the smallest total `u`-degree of its
/// coefficients (earliest on ties).
pub fn fit_curve(
    cu: &TriPoly,
    phi: &RationalMap,
    p: &RfPoly,
    o: &ProjPoint,
    obar: &ProjPoint,
) -> Result<TriPoly> {
    let family = fitting_family(phi, p, o, obar)?;
    family
        .into_iter()
        .filter(|q| !q.is_multiple_of(cu))
        .enumerate()
        .min_by_key(|(i, q)| {
            let size: usize = q.terms().values().map(RatFunc::size_degree).sum();
            (size, *i)
        })
        .map(|(_, q)| q)
        .ok_or(Error::EmptyFamily)
}

fn reversed(p: &RfPoly, outer: Var) -> RfPoly {
    let mut c = p.coeffs().to_vec();
    c.reverse();
    RfPoly::new(outer, p.inner(), c)
}

fn divide_known(res: &RfPoly, factor: &RfPoly) -> Result<RfPoly> {
    if factor.degree().unwrap_or(0) == 0 {
        return Ok(res.clone());
    }
    res.div_exact(factor)
        .ok_or_else(|| Error::ResidualNotLinear(res.degree().unwrap_or(0)))
}

/// Linear factor `a * var - b` vanishing at `var = b / a`, or a constant when
/// `a = 0`.
fn linear(var: Var, a: &UniPoly, b: &UniPoly) -> RfPoly {
    RfPoly::new(
        var,
        a.var(),
        vec![-&RatFunc::from_poly(b), RatFunc::from_poly(a)],
    )
}

fn root_of_linear(p: &RfPoly) -> RatFunc {
    -&p.coeff(0).checked_div(&p.coeff(1)).expect("degree one")
}

/// The common root in `x2` of two curves restricted to a line, given as
/// the `x2`-coefficient lists of each curve evaluated on that line.
fn common_x2(a: Vec<RatFunc>, b: Vec<RatFunc>, inner: Var) -> Result<RatFunc> {
    let fa = RfPoly::new(Var::X2, inner, a);
    let fb = RfPoly::new(Var::X2, inner, b);
    let g = fa.gcd(&fb)?;
    match g.degree() {
        Some(1) => Ok(root_of_linear(&g)),
        other => Err(Error::GcdNotLinear(other.unwrap_or(0))),
    }
}

/// The residual intersection point of `C_u` and a fitted curve `q`, given
/// the known intersections: the roots of `p` on the graph of the isogeny,
/// and for odd `d` the points `O` and `Ō`.
pub fn ninth_point(
    cu: &TriPoly,
    q: &TriPoly,
    p: &RfPoly,
    obar: Option<&ProjPoint>,
) -> Result<ProjPoint> {
    let inner = cu.inner();
    let res = resultant_x2_in_chart(cu, q, Chart::Z)?.poly;
    let mut rest = divide_known(&res, p)?;
    if let Some(ob) = obar {
        if !ob.z().is_zero() {
            rest = divide_known(&rest, &linear(Var::X1, ob.z(), ob.x1()))?;
        }
    }
    match rest.degree() {
        Some(1) => {
            let x1 = root_of_linear(&rest);
            let at = |t: &TriPoly| -> Result<Vec<RatFunc>> {
                t.in_x2_over_x1().iter().map(|c| c.eval(&x1)).collect()
            };
            let x2 = common_x2(at(cu)?, at(q)?, inner)?;
            ProjPoint::from_ratfuncs([x1, x2, RatFunc::one(inner)])
        }
        // every affine intersection is accounted for: the point lies on z = 0
        Some(0) => ninth_point_in_x1_chart(cu, q, p, obar),
        other => Err(Error::ResidualNotLinear(other.unwrap_or(0))),
    }
}

fn ninth_point_in_x1_chart(
    cu: &TriPoly,
    q: &TriPoly,
    p: &RfPoly,
    obar: Option<&ProjPoint>,
) -> Result<ProjPoint> {
    let inner = cu.inner();
    let res = resultant_x2_in_chart(cu, q, Chart::X1)?.poly;
    let mut rest = divide_known(&res, &reversed(p, Var::Z))?;
    if let Some(ob) = obar {
        if !ob.x1().is_zero() {
            rest = divide_known(&rest, &linear(Var::Z, ob.x1(), ob.z()))?;
        }
        // O = (1 : u^2 : 0) sits at z = 0 in this chart
        rest = divide_known(&rest, &RfPoly::x(Var::Z, inner))?;
    }
    match rest.degree() {
        Some(1) => {
            let z = root_of_linear(&rest);
            let at = |t: &TriPoly| -> Result<Vec<RatFunc>> {
                t.in_x2_over_z().iter().map(|c| c.eval(&z)).collect()
            };
            let x2 = common_x2(at(cu)?, at(q)?, inner)?;
            ProjPoint::from_ratfuncs([RatFunc::one(inner), x2, z])
        }
        other => Err(Error::ResidualNotLinear(other.unwrap_or(0))),
    }
}
