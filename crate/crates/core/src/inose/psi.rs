use crate::algebra::{RatFunc, Rational};
use crate::curves::{ProjPoint, TriPoly};
use crate::elliptic::ECPoint;
use crate::error::{Error, Result};

use super::data::{build_cubic_at, origin_at, TransformTables};

/// Maps a point of `C_u` to `F^(6)`; the origin goes to the point at
/// infinity.
pub fn psi_transform(tables: &TransformTables, p: &ProjPoint) -> Result<ECPoint> {
    psi_at(tables, &RatFunc::x(p.var()), p)
}

/// [`psi_transform`] with `u` replaced by the given value, for points of a
/// specialized cubic.
///
/// The denominator of the transform is the tangent line at `O`, which also
/// passes through `Ō`. At `Ō` both numerator and denominator vanish and the
/// value is taken as the limit along the curve.
pub fn psi_at(tables: &TransformTables, u: &RatFunc, p: &ProjPoint) -> Result<ECPoint> {
    if p.proj_eq(&origin_at(u)) {
        return Ok(ECPoint::Infinity);
    }
    let var = u.var();
    let k = |n: i64| Rational::from_integer(n.into());
    let u2 = u * u;
    let u3 = &u2 * u;
    let n_form = tables.x_numerator(u);
    let m_form = tables.y_numerator(u);
    let line = tables.denominator_line(u);
    let pr = p.to_ratfuncs();
    let den = line.eval_rf(&pr)?;
    if !den.is_zero() {
        let x = n_form
            .eval_rf(&pr)?
            .checked_div(&(&u2 * &den).scale_by(&k(3)))?;
        let y = m_form
            .eval_rf(&pr)?
            .checked_div(&(&(&u3 * &den) * &den).scale_by(&k(2)))?;
        return Ok(ECPoint::affine(x, y));
    }
    let (e1, e2) = tables.curves();
    let cubic = build_cubic_at(e1, e2, u);
    if !cubic.evaluate(p).is_zero() || !n_form.eval_rf(&pr)?.is_zero() {
        return Err(Error::TransformDenominatorVanishes);
    }
    // Germ p + t*w + t^2*v + ... of the curve: w spans the tangent direction,
    // and grad F . v = -f2 where f2 is the t^2 coefficient of F(p + t w).
    let grad = gradient(&cubic, &pr)?;
    let i = (0..3).find(|&i| !pr[i].is_zero()).expect("nonzero point");
    let mut e = [0, 1, 2].map(|_| RatFunc::zero(var));
    e[i] = RatFunc::one(var);
    let w = cross(&grad, &e);
    let lw = line.eval_rf(&w)?;
    if lw.is_zero() {
        return Err(Error::TransformDenominatorVanishes);
    }
    let x = n_form
        .eval_rf(&w)?
        .checked_div(&(&u2 * &lw).scale_by(&k(3)))?;
    // m(p(t)) = t^2 (m(w) + grad m . v) + O(t^3) with grad m = lambda grad F
    let f2 = cubic.restrict_to_line(&pr, &w)?.coeff(2);
    let gm = gradient(&m_form, &pr)?;
    let j = (0..3)
        .find(|&j| !grad[j].is_zero())
        .ok_or(Error::SingularPoint)?;
    let lambda = gm[j].checked_div(&grad[j])?;
    if (0..3).any(|j| gm[j] != &lambda * &grad[j]) {
        return Err(Error::TransformDenominatorVanishes);
    }
    let top = &m_form.eval_rf(&w)? - &(&lambda * &f2);
    let y = top.checked_div(&(&(&u3 * &lw) * &lw).scale_by(&k(2)))?;
    Ok(ECPoint::affine(x, y))
}

fn gradient(f: &TriPoly, p: &[RatFunc; 3]) -> Result<[RatFunc; 3]> {
    Ok([
        f.partial(0).eval_rf(p)?,
        f.partial(1).eval_rf(p)?,
        f.partial(2).eval_rf(p)?,
    ])
}

fn cross(a: &[RatFunc; 3], b: &[RatFunc; 3]) -> [RatFunc; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::EllipticCurve;
    use crate::inose::data::{build_cubic, build_model, inose_coefficients, origin, origin_bar};

    #[test]
    fn origin_maps_to_infinity_and_obar_lands_on_model() {
        let e1 = EllipticCurve::from_ints(-4, 0, 16).unwrap();
        let e2 = EllipticCurve::from_ints(-4, -160, -1264).unwrap();
        let tables = TransformTables::new(&e1, &e2);
        assert_eq!(
            psi_transform(&tables, &origin()).unwrap(),
            ECPoint::Infinity
        );
        let cu = build_cubic(&e1, &e2);
        let ob = origin_bar(&cu).unwrap();
        let model = build_model(&inose_coefficients(&e1, &e2).unwrap(), 6).unwrap();
        let img = psi_transform(&tables, &ob).unwrap();
        assert!(model.contains(&img));
        // 2 Ψ(Ō) + Ψ(T) = Ψ(Ō) for the tangent residual T at Ō
        let t = crate::curves::tangent_third_point(&cu, &ob).unwrap();
        let pt = psi_transform(&tables, &t).unwrap();
        assert_eq!(model.add(&img, &pt).unwrap(), ECPoint::Infinity);
    }
}
