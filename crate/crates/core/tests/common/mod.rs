#![allow(dead_code)]

use inose_core::algebra::{UniPoly, Var};
use inose_core::elliptic::{EllipticCurve, RationalMap};

/// `y^2 = x^3 + a x^2 + b x` and its quotient by `(0, 0)`:
/// `E2: y^2 = x^3 - 2a x^2 + (a^2 - 4b) x` with
/// `x -> (x^2 + a x + b) / x`, `y -> y (x^2 - b) / x^2`.
pub fn two_isogeny(a: i64, b: i64) -> (EllipticCurve, EllipticCurve, RationalMap) {
    let e1 = EllipticCurve::from_ints(a, b, 0).unwrap();
    let e2 = EllipticCurve::from_ints(-2 * a, a * a - 4 * b, 0).unwrap();
    let p = |c: &[i64]| UniPoly::from_ints(Var::X1, c);
    let phi =
        RationalMap::new(p(&[b, a, 1]), p(&[0, 1]), p(&[-b, 0, 1]), p(&[0, 0, 1]), 2).unwrap();
    (e1, e2, phi)
}
