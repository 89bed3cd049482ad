use crate::algebra::{RatFunc, RfPoly, UniPoly, Var};
use crate::elliptic::{verify_isogeny, EllipticCurve, RationalMap};
use crate::error::{Error, Result};

/// The two factors `p+`, `p-` of the intersection divisor of `C_u` with the
/// graph of an isogeny, as polynomials in `x1` over `Q(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub p_plus: RfPoly,
    pub p_minus: RfPoly,
    pub r: usize,
}

/// Sign of a pipeline branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn label(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl SplitPair {
    pub fn get(&self, sign: Sign) -> &RfPoly {
        match sign {
            Sign::Plus => &self.p_plus,
            Sign::Minus => &self.p_minus,
        }
    }
}

/// `deg p` for a degree-`d` isogeny.
pub fn expected_split_degree(d: u32) -> usize {
    let d = d as usize;
    if d % 2 == 1 {
        (3 * d - 3) / 2
    } else {
        (3 * d - 2) / 2
    }
}

/// Validates the isogeny and the hypothesis `j(E1) != j(E2)`.
pub fn check_inputs(e1: &EllipticCurve, e2: &EllipticCurve, phi: &RationalMap) -> Result<()> {
    let report = verify_isogeny(e1, e2, phi);
    if !report.identity_holds {
        return Err(Error::IsogenyInvalid(
            "the map does not send E1 into E2".into(),
        ));
    }
    if !report.degree_ok {
        return Err(Error::IsogenyInvalid(format!(
            "declared degree {} but x-map has numerator degree {} and denominator degree {}",
            report.declared_degree, report.x_num_degree, report.x_den_degree
        )));
    }
    let (j1, j2) = (e1.j_invariant(), e2.j_invariant());
    if j1 == j2 {
        return Err(Error::EqualJInvariants(
            crate::algebra::rational::format_rational(&j1),
        ));
    }
    Ok(())
}

/// `p± = y_num ∓ u^3 y_den` from `phi_y = y_num / y_den`.
pub fn split_divisor(
    e1: &EllipticCurve,
    e2: &EllipticCurve,
    phi: &RationalMap,
) -> Result<SplitPair> {
    check_inputs(e1, e2, phi)?;
    let lift = |p: &UniPoly| RfPoly::from_unipoly(p, Var::U);
    let u3 = RatFunc::x(Var::U).pow(3)?;
    let yn = lift(phi.y_num());
    let yd = lift(phi.y_den()).scale(&u3);
    let p_plus = &yn - &yd;
    let p_minus = &yn + &yd;
    let r = expected_split_degree(phi.degree());
    for p in [&p_plus, &p_minus] {
        let found = p.degree().unwrap_or(0);
        if found != r {
            return Err(Error::DegreeMismatch { expected: r, found });
        }
        if p.gcd(&p.derivative())?.degree() != Some(0) {
            return Err(Error::NotSquarefree);
        }
        if p.gcd(&lift(&e1.cubic(Var::X1)))?.degree() != Some(0) {
            return Err(Error::NotSquarefree);
        }
    }
    Ok(SplitPair { p_plus, p_minus, r })
}
