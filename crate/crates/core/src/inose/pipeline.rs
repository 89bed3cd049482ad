use crate::algebra::{Rational, RfPoly};
use crate::curves::{ProjPoint, TriPoly};
use crate::elliptic::{ECPoint, EllipticCurve, RationalMap, WeierstrassModel};
use crate::error::{Error, Result};

use super::data::{
    build_cubic, build_model, inose_coefficients, origin, origin_bar, InoseData, TransformTables,
};
use super::fit::{fit_curve, ninth_point};
use super::psi::psi_transform;
use super::section::{assemble_section, SectionF1};
use super::split::{split_divisor, Sign, SplitPair};

/// Everything shared by the two sign branches.
#[derive(Clone, Debug)]
pub struct Setup {
    pub e1: EllipticCurve,
    pub e2: EllipticCurve,
    pub phi: RationalMap,
    pub data: InoseData,
    pub tables: TransformTables,
    pub cubic: TriPoly,
    pub origin: ProjPoint,
    pub origin_bar: ProjPoint,
    pub model6: WeierstrassModel,
    pub pair: SplitPair,
}

/// One sign branch: the divisor factor, the fitted curve, the residual
/// point on `C_u`, and its image on `F^(6)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub sign: Sign,
    pub p: RfPoly,
    pub q: TriPoly,
    pub point: ProjPoint,
    pub image: ECPoint,
}

/// Result of a full run, with intermediates.
#[derive(Clone, Debug)]
pub struct Computation {
    pub setup: Setup,
    pub plus: Branch,
    pub minus: Branch,
    pub section: SectionF1,
}

impl Setup {
    /// Validates the input and prepares the shared data.
    pub fn new(e1: &EllipticCurve, e2: &EllipticCurve, phi: &RationalMap) -> Result<Self> {
        let pair = split_divisor(e1, e2, phi)?;
        let data = inose_coefficients(e1, e2)?;
        let cubic = build_cubic(e1, e2);
        let origin_bar = origin_bar(&cubic)?;
        Ok(Setup {
            e1: e1.clone(),
            e2: e2.clone(),
            phi: phi.clone(),
            tables: TransformTables::new(e1, e2),
            model6: build_model(&data, 6)?,
            data,
            cubic,
            origin: origin(),
            origin_bar,
            pair,
        })
    }

    pub fn degree(&self) -> u32 {
        self.phi.degree()
    }

    /// `Ō` when it is one of the prescribed points of the fitted curve.
    pub fn fitted_extra_point(&self) -> Option<&ProjPoint> {
        (self.degree() % 2 == 1).then_some(&self.origin_bar)
    }

    pub fn fit(&self, sign: Sign) -> Result<TriPoly> {
        fit_curve(
            &self.cubic,
            &self.phi,
            self.pair.get(sign),
            &self.origin,
            &self.origin_bar,
        )
    }

    /// Ninth point for a given fitted curve.
    pub fn ninth_point(&self, sign: Sign, q: &TriPoly) -> Result<ProjPoint> {
        let pt = ninth_point(
            &self.cubic,
            q,
            self.pair.get(sign),
            self.fitted_extra_point(),
        )?;
        if !self.cubic.evaluate(&pt).is_zero() {
            return Err(Error::PointNotOnCurve);
        }
        Ok(pt)
    }

    pub fn psi(&self, p: &ProjPoint) -> Result<ECPoint> {
        let img = psi_transform(&self.tables, p)?;
        if !self.model6.contains(&img) {
            return Err(Error::PointNotOnCurve);
        }
        Ok(img)
    }

    pub fn run_branch(&self, sign: Sign) -> Result<Branch> {
        let q = self.fit(sign)?;
        let point = self.ninth_point(sign, &q)?;
        let image = self.psi(&point)?;
        Ok(Branch {
            sign,
            p: self.pair.get(sign).clone(),
            q,
            point,
            image,
        })
    }
}

/// Runs the whole construction and checks the height equals `2 deg phi`.
pub fn compute_section(
    e1: &EllipticCurve,
    e2: &EllipticCurve,
    phi: &RationalMap,
) -> Result<Computation> {
    let setup = Setup::new(e1, e2, phi)?;
    let (plus, minus) = std::thread::scope(|s| {
        let minus = s.spawn(|| setup.run_branch(Sign::Minus));
        let plus = setup.run_branch(Sign::Plus);
        (plus, minus.join().expect("branch thread panicked"))
    });
    let (plus, minus) = (plus?, minus?);
    let d = setup.degree();
    let section = assemble_section(&plus.image, &minus.image, &setup.data, Some(d))?;
    let expected = Rational::from_integer((2 * d).into());
    if section.height != expected {
        return Err(Error::HeightMismatch {
            expected: expected.to_string(),
            found: section.height.to_string(),
        });
    }
    Ok(Computation {
        setup,
        plus,
        minus,
        section,
    })
}
