use thiserror::Error;

use crate::algebra::Var;

/// Every failure the library can report.
///
/// The variant name is part of the public contract: the CLI prints it
/// verbatim, so renaming a variant is a breaking change.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("indeterminate mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),
    #[error("rational function is not in the subfield k(u^6): {0}")]
    NotInSubfield(String),
    #[error("curves share a common component (resultant vanishes identically)")]
    CommonComponent,
    #[error("point is singular on the curve")]
    SingularPoint,
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    #[error("singular input curve: {0}")]
    SingularInput(String),
    #[error("isogeny verification failed: {0}")]
    IsogenyInvalid(String),
    #[error("curves have equal j-invariant {0}")]
    EqualJInvariants(String),
    #[error("split polynomial has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("split polynomial is not squarefree or meets the 2-torsion divisor")]
    NotSquarefree,
    #[error("fitting system only admits multiples of the cubic")]
    EmptyFamily,
    #[error("residual intersection is not a single point (degree {0})")]
    ResidualNotLinear(usize),
    #[error("coordinate recovery gcd has degree {0}, expected 1")]
    GcdNotLinear(usize),
    #[error("transform denominator vanishes at the point")]
    TransformDenominatorVanishes,
    #[error("section difference is the zero section")]
    ZeroSection,
    #[error("non-integral local intersection number at {0}")]
    NonIntegralIntersection(String),
    #[error("section height {found} differs from expected {expected}")]
    HeightMismatch { expected: String, found: String },
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::VarMismatch(..) => "VarMismatch",
            Error::NotInSubfield(_) => "NotInSubfield",
            Error::CommonComponent => "CommonComponent",
            Error::SingularPoint => "SingularPoint",
            Error::PointNotOnCurve => "PointNotOnCurve",
            Error::SingularInput(_) => "SingularInput",
            Error::IsogenyInvalid(_) => "IsogenyInvalid",
            Error::EqualJInvariants(_) => "EqualJInvariants",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::NotSquarefree => "NotSquarefree",
            Error::EmptyFamily => "EmptyFamily",
            Error::ResidualNotLinear(_) => "ResidualNotLinear",
            Error::GcdNotLinear(_) => "GcdNotLinear",
            Error::TransformDenominatorVanishes => "TransformDenominatorVanishes",
            Error::ZeroSection => "ZeroSection",
            Error::NonIntegralIntersection(_) => "NonIntegralIntersection",
            Error::HeightMismatch { .. } => "HeightMismatch",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
