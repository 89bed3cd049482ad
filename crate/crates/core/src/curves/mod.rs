//! Plane curves over `Q(u)` in coordinates `(x1 : x2 : z)`.

pub mod intersect;
pub mod point;
pub mod tripoly;

pub use intersect::{
    chord_third_point, resultant_x2, resultant_x2_in_chart, tangent_third_point, Chart, Resultant,
};
pub use point::ProjPoint;
pub use tripoly::{monomials, Exponent, TriPoly};
