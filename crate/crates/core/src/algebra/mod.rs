//! Coefficient tower `Q ⊂ Q[u] ⊂ Q(u)` and polynomials over `Q(u)`.

pub mod parse;
pub mod ratfunc;
pub mod rational;
pub mod rfpoly;
pub mod unipoly;
pub mod zpoly;

pub use parse::parse_poly;
pub use ratfunc::RatFunc;
pub use rational::{parse_rational, Rational};
pub use rfpoly::RfPoly;
pub use unipoly::{UniPoly, Var};
pub use zpoly::ZPoly;
