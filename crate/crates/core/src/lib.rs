pub mod algebra;
pub mod curves;
pub mod elliptic;
pub mod error;
pub mod inose;
pub mod job;
pub mod linsolve;

pub use error::{Error, Result};
