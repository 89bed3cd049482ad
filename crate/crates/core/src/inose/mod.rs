//! Sections of the Inose fibration from explicit isogenies.

pub mod data;
pub mod examples;
pub mod fit;
pub mod pipeline;
pub mod psi;
pub mod section;
pub mod split;

pub use data::{
    build_cubic, build_cubic_at, build_model, inose_coefficients, origin, origin_at, origin_bar,
    InoseData, TransformTables,
};
pub use examples::{verify_example, worked_example, StageResult, WorkedExample};
pub use fit::{fit_curve, fit_degree, fitting_family, fitting_system, ninth_point};
pub use pipeline::{compute_section, Branch, Computation, Setup};
pub use psi::{psi_at, psi_transform};
pub use section::{assemble_section, intersection_with_zero, section_height, SectionF1};
pub use split::{check_inputs, expected_split_degree, split_divisor, Sign, SplitPair};
