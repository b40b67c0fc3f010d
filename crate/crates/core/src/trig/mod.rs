//! Sine and shadow rules, polar duality, the general solver and tangent tables.

mod rules;
mod solve;
mod tangent;

pub use rules::{
    cosine_corollary_check, place_sas, polar_elements, polar_triangle, shadow_rule_check, sine_rule_residual,
    CorollaryResidual,
};
pub use solve::{solve, CaseKind, SolveRequest, SolveResult, TriangleElements};
pub use tangent::{tan_reduced, tan_reduced_probed, tangent_table, TangentRow};

use thiserror::Error;

use crate::sphere::SphereError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrigError {
    #[error("no triangle has these elements: {0}")]
    NoSolution(String),
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("the given elements fit infinitely many triangles")]
    Indeterminate,
    #[error("shadow of a quadrant is undefined")]
    UndefinedShadow,
    #[error("argument outside the domain: {0}")]
    DomainError(String),
    #[error("angle at slot {0} is not right")]
    NotRight(usize),
    #[error("angle at slot {0} is not acute")]
    NotAcute(usize),
    #[error(transparent)]
    Sphere(#[from] SphereError),
}
