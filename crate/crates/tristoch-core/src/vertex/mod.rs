//! Vertex certification, exhaustive vertex enumeration, and convex
//! decomposition for the two tensor polytopes.
//!
//! Extremality is decided two independent ways: by linear independence of
//! the support columns (the basic-feasible-solution test) and by the rank
//! of the active inequality rows (the halfspace test). The enumerator walks
//! all rank-sized column subsets of the constraint matrix with an exact
//! integer elimination, so every reported vertex is a proven basic feasible
//! solution; certification then double-checks each one in big-rational
//! arithmetic.

use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;

mod certify;
mod decompose;
mod enumerate;

pub use certify::{
    check_extreme, check_extreme_halfspace, ExtremeVerdict, NonVertexWitness, VertexCertificate,
};
pub use decompose::{caratheodory_decompose, search_scaled_extremes, Decomposition};
pub use enumerate::{
    assemble_report, enumerate_vertices, enumerate_vertices_with_budget, enumeration_plan,
    enumeration_tasks, find_feasible_on_face, run_task, EnumerationReport, PrefixTask,
    ReducedSystem, DEFAULT_BUDGET,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexError {
    /// The tensor's side length differs from the system's.
    ShapeMismatch { system_n: usize, tensor_n: usize },
    /// The tensor is not a point of the polytope.
    NotFeasible,
    /// The candidate-basis count C(n³, rank) exceeds the budget.
    BudgetExceeded { candidates: BigUint, budget: u64 },
    /// An internal cross-check failed; always an implementation bug.
    Internal(String),
}

impl fmt::Display for VertexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexError::ShapeMismatch { system_n, tensor_n } => write!(
                f,
                "tensor has side length {tensor_n}, system expects {system_n}"
            ),
            VertexError::NotFeasible => write!(f, "tensor is not a point of the polytope"),
            VertexError::BudgetExceeded { candidates, budget } => write!(
                f,
                "{candidates} candidate bases exceed the budget of {budget}"
            ),
            VertexError::Internal(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl core::error::Error for VertexError {}
