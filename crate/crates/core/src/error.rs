use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate node set: Vandermonde determinant numerically zero")]
    Degenerate,

    #[error("Gram matrix not positive definite at pivot index {index}")]
    GramSingular { index: usize },

    #[error("combinatorial budget exceeded: {candidates} subsets > {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("mesh cannot support degree {degree}: greedy selection stalled after {selected} points")]
    MeshExhausted { degree: usize, selected: usize },

    #[error("quadrature failed to converge: {0}")]
    QuadratureFailure(String),

    #[error("jet oracle order {available} insufficient, need {needed}")]
    JetOrder { needed: usize, available: usize },

    #[error("{0}")]
    Incompatible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
