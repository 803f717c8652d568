use thiserror::Error;

/// Errors shared by all modules of the workbench.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: left has n={left}, right has n={right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("size guard: {what} (limit {limit}, requested {requested})")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("order error: {0}")]
    Order(String),

    #[error("algebra shape error: {0}")]
    AlgebraShape(String),

    #[error("two-sided unital products disagree on the endomorphisms of the identity: {0}")]
    EckmannHilton(String),

    #[error("completed hom failed to split: {0}")]
    Decomposition(String),

    #[error("associativity failure: {0}")]
    Associativity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
