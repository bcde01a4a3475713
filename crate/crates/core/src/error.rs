use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
    #[error("partitions have different sizes: {lhs} vs {rhs}")]
    SizeMismatch { lhs: usize, rhs: usize },
    #[error("invalid bead configuration: {0}")]
    BeadConfig(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("partition {partition} is not {p}-regular")]
    NotPRegular { partition: String, p: u32 },
    #[error("not a Rouquier block: {0}")]
    NotRouquier(String),
    #[error("nonempty middle quotient component: {0}")]
    MiddleQuotient(String),
    #[error("block mismatch: {0}")]
    BlockMismatch(String),
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("no generators supplied")]
    EmptyGenerators,
    #[error("Specht module is reducible: {0}")]
    Reducible(String),
    #[error("dimension budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
