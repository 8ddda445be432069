//! Exact linear algebra over `Q` and prime fields.

mod chain;
mod linmap;
mod scalar;
mod solve;
mod vector;

pub use chain::Chain;
pub use linmap::{join_index, split_index, LinMap};
pub use scalar::{Field, Scalar};
pub use vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("operands live in different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("cannot parse field descriptor {0:?} (expected Q or F<p>)")]
    ParseField(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("entry ({row}, {col}) outside a {dst_dim}x{src_dim} matrix")]
    IndexOutOfRange { row: usize, col: usize, dst_dim: usize, src_dim: usize },
    #[error("entry ({row}, {col}) given twice")]
    DuplicateEntry { row: usize, col: usize },
}
