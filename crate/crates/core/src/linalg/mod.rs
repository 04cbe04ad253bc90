//! Exact sparse linear algebra over the rationals.

mod action;
mod matrix;
mod rational;
mod sparse;
mod subspace;

pub use action::{LinearAction, SignedPermutation};
pub use matrix::SparseRationalMatrix;
pub use rational::Rational;
pub use sparse::SparseVec;
pub use subspace::{restricted_trace, subspace_equal, Echelon, Reducer, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("subspace is not invariant: image of basis vector {basis_index} leaves it")]
    NotInvariant { basis_index: usize },
}
