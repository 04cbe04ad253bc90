//! Exact computations around the multilinear component of the free
//! n-ary Lie algebra (LAnKe): its construction as a quotient of bracketed
//! words, the symmetric-group character it carries, and the skew Specht and
//! divided-power machinery that bounds its decomposition.

pub mod characters;
pub mod combinatorics;
pub mod dp;
pub mod lanke;
pub mod linalg;
pub mod tabloid;

pub use characters::{decompose, inner_product, irreducible_character, ClassFunction, ConjugacyClass};
pub use combinatorics::{Partition, SkewPartition, Tableau};
pub use lanke::{BracketedWord, LAnKeElement, QuotientModule};
pub use linalg::{Rational, SparseRationalMatrix, SparseVec, SubspaceBasis};
