//! The multilinear component `Lie_n(m)` of the free n-ary Lie algebra, built
//! as normalized bracketed words modulo generalized Jacobi relations.

mod basis;
mod decomposition;
mod element;
mod isotypic;
mod lemma33;
mod quotient;
mod word;

pub use basis::{enumerate_basis, gji_relations};
pub use decomposition::{beta_gamma_split, rho_decomposition, BetaGammaSplit, Multiplicities};
pub use element::LAnKeElement;
pub use isotypic::{canonical_orbit, multiplicities_from_fixed_points, permutation_sign, young_split, FixedPointSpace, Twist, YoungBlocks};
pub use lemma33::{check_lemma33, Lemma33Instance};
pub use quotient::{build_quotient, check_comb_spanning, rho_character, QuotientModule};
pub use word::{BracketedWord, Tree};

use crate::characters::CharacterError;
use crate::combinatorics::Partition;
use crate::linalg::LinalgError;

/// Largest `m = (n-1)k + 1` the engine accepts.
pub const MAX_M: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LankeError {
    #[error("n = {n}, k = {k} is out of range (need n >= 2, k >= 1)")]
    BadParameters { n: usize, k: usize },
    #[error(
        "n = {n}, k = {k} gives m = {m} labels; only m <= {limit} is tractable \
         (the number of bracketed words grows factorially in m)"
    )]
    BeyondDeskScale { n: usize, k: usize, m: usize, limit: usize },
    #[error("bracket with {found} arguments where {expected} were expected")]
    Arity { expected: usize, found: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("word {0} is not in the basis of this module")]
    NotInBasis(String),
    #[error("expected a permutation of the labels, got length {0}")]
    BadPermutation(usize),
    #[error("malformed instance: {0}")]
    BadInstance(String),
    #[error("cannot add a row of length {k} on top of {partition}")]
    CannotPrepend { partition: Partition, k: usize },
    #[error("subtracting beta leaves a negative multiplicity at {0}")]
    NegativeMultiplicity(Partition),
    #[error("gamma contains {0}, which has too many columns")]
    WideGammaSummand(Partition),
    #[error("fixed-point dimensions give a negative multiplicity at {0}")]
    InconsistentFixedPoints(Partition),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Validates `(n, k)` and returns `m`.
pub fn check_scale(n: usize, k: usize) -> Result<usize, LankeError> {
    if n < 2 || k < 1 {
        return Err(LankeError::BadParameters { n, k });
    }
    let m = (n - 1) * k + 1;
    if m > MAX_M {
        return Err(LankeError::BeyondDeskScale { n, k, m, limit: MAX_M });
    }
    Ok(m)
}
