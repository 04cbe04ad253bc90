//! Partitions, skew shapes, tableaux and Littlewood-Richardson numbers.

mod lr;
mod partition;
mod shapes;
mod skew;
mod tableau;

pub use lr::{lr_coefficient, lr_tableaux_by_content, skew_specht_multiplicities};
pub use partition::{partitions_of, Partition};
pub use shapes::{has_full_column, make_alpha, make_beta, make_lambda, min_column_count};
pub use skew::SkewPartition;
pub use tableau::{
    count_semistandard, count_standard, enumerate_sst, kostka_number, weyl_dimension, Tableau,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatoricsError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("shape parameters must satisfy n >= 2 and k >= 2 (got n={n}, k={k})")]
    BadShapeParameters { n: usize, k: usize },
}
