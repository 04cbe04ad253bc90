//! Divided-power tensor spaces `D(a_1, ..., a_q)` over `N` variables and the
//! equivariant maps between two-factor spaces built from comultiplication and
//! multiplication.

mod maps;
mod tensor;

pub use maps::{
    build_phi1, build_phi2, compare_images, compare_phi1_theta1, compare_phi2_theta2,
    images_equal_phi2_theta2, phi, phi2_eigenvalue, q_value, theta, theta_map,
    verify_q_formula, DPMap, ImageComparison, TwoRowTableauSpec,
};
pub use tensor::{
    bounded_compositions, comultiply, compositions, dp_basis, dp_basis_of_weight, dp_dimension,
    multiply, swap_factors, DPMonomial, DPVector,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DpError {
    #[error("cannot split a factor of degree {degree} as {split:?}")]
    BadSplit { degree: usize, split: (usize, usize) },
    #[error("factor {factor} out of range for a tensor with {factors} factors")]
    FactorOutOfRange { factor: usize, factors: usize },
    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch { expected: Vec<usize>, found: Vec<usize> },
    #[error("theta_{t} needs t <= {a}")]
    BadTheta { t: usize, a: usize },
    #[error("n = {n} is too small here (need n >= {min})")]
    DegreeTooSmall { n: usize, min: usize },
    #[error("{num_vars} variables is not enough (need at least {required})")]
    TooFewVariables { num_vars: usize, required: usize },
}
