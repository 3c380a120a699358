//! Exact arithmetic: quadratic numbers, integer matrices and polynomials,
//! lattice normal forms and Sturm root counting.

mod lattice;
mod matrix;
mod poly;
mod quadratic;
mod sturm;

use num_bigint::BigInt;
use thiserror::Error;

pub use lattice::{hnf, LatticeBasis, LatticeIndex};
pub use matrix::{qn_apply_homography, IntegerMatrix};
pub use poly::IntegerPolynomial;
pub use quadratic::{squarefree_split, QuadraticField, QuadraticNumber};
pub use sturm::{count_real_roots_between, count_real_roots_in};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    ZeroDenominator,
    #[error("cannot combine elements of Q(sqrt({left})) and Q(sqrt({right}))")]
    MixedFields { left: u64, right: u64 },
    #[error("matrix must be square and nonempty")]
    NotSquare,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: BigInt },
}
