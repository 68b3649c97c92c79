//! Dense vectors and matrices of `f64`.

pub mod matrix;
pub mod vector;

pub use matrix::{Matrix, MatrixPredicate};
pub use vector::Vector;

/// Entrywise tolerance for approximate comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// Determinants with smaller magnitude count as zero.
pub const SINGULARITY_TOLERANCE: f64 = 1e-10;
