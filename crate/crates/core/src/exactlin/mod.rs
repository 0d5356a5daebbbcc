//! Exact field arithmetic and dense linear algebra.
//!
//! Everything downstream (centers, solved map spaces, theorem checks) is a
//! kernel, a solve or a subspace comparison computed here. No floating point
//! is involved anywhere.

mod echelon;
mod matrix;
mod scalar;
mod subspace;
pub mod vector;

pub use echelon::Echelon;
pub use matrix::{kernel_basis, solve_linear, Matrix};
pub use scalar::{Field, FieldError, Scalar};
pub use subspace::{subspace_contains, subspace_intersect, subspace_leq, Subspace};
pub use vector::Vector;
