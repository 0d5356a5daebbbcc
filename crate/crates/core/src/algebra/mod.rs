//! Finite-dimensional algebras, bimodules and triangular algebras.

mod bimodule;
mod center;
mod error;
mod families;
mod fd;
mod idempotents;
mod triangular;

pub use bimodule::{make_bimodule, Bimodule};
pub use center::{center, sigma_center, CenterData, SigmaCenterData};
pub use error::{AlgebraError, Side};
pub use families::{
    block_pattern_algebra, block_upper, fixture_n3, fixture_trian_aa0, full_matrix, matrix_unit_algebra, poly_negation,
    trunc_poly, trunc_poly_triangular, upper_triangular, upper_triangular_algebra, upper_triangular_split, N3Fixture,
    TrianAa0Fixture,
};
pub use fd::{make_algebra, FdAlgebra};
pub use idempotents::{has_only_trivial_idempotents_bruteforce, DEFAULT_ENUMERATION_BOUND};
pub use triangular::{make_triangular, make_triangular_with, MatrixUnits, TriangularAlgebra, TriangularOptions};
