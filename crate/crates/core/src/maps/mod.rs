//! Linear endomorphisms, σ-brackets, map predicates and the solver for whole
//! spaces of structured maps.

mod endo;
mod predicates;
mod solve;
mod witness;

use thiserror::Error;

pub use endo::{inner_automorphism, LinearEndo};
pub use predicates::{
    abracket_sigma, bracket_sigma, check_predicate, is_automorphism, is_generalized_pair, is_left_multiplier,
    is_sigma_derivation, quadratic_form, MapKind, PredicateMode,
};
pub use solve::{solve_space, MapSpace};
pub use witness::Witness;

#[derive(Debug, Clone, Error)]
pub enum MapsError {
    #[error("σ is not an automorphism: {0}")]
    NotAutomorphism(Witness),
    #[error("shape mismatch: {0}")]
    Shape(String),
}
