//! Decomposition of verified maps into block components, with every side
//! condition checked and the original map recomposed from the parts.
//!
//! Extraction: `m_σ = π_M(σ(p))`, `m_d = π_M(d(p))`, `m_D = π_M(D(q))`,
//! `m_F = π_M(F(q))`; the block maps come from composing with the
//! embeddings and projections. Recomposition equality is the correctness
//! check.

mod aut;
mod cent;
mod common;
mod der;

pub use aut::{check_aut_parts, compose_automorphism, decompose_automorphism, AutParts};
pub use cent::{
    check_cent_conditions, commuting_criterion, compose_centralizing, decompose_centralizing, CentDecomposition,
    CentParts, CONDITION_LABELS,
};
pub use common::{ConditionCheck, StructureError};
pub use der::{
    check_der_parts, check_gen_parts, compose_generalized, compose_left_multiplier, compose_sigma_derivation,
    decompose_generalized, decompose_left_multiplier, decompose_sigma_derivation, DerParts, GenParts, MultParts,
};

/// Automorphism parts used by the decompositions: the identity needs no
/// hypothesis, any other σ requires the idempotent flags.
pub fn automorphism_parts(
    t: &crate::algebra::TriangularAlgebra,
    sigma: &crate::maps::LinearEndo,
) -> Result<AutParts, StructureError> {
    aut::parts_for(t, sigma)
}
