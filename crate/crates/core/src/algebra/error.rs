use std::fmt;

use thiserror::Error;

use crate::exactlin::{vector, Vector};
use crate::maps::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

pub(crate) fn show(v: &Vector) -> String {
    format!("({})", vector::to_strings(v).join(", "))
}

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("malformed input: {0}")]
    Shape(String),
    #[error("associativity fails on basis triple ({i}, {j}, {k}): (e{i}e{j})e{k} = {} but e{i}(e{j}e{k}) = {}", show(.left), show(.right))]
    AssociativityViolation {
        i: usize,
        j: usize,
        k: usize,
        left: Vector,
        right: Vector,
    },
    #[error("declared unit does not act as identity on basis element {i}")]
    UnitViolation { i: usize },
    #[error("{0} must be unital")]
    NotUnital(&'static str),
    #[error("bimodule axiom '{axiom}' fails at {location}")]
    BimoduleAxiom { axiom: &'static str, location: String },
    #[error("the bimodule is zero")]
    ZeroModule,
    #[error("bimodule is not faithful as a {side} module; {} annihilates it", show(.witness))]
    NotFaithful { side: Side, witness: Vector },
    #[error("structural cross-check failed: {0}")]
    StructuralMismatch(String),
    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(Witness),
    #[error("enumeration of {count} elements exceeds the bound {bound}")]
    EnumerationTooLarge { count: u128, bound: u128 },
    #[error("brute-force enumeration needs a finite field")]
    InfiniteField,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}
