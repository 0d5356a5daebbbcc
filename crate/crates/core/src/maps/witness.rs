use std::fmt;

use crate::exactlin::{vector, Vector};

/// Why a map failed a predicate. Pair witnesses are the lexicographically
/// first failing basis pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The identity fails on `(e_i, e_j)`; `residual` is LHS − RHS.
    BasisPair {
        i: usize,
        j: usize,
        residual: Vector,
    },
    /// A quantified condition fails at `x` (derived from pair `(i, j)`);
    /// `value` is the offending expression at `x`.
    Element {
        i: usize,
        j: usize,
        x: Vector,
        value: Vector,
    },
    NotInvertible,
    UnitNotFixed {
        image: Vector,
    },
}

fn show(v: &[crate::exactlin::Scalar]) -> String {
    format!("({})", vector::to_strings(v).join(", "))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::BasisPair { i, j, residual } => {
                write!(f, "basis pair ({i}, {j}) leaves residual {}", show(residual))
            }
            Witness::Element { i, j, x, value } => {
                write!(f, "x = {} (from basis pair ({i}, {j})) gives {}", show(x), show(value))
            }
            Witness::NotInvertible => write!(f, "map is not invertible"),
            Witness::UnitNotFixed { image } => write!(f, "unit is sent to {}", show(image)),
        }
    }
}
