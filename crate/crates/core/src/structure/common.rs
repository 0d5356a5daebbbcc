use serde::Serialize;
use thiserror::Error;

use crate::algebra::TriangularAlgebra;
use crate::exactlin::{vector, Matrix, Scalar, Vector};
use crate::maps::LinearEndo;

fn show(v: &[Scalar]) -> String {
    format!("({})", vector::to_strings(v).join(", "))
}

#[derive(Debug, Clone, Error)]
pub enum StructureError {
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("reconstructed {what} differs on basis element {index}: expected {}, got {}", show(.expected), show(.got))]
    ReconstructionMismatch {
        what: &'static str,
        index: usize,
        expected: Vector,
        got: Vector,
    },
    #[error("condition {label} fails: {witness}")]
    ConditionFailure { label: String, witness: String },
    #[error("invalid parts: {0}")]
    InvalidParts(String),
}

/// One labelled side condition and its outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub label: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl ConditionCheck {
    pub(crate) fn from_result(label: &str, r: Result<(), String>) -> Self {
        ConditionCheck {
            label: label.to_string(),
            holds: r.is_ok(),
            witness: r.err(),
        }
    }

    pub(crate) fn into_result(self) -> Result<(), StructureError> {
        if self.holds {
            Ok(())
        } else {
            Err(StructureError::ConditionFailure {
                label: self.label,
                witness: self.witness.unwrap_or_default(),
            })
        }
    }
}

/// Returns the first failure of a family of vector identities, described by
/// the indices that produced it.
pub(crate) fn first_failure(cases: impl IntoIterator<Item = (String, Vector)>) -> Result<(), String> {
    for (at, v) in cases {
        if !vector::is_zero(&v) {
            return Err(format!("{at}: residual {}", show(&v)));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Block {
    A,
    M,
    B,
}

fn block_dim(t: &TriangularAlgebra, b: Block) -> usize {
    let (da, dm, db) = t.dims();
    match b {
        Block::A => da,
        Block::M => dm,
        Block::B => db,
    }
}

fn embed(t: &TriangularAlgebra, b: Block, x: &[Scalar]) -> Vector {
    match b {
        Block::A => t.embed_a(x),
        Block::M => t.embed_m(x),
        Block::B => t.embed_b(x),
    }
}

fn project(t: &TriangularAlgebra, b: Block, x: &[Scalar]) -> Vector {
    match b {
        Block::A => t.pi_a(x),
        Block::M => t.pi_m(x),
        Block::B => t.pi_b(x),
    }
}

/// Matrix of `π_to ∘ map ∘ ι_from`.
pub(crate) fn block_map(t: &TriangularAlgebra, map: &LinearEndo, from: Block, to: Block) -> Matrix {
    let field = t.field();
    let n = block_dim(t, from);
    let cols: Vec<Vector> = (0..n)
        .map(|k| project(t, to, &map.apply(&embed(t, from, &vector::unit(field, n, k)))))
        .collect();
    Matrix::from_columns(field, block_dim(t, to), &cols)
}

pub(crate) fn block_endo(t: &TriangularAlgebra, map: &LinearEndo, b: Block) -> LinearEndo {
    LinearEndo::new(block_map(t, map, b, b))
}

/// Compares two maps column by column.
pub(crate) fn compare_maps(what: &'static str, expected: &LinearEndo, got: &LinearEndo) -> Result<(), StructureError> {
    for j in 0..expected.dim() {
        let (e, g) = (expected.image(j), got.image(j));
        if e != g {
            return Err(StructureError::ReconstructionMismatch {
                what,
                index: j,
                expected: e,
                got: g,
            });
        }
    }
    Ok(())
}

/// Builds a map of `T` from a function of the components `(a, m, b)`.
pub(crate) fn from_blocks(t: &TriangularAlgebra, f: impl Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vector) -> LinearEndo {
    LinearEndo::from_fn(t.field(), t.dim(), |x| {
        let (a, m, b) = t.split(x);
        f(&a, &m, &b)
    })
}
