//! Subspaces of `K^n` in canonical reduced row-echelon form.
//!
//! Two subspaces are equal iff their canonical bases agree entry-wise, so the
//! derived `PartialEq` is subspace equality.

use super::echelon::Echelon;
use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use super::vector::{self, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| vector::unit(field, ambient_dim, i)).collect();
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors, canonicalized.
    pub fn span(field: Field, ambient_dim: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut e = Echelon::new(field, ambient_dim);
        for v in vectors {
            e.insert(v);
        }
        e.into_subspace()
    }

    pub(crate) fn from_reduced(field: Field, ambient_dim: usize, basis: Vec<Vector>, pivots: Vec<usize>) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Re-canonicalizes the stored basis. The identity on every value
    /// produced by this module.
    pub fn canonicalize(&self) -> Subspace {
        Subspace::span(self.field, self.ambient_dim, self.basis.iter().cloned())
    }

    /// `v` minus its projection along the canonical basis; zero iff `v` is in
    /// the subspace. Zero at every pivot column.
    pub fn residual(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim, "ambient dimension mismatch");
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                vector::axpy(&mut r, &c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.residual(v))
    }

    /// Coordinates of `v` with respect to the canonical basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Linear map `Q` with `Q v = 0` iff `v` lies in the subspace: the
    /// residual restricted to the non-pivot coordinates.
    pub fn complement_projection(&self) -> Matrix {
        let n = self.ambient_dim;
        let free: Vec<usize> = {
            let mut piv = self.pivots.iter().peekable();
            (0..n)
                .filter(|c| {
                    if piv.peek() == Some(&c) {
                        piv.next();
                        false
                    } else {
                        true
                    }
                })
                .collect()
        };
        // residual(e_c)[f] = δ_{cf} - Σ_p [c == p] basis_p[f]
        let mut q = Matrix::zeros(self.field, free.len(), n);
        for (row, &f) in free.iter().enumerate() {
            q.set(row, f, self.field.one());
            for (b, &p) in self.basis.iter().zip(&self.pivots) {
                if !b[f].is_zero() {
                    q.set(row, p, -&b[f]);
                }
            }
        }
        q
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient_dim);
        }
        let s = Matrix::from_columns(self.field, self.ambient_dim, &self.basis);
        let system = other.complement_projection().mul(&s);
        let coeffs = system.kernel();
        let vectors = coeffs.basis().iter().map(|c| s.mul_vec(c)).collect::<Vec<_>>();
        Subspace::span(self.field, self.ambient_dim, vectors)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        Subspace::span(
            self.field,
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim, "ambient dimension mismatch");
        Subspace::span(self.field, m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(|v| vector::to_strings(v)).collect()
    }
}

pub fn subspace_contains(s: &Subspace, v: &[Scalar]) -> bool {
    s.contains(v)
}

pub fn subspace_leq(s: &Subspace, t: &Subspace) -> bool {
    s.leq(t)
}

pub fn subspace_intersect(s: &Subspace, t: &Subspace) -> Subspace {
    s.intersect(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        vector::from_i64(Field::Rational, xs)
    }

    fn span(vs: &[&[i64]]) -> Subspace {
        Subspace::span(Field::Rational, vs[0].len(), vs.iter().map(|x| v(x)))
    }

    #[test]
    fn contains_leq_intersect_examples() {
        assert!(span(&[&[1, 0]]).contains(&v(&[2, 0])));
        assert!(span(&[&[1, 0]]).leq(&Subspace::full(Field::Rational, 2)));
        let i = span(&[&[1, 0], &[0, 1]]).intersect(&span(&[&[1, 1]]));
        assert_eq!(i, span(&[&[1, 1]]));
    }

    #[test]
    fn complement_projection_annihilates_exactly_the_subspace() {
        let s = span(&[&[1, 2, 0, 1], &[0, 0, 1, 3]]);
        let q = s.complement_projection();
        assert_eq!(q.rows(), 2);
        for b in s.basis() {
            assert!(vector::is_zero(&q.mul_vec(b)));
        }
        assert_eq!(q.kernel(), s);
    }

    #[test]
    fn coordinates_reconstruct() {
        let s = span(&[&[1, 2, 0], &[0, 1, 1]]);
        let x = v(&[2, 7, 3]);
        let c = s.coordinates(&x).unwrap();
        let mut acc = vector::zeros(Field::Rational, 3);
        for (ci, b) in c.iter().zip(s.basis()) {
            vector::axpy(&mut acc, ci, b);
        }
        assert_eq!(acc, x);
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
    }
}
