use crate::algebra::FdAlgebra;
use crate::exactlin::{vector, Field, Matrix, Scalar, Vector};

/// A linear self-map of an `n`-dimensional algebra, stored as the `n × n`
/// matrix whose column `j` is the image of basis element `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEndo {
    matrix: Matrix,
}

impl LinearEndo {
    /// Panics if `matrix` is not square.
    pub fn new(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "endomorphism matrix must be square");
        LinearEndo { matrix }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        LinearEndo::new(Matrix::identity(field, n))
    }

    pub fn zero(field: Field, n: usize) -> Self {
        LinearEndo::new(Matrix::zeros(field, n, n))
    }

    /// Column `j` of the result is `images[j]`.
    pub fn from_images(field: Field, images: &[Vector]) -> Self {
        LinearEndo::new(Matrix::from_columns(field, images.len(), images))
    }

    /// Tabulates `f` on the standard basis.
    pub fn from_fn(field: Field, n: usize, f: impl Fn(&Vector) -> Vector) -> Self {
        let images: Vec<Vector> = (0..n).map(|j| f(&vector::unit(field, n, j))).collect();
        LinearEndo::from_images(field, &images)
    }

    /// Inverse of [`LinearEndo::to_vector`].
    pub fn from_vector(field: Field, n: usize, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), n * n, "vectorized endomorphism has wrong length");
        let images: Vec<Vector> = coords.chunks(n).map(<[Scalar]>::to_vec).collect();
        LinearEndo::from_images(field, &images)
    }

    /// Column-major vectorization: entry `j * n + r` is coordinate `r` of the
    /// image of basis element `j`. This is the unknown ordering used by the
    /// constraint compiler.
    pub fn to_vector(&self) -> Vector {
        let mut out = Vec::with_capacity(self.dim() * self.dim());
        for j in 0..self.dim() {
            out.extend(self.matrix.column(j));
        }
        out
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    /// Image of basis element `j`.
    pub fn image(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearEndo) -> LinearEndo {
        LinearEndo::new(self.matrix.mul(&inner.matrix))
    }

    pub fn add(&self, other: &LinearEndo) -> LinearEndo {
        LinearEndo::new(self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &LinearEndo) -> LinearEndo {
        LinearEndo::new(self.matrix.sub(&other.matrix))
    }

    pub fn scale(&self, c: &Scalar) -> LinearEndo {
        LinearEndo::new(self.matrix.scale(c))
    }

    pub fn inverse(&self) -> Option<LinearEndo> {
        self.matrix.inverse().map(LinearEndo::new)
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.field(), self.dim())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `x ↦ u x u⁻¹`, or `None` if `u` is not a unit.
pub fn inner_automorphism(alg: &FdAlgebra, u: &[Scalar]) -> Option<LinearEndo> {
    let ui = alg.inverse(u)?;
    Some(LinearEndo::new(alg.left_mul_matrix(u).mul(&alg.right_mul_matrix(&ui))))
}
