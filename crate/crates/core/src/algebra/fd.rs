//! Finite-dimensional associative algebras given by structure constants.

use crate::exactlin::{vector, Echelon, Field, Matrix, Scalar, Subspace, Vector};

use super::error::AlgebraError;

/// A finite-dimensional associative algebra over an exact field.
///
/// `table[i][j]` holds the coordinates of `e_i e_j`. The unit is optional so
/// that non-unital fixtures can be expressed. `only_trivial_idempotents` is a
/// declared property, not a computed one (see
/// [`has_only_trivial_idempotents_bruteforce`](super::has_only_trivial_idempotents_bruteforce)
/// for the finite-field check).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FdAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
    unit: Option<Vector>,
    only_trivial_idempotents: bool,
}

/// Validates the table and builds the algebra.
pub fn make_algebra(
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
    unit: Option<Vector>,
    only_trivial_idempotents: bool,
) -> Result<FdAlgebra, AlgebraError> {
    let n = labels.len();
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::Shape(format!("structure table must be {n} x {n}")));
    }
    for (i, row) in table.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if v.len() != n {
                return Err(AlgebraError::Shape(format!(
                    "product e{i}e{j} has {} coordinates, expected {n}",
                    v.len()
                )));
            }
            if v.iter().any(|s| s.field() != field) {
                return Err(AlgebraError::Shape(format!(
                    "product e{i}e{j} has entries outside {field}"
                )));
            }
        }
    }
    if let Some(u) = &unit {
        if u.len() != n || u.iter().any(|s| s.field() != field) {
            return Err(AlgebraError::Shape("unit has wrong length or field".into()));
        }
    }
    let alg = FdAlgebra {
        field,
        labels,
        table,
        unit,
        only_trivial_idempotents,
    };
    alg.check_associative()?;
    alg.check_unit()?;
    Ok(alg)
}

impl FdAlgebra {
    fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let eij = &self.table[i][j];
                for k in 0..n {
                    let left = self.mul(eij, &self.basis_vector(k));
                    let right = self.mul(&self.basis_vector(i), &self.table[j][k]);
                    if left != right {
                        return Err(AlgebraError::AssociativityViolation { i, j, k, left, right });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<(), AlgebraError> {
        let Some(u) = &self.unit else {
            return Ok(());
        };
        for i in 0..self.dim() {
            let e = self.basis_vector(i);
            if self.mul(u, &e) != e || self.mul(&e, u) != e {
                return Err(AlgebraError::UnitViolation { i });
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<Vector>] {
        &self.table
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn only_trivial_idempotents(&self) -> bool {
        self.only_trivial_idempotents
    }

    /// Same algebra with a different declared idempotent flag.
    pub fn with_only_trivial_idempotents(mut self, flag: bool) -> Self {
        self.only_trivial_idempotents = flag;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim(), "label count mismatch");
        self.labels = labels;
        self
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        vector::zeros(self.field, self.dim())
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "element dimension mismatch");
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(xi * yj), &self.table[i][j]);
            }
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        vector::sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Matrix of `v ↦ x v`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `v ↦ v x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// `Z(A) = {z : z e_i = e_i z for all i}`.
    pub fn center(&self) -> Subspace {
        let id = Matrix::identity(self.field, self.dim());
        self.sigma_center(&id)
    }

    /// `Z_σ(A) = {λ : σ(e_i) λ = λ e_i for all i}` for a linear map `σ`
    /// given as a matrix.
    pub fn sigma_center(&self, sigma: &Matrix) -> Subspace {
        let n = self.dim();
        let mut e = Echelon::new(self.field, n);
        for i in 0..n {
            let s = sigma.column(i);
            let block = self
                .left_mul_matrix(&s)
                .sub(&self.right_mul_matrix(&self.basis_vector(i)));
            for r in 0..n {
                e.insert(block.row(r).to_vec());
            }
        }
        e.kernel()
    }

    /// `x` is invertible iff left multiplication by `x` is bijective in a
    /// unital finite-dimensional algebra; the inverse solves `x w = 1`.
    pub fn inverse(&self, x: &[Scalar]) -> Option<Vector> {
        let unit = self.unit.as_ref()?;
        let w = crate::exactlin::solve_linear(&self.left_mul_matrix(x), unit)?;
        (self.mul(&w, x) == *unit).then_some(w)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Elements `e` with `e x = x` for every `x`, if any exist.
    pub fn left_identity(&self) -> Option<Vector> {
        let n = self.dim();
        // e ↦ (e e_j)_j is linear in e; solve for (e e_j)_j = (e_j)_j.
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for j in 0..n {
            let r = self.right_mul_matrix(&self.basis_vector(j));
            for i in 0..n {
                rows.push(r.row(i).to_vec());
                rhs.push(if i == j { self.field.one() } else { self.field.zero() });
            }
        }
        let m = Matrix::from_rows(self.field, rows);
        crate::exactlin::solve_linear(&m, &rhs)
    }

    /// Human-readable form of an element, e.g. `2*e12 - e23`.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (c, l) in x.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(l.clone());
            } else {
                parts.push(format!("{c}*{l}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn field_as_one_dimensional_algebra() {
        let f = q();
        let a = make_algebra(
            f,
            vec!["1".into()],
            vec![vec![vec![f.one()]]],
            Some(vec![f.one()]),
            true,
        )
        .unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.center().dim(), 1);
    }

    #[test]
    fn non_associative_table_rejected() {
        // e1e1 = e2, e1e2 = e1, everything else 0:
        // (e1e1)e1 = e2e1 = 0 but e1(e1e1) = e1e2 = e1.
        let f = q();
        let v = |xs: &[i64]| vector::from_i64(f, xs);
        let table = vec![vec![v(&[0, 1]), v(&[1, 0])], vec![v(&[0, 0]), v(&[0, 0])]];
        let err = make_algebra(f, vec!["e1".into(), "e2".into()], table, None, false).unwrap_err();
        match err {
            AlgebraError::AssociativityViolation { i, j, k, left, right } => {
                assert_eq!((i, j, k), (0, 0, 0));
                assert_eq!(left, v(&[0, 0]));
                assert_eq!(right, v(&[1, 0]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_unit_rejected() {
        let f = q();
        let table = vec![vec![vec![f.one()]]];
        let err = make_algebra(f, vec!["1".into()], table, Some(vec![f.from_i64(2)]), true).unwrap_err();
        assert!(matches!(err, AlgebraError::UnitViolation { i: 0 }));
    }
}
