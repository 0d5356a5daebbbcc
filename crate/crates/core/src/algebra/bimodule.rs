//! `(A, B)`-bimodules given by action tables on bases.

use crate::exactlin::{vector, Field, Matrix, Scalar, Subspace, Vector};

use super::error::{AlgebraError, Side};
use super::fd::FdAlgebra;

/// `left[i][k]` = coordinates of `e_i^A · m_k`, `right[k][j]` = coordinates
/// of `m_k · e_j^B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    field: Field,
    labels: Vec<String>,
    left: Vec<Vec<Vector>>,
    right: Vec<Vec<Vector>>,
}

pub fn make_bimodule(
    a: &FdAlgebra,
    b: &FdAlgebra,
    labels: Vec<String>,
    left: Vec<Vec<Vector>>,
    right: Vec<Vec<Vector>>,
) -> Result<Bimodule, AlgebraError> {
    let dm = labels.len();
    if dm == 0 {
        return Err(AlgebraError::ZeroModule);
    }
    let field = a.field();
    if b.field() != field {
        return Err(AlgebraError::Shape("A and B over different fields".into()));
    }
    let shape_ok = left.len() == a.dim()
        && left.iter().all(|r| r.len() == dm && r.iter().all(|v| v.len() == dm))
        && right.len() == dm
        && right
            .iter()
            .all(|r| r.len() == b.dim() && r.iter().all(|v| v.len() == dm));
    if !shape_ok {
        return Err(AlgebraError::Shape("action tables have the wrong shape".into()));
    }
    let m = Bimodule {
        field,
        labels,
        left,
        right,
    };
    m.check_axioms(a, b)?;
    Ok(m)
}

impl Bimodule {
    /// `A` as a bimodule over itself.
    pub fn regular(a: &FdAlgebra) -> Result<Bimodule, AlgebraError> {
        let n = a.dim();
        let left = (0..n)
            .map(|i| (0..n).map(|k| a.table()[i][k].clone()).collect())
            .collect();
        let right = (0..n)
            .map(|k| (0..n).map(|j| a.table()[k][j].clone()).collect())
            .collect();
        make_bimodule(a, a, a.labels().to_vec(), left, right)
    }

    fn check_axioms(&self, a: &FdAlgebra, b: &FdAlgebra) -> Result<(), AlgebraError> {
        let dm = self.dim();
        let fail = |axiom, location: String| Err(AlgebraError::BimoduleAxiom { axiom, location });
        for k in 0..dm {
            let mk = self.basis_vector(k);
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let lhs = self.act_left(&a.table()[i][j], &mk);
                    let rhs = self.act_left(&a.basis_vector(i), &self.left[j][k]);
                    if lhs != rhs {
                        return fail("(aa')m = a(a'm)", format!("a{i}, a{j}, m{k}"));
                    }
                }
            }
            for i in 0..b.dim() {
                for j in 0..b.dim() {
                    let lhs = self.act_right(&mk, &b.table()[i][j]);
                    let rhs = self.act_right(&self.right[k][i], &b.basis_vector(j));
                    if lhs != rhs {
                        return fail("m(bb') = (mb)b'", format!("m{k}, b{i}, b{j}"));
                    }
                }
            }
            for i in 0..a.dim() {
                for j in 0..b.dim() {
                    let lhs = self.act_right(&self.left[i][k], &b.basis_vector(j));
                    let rhs = self.act_left(&a.basis_vector(i), &self.right[k][j]);
                    if lhs != rhs {
                        return fail("(am)b = a(mb)", format!("a{i}, m{k}, b{j}"));
                    }
                }
            }
            if let Some(u) = a.unit() {
                if self.act_left(u, &mk) != mk {
                    return fail("1_A m = m", format!("m{k}"));
                }
            }
            if let Some(u) = b.unit() {
                if self.act_right(&mk, u) != mk {
                    return fail("m 1_B = m", format!("m{k}"));
                }
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

    pub fn left_table(&self) -> &[Vec<Vector>] {
        &self.left
    }

    pub fn right_table(&self) -> &[Vec<Vector>] {
        &self.right
    }

    pub fn basis_vector(&self, k: usize) -> Vector {
        vector::unit(self.field, self.dim(), k)
    }

    pub fn zero(&self) -> Vector {
        vector::zeros(self.field, self.dim())
    }

    /// `a · m`.
    pub fn act_left(&self, a: &[Scalar], m: &[Scalar]) -> Vector {
        assert_eq!(a.len(), self.left.len(), "A-element dimension mismatch");
        assert_eq!(m.len(), self.dim(), "M-element dimension mismatch");
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (k, mk) in m.iter().enumerate() {
                if !mk.is_zero() {
                    vector::axpy(&mut out, &(ai * mk), &self.left[i][k]);
                }
            }
        }
        out
    }

    /// `m · b`.
    pub fn act_right(&self, m: &[Scalar], b: &[Scalar]) -> Vector {
        assert_eq!(m.len(), self.dim(), "M-element dimension mismatch");
        let db = self.right.first().map_or(0, Vec::len);
        assert_eq!(b.len(), db, "B-element dimension mismatch");
        let mut out = self.zero();
        for (k, mk) in m.iter().enumerate() {
            if mk.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    vector::axpy(&mut out, &(mk * bj), &self.right[k][j]);
                }
            }
        }
        out
    }

    /// Matrix of `m ↦ a m` on `M`.
    pub fn left_action_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim())
            .map(|k| self.act_left(a, &self.basis_vector(k)))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `m ↦ m b` on `M`.
    pub fn right_action_matrix(&self, b: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim())
            .map(|k| self.act_right(&self.basis_vector(k), b))
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix (`dim M · dim M` × `dim A`) of `a ↦ (a m_k)_k`.
    pub fn left_regular_matrix(&self, dim_a: usize) -> Matrix {
        let dm = self.dim();
        let mut out = Matrix::zeros(self.field, dm * dm, dim_a);
        for i in 0..dim_a {
            for k in 0..dm {
                for (r, s) in self.left[i][k].iter().enumerate() {
                    out.set(k * dm + r, i, s.clone());
                }
            }
        }
        out
    }

    /// Matrix (`dim M · dim M` × `dim B`) of `b ↦ (m_k b)_k`.
    pub fn right_regular_matrix(&self) -> Matrix {
        let dm = self.dim();
        let db = self.right.first().map_or(0, Vec::len);
        let mut out = Matrix::zeros(self.field, dm * dm, db);
        for k in 0..dm {
            for j in 0..db {
                for (r, s) in self.right[k][j].iter().enumerate() {
                    out.set(k * dm + r, j, s.clone());
                }
            }
        }
        out
    }

    /// Elements of `A` (or `B`) annihilating all of `M` from the given side.
    pub fn annihilator(&self, side: Side, dim_a: usize) -> Subspace {
        match side {
            Side::Left => self.left_regular_matrix(dim_a).kernel(),
            Side::Right => self.right_regular_matrix().kernel(),
        }
    }
}
