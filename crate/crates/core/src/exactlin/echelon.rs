//! Incremental reduced row-echelon form.
//!
//! Rows are inserted one at a time and the stored basis is kept fully
//! reduced (pivot entries 1, zeros above and below every pivot) and sorted
//! by pivot column. Large constraint systems are fed through this without
//! ever materializing the full coefficient matrix.

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use super::vector::{self, Vector};

#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the stored pivots. Zero iff
    /// `v` lies in the row space.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -&r[p];
                vector::axpy(&mut r, &c, row);
            }
        }
        r
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut r = self.reduce(&v);
        let Some(p) = vector::leading_index(&r) else {
            return false;
        };
        let inv = r[p].inv();
        if !inv.is_one() {
            r = vector::scale(&inv, &r);
        }
        for row in &mut self.rows {
            if !row[p].is_zero() {
                let c = -&row[p];
                vector::axpy(row, &c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    /// Free (non-pivot) columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cols - self.rank());
        let mut it = self.pivots.iter().peekable();
        for c in 0..self.cols {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Null space of the stored rows, canonicalized.
    pub fn kernel(&self) -> Subspace {
        let free = self.free_columns();
        let mut vectors = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vector::unit(self.field, self.cols, f);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            vectors.push(v);
        }
        Subspace::span(self.field, self.cols, vectors)
    }

    /// The row space as a canonical subspace.
    pub fn into_subspace(self) -> Subspace {
        Subspace::from_reduced(self.field, self.cols, self.rows, self.pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_sorted() {
        let f = Field::Rational;
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(vector::from_i64(f, &[0, 2, 4])));
        assert!(e.insert(vector::from_i64(f, &[1, 1, 1])));
        assert!(!e.insert(vector::from_i64(f, &[2, 4, 6])));
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.rows()[0], vector::from_i64(f, &[1, 0, -1]));
        assert_eq!(e.rows()[1], vector::from_i64(f, &[0, 1, 2]));
        assert_eq!(e.free_columns(), vec![2]);
    }
}
