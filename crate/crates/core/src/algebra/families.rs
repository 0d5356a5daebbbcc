//! Builders for the standard algebra families and the two counterexample
//! fixtures.

use crate::exactlin::{vector, Field, Scalar, Vector};
use crate::maps::LinearEndo;

use super::bimodule::{make_bimodule, Bimodule};
use super::error::AlgebraError;
use super::fd::{make_algebra, FdAlgebra};
use super::triangular::{make_triangular, MatrixUnits, TriangularAlgebra};

fn unit_label(size: usize, i: usize, j: usize) -> String {
    if size < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{},{}", i + 1, j + 1)
    }
}

/// Subalgebra of `M_size(K)` spanned by the matrix units at `positions`.
/// The pattern must be closed under multiplication.
pub fn matrix_unit_algebra(
    field: Field,
    size: usize,
    positions: &[(usize, usize)],
    only_trivial_idempotents: bool,
) -> Result<FdAlgebra, AlgebraError> {
    let n = positions.len();
    let index = |p: (usize, usize)| positions.iter().position(|&q| q == p);
    let mut table = vec![vec![vector::zeros(field, n); n]; n];
    for (a, &(i, j)) in positions.iter().enumerate() {
        for (b, &(k, l)) in positions.iter().enumerate() {
            if j == k {
                let c = index((i, l)).ok_or_else(|| {
                    AlgebraError::InvalidParameters(format!("pattern not closed: e{i}{j} e{k}{l} leaves it"))
                })?;
                table[a][b][c] = field.one();
            }
        }
    }
    let diag: Vec<usize> = (0..size).filter_map(|i| index((i, i))).collect();
    let unit = (diag.len() == size).then(|| {
        let mut u = vector::zeros(field, n);
        for d in diag {
            u[d] = field.one();
        }
        u
    });
    let labels = positions.iter().map(|&(i, j)| unit_label(size, i, j)).collect();
    make_algebra(field, labels, table, unit, only_trivial_idempotents)
}

/// `M_n(K)`.
pub fn full_matrix(n: usize, field: Field) -> Result<FdAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameters("n must be positive".into()));
    }
    let pos: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_unit_algebra(field, n, &pos, n == 1)
}

/// `T_n(K)` as a plain algebra (not split as a triangular algebra).
pub fn upper_triangular_algebra(n: usize, field: Field) -> Result<FdAlgebra, AlgebraError> {
    block_pattern_algebra(&vec![1; n], field)
}

fn block_of(dims: &[usize]) -> Vec<usize> {
    dims.iter()
        .enumerate()
        .flat_map(|(b, &d)| std::iter::repeat_n(b, d))
        .collect()
}

/// `B_n^{dims}(K)` as a plain algebra.
pub fn block_pattern_algebra(dims: &[usize], field: Field) -> Result<FdAlgebra, AlgebraError> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(AlgebraError::InvalidParameters("block sizes must be positive".into()));
    }
    let blocks = block_of(dims);
    let n = blocks.len();
    let pos: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| blocks[i] <= blocks[j])
        .collect();
    matrix_unit_algebra(field, n, &pos, n == 1)
}

/// `B_n^{dims}(K)` split after the first `split_k` diagonal blocks as
/// `Trian(B_ℓ, M_{ℓ×(n−ℓ)}, B_{n−ℓ})` with `ℓ = d_1 + … + d_k`.
pub fn block_upper(dims: &[usize], split_k: usize, field: Field) -> Result<TriangularAlgebra, AlgebraError> {
    if dims.len() < 2 || dims.contains(&0) {
        return Err(AlgebraError::InvalidParameters(
            "need at least two positive block sizes".into(),
        ));
    }
    if split_k == 0 || split_k >= dims.len() {
        return Err(AlgebraError::InvalidParameters(format!(
            "split must lie in 1..={}",
            dims.len() - 1
        )));
    }
    let blocks = block_of(dims);
    let n = blocks.len();
    let ell: usize = dims[..split_k].iter().sum();

    let a_pos: Vec<_> = (0..ell)
        .flat_map(|i| (0..ell).map(move |j| (i, j)))
        .filter(|&(i, j)| blocks[i] <= blocks[j])
        .collect();
    let b_pos: Vec<_> = (ell..n)
        .flat_map(|i| (ell..n).map(move |j| (i, j)))
        .filter(|&(i, j)| blocks[i] <= blocks[j])
        .collect();
    let m_pos: Vec<_> = (0..ell).flat_map(|i| (ell..n).map(move |j| (i, j))).collect();

    let local_b: Vec<_> = b_pos.iter().map(|&(i, j)| (i - ell, j - ell)).collect();
    let a = matrix_unit_algebra(field, ell, &a_pos, ell == 1)?;
    let b = matrix_unit_algebra(field, n - ell, &local_b, n - ell == 1)?;

    let dm = m_pos.len();
    let m_index = |p: (usize, usize)| m_pos.iter().position(|&q| q == p).expect("M is full");
    let mut left = vec![vec![vector::zeros(field, dm); dm]; a_pos.len()];
    for (ai, &(i, j)) in a_pos.iter().enumerate() {
        for (mk, &(k, l)) in m_pos.iter().enumerate() {
            if j == k {
                left[ai][mk][m_index((i, l))] = field.one();
            }
        }
    }
    let mut right = vec![vec![vector::zeros(field, dm); b_pos.len()]; dm];
    for (mk, &(i, j)) in m_pos.iter().enumerate() {
        for (bj, &(k, l)) in b_pos.iter().enumerate() {
            if j == k {
                right[mk][bj][m_index((i, l))] = field.one();
            }
        }
    }
    let m_labels = m_pos.iter().map(|&(i, j)| unit_label(n, i, j)).collect();
    let m = make_bimodule(&a, &b, m_labels, left, right)?;
    let positions: Vec<_> = a_pos.iter().chain(&m_pos).chain(&b_pos).copied().collect();
    let labels = positions.iter().map(|&(i, j)| unit_label(n, i, j)).collect();
    Ok(make_triangular(a, m, b)?.with_matrix_units(MatrixUnits { size: n, positions }, labels))
}

/// `T_n(K) = Trian(T_ℓ, M_{ℓ×(n−ℓ)}, T_{n−ℓ})`.
pub fn upper_triangular_split(n: usize, ell: usize, field: Field) -> Result<TriangularAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::InvalidParameters("n must be at least 2".into()));
    }
    block_upper(&vec![1; n], ell, field)
}

/// `T_n(K)` with the split `ℓ = 1`.
pub fn upper_triangular(n: usize, field: Field) -> Result<TriangularAlgebra, AlgebraError> {
    upper_triangular_split(n, 1, field)
}

/// `K[x]/(x^N)`, basis `1, x, …, x^{N−1}`.
pub fn trunc_poly(n: usize, field: Field) -> Result<FdAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameters("N must be positive".into()));
    }
    let mut table = vec![vec![vector::zeros(field, n); n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            if i + j < n {
                v[i + j] = field.one();
            }
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    make_algebra(field, labels, table, Some(vector::unit(field, n, 0)), true)
}

/// `Trian(K[x]/(x^N), K[x]/(x^N), K[x]/(x^N))` with the regular bimodule.
pub fn trunc_poly_triangular(n: usize, field: Field) -> Result<TriangularAlgebra, AlgebraError> {
    let a = trunc_poly(n, field)?;
    let m = Bimodule::regular(&a)?;
    make_triangular(a.clone(), m, a)
}

/// Automorphism of `K[x]/(x^N)` sending `x ↦ −x`.
pub fn poly_negation(n: usize, field: Field) -> LinearEndo {
    let images: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = vector::zeros(field, n);
            v[i] = if i % 2 == 0 { field.one() } else { field.from_i64(-1) };
            v
        })
        .collect();
    LinearEndo::from_images(field, &images)
}

/// Strictly upper triangular 3×3 matrices with the sign automorphism and the
/// map that drops the corner entry.
#[derive(Debug, Clone)]
pub struct N3Fixture {
    pub algebra: FdAlgebra,
    /// Negates `e12` and `e23`, fixes `e13`.
    pub sigma: LinearEndo,
    /// `a e12 + b e13 + c e23 ↦ a e12 + c e23`.
    pub theta: LinearEndo,
}

pub fn fixture_n3(field: Field) -> Result<N3Fixture, AlgebraError> {
    let algebra = matrix_unit_algebra(field, 3, &[(0, 1), (0, 2), (1, 2)], false)?;
    let d = |xs: [i64; 3]| -> Vec<Scalar> { vector::from_i64(field, &xs) };
    let sigma = LinearEndo::from_images(field, &[d([-1, 0, 0]), d([0, 1, 0]), d([0, 0, -1])]);
    let theta = LinearEndo::from_images(field, &[d([1, 0, 0]), d([0, 0, 0]), d([0, 0, 1])]);
    Ok(N3Fixture { algebra, sigma, theta })
}

/// `Trian(A, A, 0)` for `A = K[x]/(x^N)`, realized as `A ⊕ A` with product
/// `(a, b)(c, d) = (ac, ad)`. Basis: `(x^i, 0)` for `i < N`, then `(0, x^i)`.
#[derive(Debug, Clone)]
pub struct TrianAa0Fixture {
    pub n: usize,
    pub algebra: FdAlgebra,
    /// `σ_A ⊕ σ_A` with `σ_A(x) = −x`.
    pub sigma: LinearEndo,
    /// `(a, b) ↦ (0, σ_A(a))`.
    pub d: LinearEndo,
    /// `(a, b) ↦ (a, σ_A(a) + b)`.
    pub big_d: LinearEndo,
}

impl TrianAa0Fixture {
    /// Element `(a, b)` from coefficient lists (padded with zeros).
    pub fn element(&self, a: &[i64], b: &[i64]) -> Vector {
        let f = self.algebra.field();
        let mut v = vector::zeros(f, 2 * self.n);
        for (i, &c) in a.iter().enumerate() {
            v[i] = f.from_i64(c);
        }
        for (i, &c) in b.iter().enumerate() {
            v[self.n + i] = f.from_i64(c);
        }
        v
    }

    /// Splits an element into its two `A`-components.
    pub fn components(&self, x: &[Scalar]) -> (Vector, Vector) {
        (x[..self.n].to_vec(), x[self.n..].to_vec())
    }
}

pub fn fixture_trian_aa0(n: usize, field: Field) -> Result<TrianAa0Fixture, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::InvalidParameters("N must be at least 2".into()));
    }
    let a = trunc_poly(n, field)?;
    let dim = 2 * n;
    let mut table = vec![vec![vector::zeros(field, dim); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            // (x^i, 0)(x^j, 0) = (x^{i+j}, 0); (x^i, 0)(0, x^j) = (0, x^{i+j})
            for (k, c) in a.table()[i][j].iter().enumerate() {
                table[i][j][k] = c.clone();
                table[i][n + j][n + k] = c.clone();
            }
        }
    }
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("a11:{l}"))
        .chain(a.labels().iter().map(|l| format!("a12:{l}")))
        .collect();
    let algebra = make_algebra(field, labels, table, None, false)?;

    let sa = poly_negation(n, field);
    let sigma = LinearEndo::from_fn(field, dim, |x| {
        vector::concat(&[&sa.apply(&x[..n]), &sa.apply(&x[n..])])
    });
    let d = LinearEndo::from_fn(field, dim, |x| {
        vector::concat(&[&vector::zeros(field, n), &sa.apply(&x[..n])])
    });
    let big_d = LinearEndo::from_fn(field, dim, |x| {
        vector::concat(&[&x[..n], &vector::add(&sa.apply(&x[..n]), &x[n..])])
    });
    Ok(TrianAa0Fixture {
        n,
        algebra,
        sigma,
        d,
        big_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_triangular_shapes() {
        let f = Field::Rational;
        let t2 = upper_triangular(2, f).unwrap();
        assert_eq!(t2.dims(), (1, 1, 1));
        assert_eq!(t2.algebra().labels(), &["e11", "e12", "e22"]);
        let t3 = upper_triangular(3, f).unwrap();
        assert_eq!(t3.dims(), (1, 2, 3));
        assert_eq!(t3.dim(), 6);
        let blk = block_upper(&[2, 1], 1, f).unwrap();
        assert_eq!(blk.dims(), (4, 2, 1));
        assert_eq!(blk.dim(), 7);
        assert!(!blk.a().only_trivial_idempotents());
        assert!(blk.b().only_trivial_idempotents());
    }

    #[test]
    fn invalid_parameters() {
        let f = Field::Rational;
        assert!(upper_triangular(1, f).is_err());
        assert!(block_upper(&[2, 1], 2, f).is_err());
        assert!(block_upper(&[3], 1, f).is_err());
        assert!(fixture_trian_aa0(1, f).is_err());
    }

    #[test]
    fn n3_fixture_maps() {
        let f = Field::Rational;
        let fx = fixture_n3(f).unwrap();
        assert!(!fx.algebra.is_unital());
        let x = vector::from_i64(f, &[2, 3, 5]);
        assert_eq!(fx.theta.apply(&x), vector::from_i64(f, &[2, 0, 5]));
        assert_eq!(fx.sigma.apply(&x), vector::from_i64(f, &[-2, 3, -5]));
        // e12 e23 = e13
        let p = fx.algebra.mul(&fx.algebra.basis_vector(0), &fx.algebra.basis_vector(2));
        assert_eq!(p, fx.algebra.basis_vector(1));
    }

    #[test]
    fn trian_aa0_product() {
        let f = Field::Rational;
        let fx = fixture_trian_aa0(4, f).unwrap();
        let a = fx.element(&[0, 1], &[0, 1]); // (x, x)
        let ab = fx.algebra.mul(&a, &a);
        assert_eq!(ab, fx.element(&[0, 0, 1], &[0, 0, 1]));
        let b = fx.element(&[0, 1], &[]);
        assert_eq!(fx.algebra.mul(&b, &a), fx.element(&[0, 0, 1], &[0, 0, 1]));
        assert_eq!(fx.algebra.mul(&fx.element(&[], &[1]), &a), fx.element(&[], &[]));
    }
}
