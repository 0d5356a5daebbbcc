//! Compiles a defining identity into a homogeneous linear system in the
//! entries of the unknown map(s) and returns its kernel.
//!
//! Unknown layout: `Θ` is vectorized column-major, so unknown `j·n + r` is
//! coordinate `r` of `Θ(e_j)`. Generalized pairs use `2n²` unknowns, the
//! `D` block first and then `d`.

use crate::algebra::FdAlgebra;
use crate::exactlin::{Echelon, Field, Matrix, Scalar, Subspace, Vector};

use super::endo::LinearEndo;
use super::predicates::{is_automorphism, MapKind};
use super::MapsError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpace {
    pub kind: MapKind,
    /// The automorphism the space was solved for (identity for kinds that do
    /// not involve σ).
    pub sigma: LinearEndo,
    pub algebra_dim: usize,
    pub space: Subspace,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    fn n2(&self) -> usize {
        self.algebra_dim * self.algebra_dim
    }

    /// Basis maps. For pair spaces these are the `D` components.
    pub fn basis_endos(&self) -> Vec<LinearEndo> {
        self.space
            .basis()
            .iter()
            .map(|v| LinearEndo::from_vector(self.field(), self.algebra_dim, &v[..self.n2()]))
            .collect()
    }

    /// Basis `(D, d)` pairs of a generalized-pair space.
    pub fn basis_pairs(&self) -> Vec<(LinearEndo, LinearEndo)> {
        assert!(self.kind.is_pair(), "not a pair space");
        let (n, n2) = (self.algebra_dim, self.n2());
        self.space
            .basis()
            .iter()
            .map(|v| {
                (
                    LinearEndo::from_vector(self.field(), n, &v[..n2]),
                    LinearEndo::from_vector(self.field(), n, &v[n2..]),
                )
            })
            .collect()
    }

    pub fn contains(&self, theta: &LinearEndo) -> bool {
        assert!(!self.kind.is_pair(), "use contains_pair for pair spaces");
        self.space.contains(&theta.to_vector())
    }

    pub fn contains_pair(&self, big_d: &LinearEndo, d: &LinearEndo) -> bool {
        let mut v = big_d.to_vector();
        v.extend(d.to_vector());
        self.space.contains(&v)
    }

    /// Projection onto the first component (the `D`-space for pairs, the
    /// whole space otherwise).
    pub fn first_components(&self) -> Subspace {
        let n2 = self.n2();
        Subspace::span(self.field(), n2, self.space.basis().iter().map(|v| v[..n2].to_vec()))
    }
}

/// Accumulates the `n` rows contributed by one basis pair.
struct RowBlock {
    n: usize,
    rows: Matrix,
}

impl RowBlock {
    fn new(field: Field, n: usize, unknowns: usize) -> Self {
        RowBlock {
            n,
            rows: Matrix::zeros(field, n, unknowns),
        }
    }

    /// Adds `c · L` to the columns of unknown block `block` (a map image).
    fn add_block(&mut self, block: usize, c: &Scalar, l: &Matrix) {
        let off = block * self.n;
        for r in 0..self.n {
            for k in 0..self.n {
                let v = l.get(r, k);
                if !v.is_zero() {
                    let cur = self.rows.get(r, off + k).clone();
                    self.rows.set(r, off + k, cur + c * v);
                }
            }
        }
    }

    /// Adds `c · I` to unknown block `block`.
    fn add_identity(&mut self, block: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let off = block * self.n;
        for r in 0..self.n {
            let cur = self.rows.get(r, off + r).clone();
            self.rows.set(r, off + r, cur + c.clone());
        }
    }

    fn feed(self, proj: Option<&Matrix>, ech: &mut Echelon) {
        let rows = match proj {
            Some(q) => q.mul(&self.rows),
            None => self.rows,
        };
        for row in rows.row_vecs() {
            ech.insert(row);
        }
    }
}

/// Solves for the full space of maps of the given kind on `alg`.
pub fn solve_space(alg: &FdAlgebra, sigma: &LinearEndo, kind: MapKind) -> Result<MapSpace, MapsError> {
    let field = alg.field();
    let n = alg.dim();
    if sigma.dim() != n {
        return Err(MapsError::Shape(format!(
            "σ has dimension {} but the algebra has dimension {n}",
            sigma.dim()
        )));
    }
    let sigma = if kind.uses_sigma() {
        is_automorphism(alg, sigma).map_err(MapsError::NotAutomorphism)?;
        sigma.clone()
    } else {
        LinearEndo::identity(field, n)
    };
    let n2 = n * n;
    let unknowns = if kind.is_pair() { 2 * n2 } else { n2 };
    let one = field.one();
    let minus = -&one;

    let basis: Vec<Vector> = (0..n).map(|i| alg.basis_vector(i)).collect();
    let sig: Vec<Vector> = basis.iter().map(|e| sigma.apply(e)).collect();
    let left_sig: Vec<Matrix> = sig.iter().map(|s| alg.left_mul_matrix(s)).collect();
    let right: Vec<Matrix> = basis.iter().map(|e| alg.right_mul_matrix(e)).collect();

    let mut ech = Echelon::new(field, unknowns);

    // Leibniz-type identity Φ(e_i e_j) − Φ(e_i) e_j − σ(e_i) φ(e_j) = 0 where
    // Φ lives in unknown block group `big` and φ in `small` (None drops the
    // last term, as for left multipliers).
    let leibniz = |ech: &mut Echelon, big: usize, small: Option<usize>| {
        for i in 0..n {
            for j in 0..n {
                let mut blk = RowBlock::new(field, n, unknowns);
                for (k, c) in alg.table()[i][j].iter().enumerate() {
                    blk.add_identity(big * n + k, c);
                }
                blk.add_block(big * n + i, &minus, &right[j]);
                if let Some(s) = small {
                    blk.add_block(s * n + j, &minus, &left_sig[i]);
                }
                blk.feed(None, ech);
            }
        }
    };

    match kind {
        MapKind::Derivation | MapKind::SigmaDerivation => leibniz(&mut ech, 0, Some(0)),
        MapKind::LeftMultiplier => leibniz(&mut ech, 0, None),
        MapKind::GeneralizedPair => {
            leibniz(&mut ech, 0, Some(1));
            leibniz(&mut ech, 1, Some(1));
        }
        _ => {
            let mode = kind.predicate_mode().expect("predicate kind");
            let proj = mode.modulo_center().then(|| alg.center().complement_projection());
            let sign = if mode.is_skew() { one.clone() } else { minus.clone() };
            // op(x, z) = σ(x)z ± z x, linear in z: (L_{σx} ± R_x) z.
            let op: Vec<Matrix> = (0..n).map(|i| left_sig[i].add(&right[i].scale(&sign))).collect();
            for i in 0..n {
                for j in i..n {
                    let mut blk = RowBlock::new(field, n, unknowns);
                    blk.add_block(j, &one, &op[i]);
                    if i != j {
                        blk.add_block(i, &one, &op[j]);
                    }
                    blk.feed(proj.as_ref(), &mut ech);
                }
            }
        }
    }

    Ok(MapSpace {
        kind,
        sigma,
        algebra_dim: n,
        space: ech.kernel(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::upper_triangular;
    use crate::maps::{check_predicate, is_left_multiplier, is_sigma_derivation, PredicateMode};

    #[test]
    fn t2_dimensions() {
        let t = upper_triangular(2, Field::Rational).unwrap();
        let alg = t.algebra();
        let id = LinearEndo::identity(alg.field(), 3);
        let dim = |k| solve_space(alg, &id, k).unwrap().dim();
        assert_eq!(dim(MapKind::Derivation), 2);
        assert_eq!(dim(MapKind::LeftMultiplier), 3);
        assert_eq!(dim(MapKind::SkewCommuting), 0);
    }

    #[test]
    fn derivation_equals_id_sigma_derivation() {
        let t = upper_triangular(3, Field::Rational).unwrap();
        let alg = t.algebra();
        let id = LinearEndo::identity(alg.field(), alg.dim());
        let a = solve_space(alg, &id, MapKind::Derivation).unwrap();
        let b = solve_space(alg, &id, MapKind::SigmaDerivation).unwrap();
        assert_eq!(a.space, b.space);
    }

    #[test]
    fn solved_bases_satisfy_predicates() {
        let t = upper_triangular(2, Field::Rational).unwrap();
        let alg = t.algebra();
        let id = LinearEndo::identity(alg.field(), 3);
        for d in solve_space(alg, &id, MapKind::Derivation).unwrap().basis_endos() {
            assert_eq!(is_sigma_derivation(alg, &d, &id), Ok(()));
        }
        for f in solve_space(alg, &id, MapKind::LeftMultiplier).unwrap().basis_endos() {
            assert_eq!(is_left_multiplier(alg, &f), Ok(()));
        }
        for th in solve_space(alg, &id, MapKind::Centralizing).unwrap().basis_endos() {
            assert_eq!(check_predicate(alg, &th, &id, PredicateMode::Centralizing), Ok(()));
        }
    }
}
