//! Assembly of `Trian(A, M, B)` and its Peirce data.
//!
//! The basis of the assembled algebra lists the basis of `A`, then `M`, then
//! `B`, so the projections are coordinate slices.

use crate::exactlin::{vector, Field, Matrix, Scalar, Vector};

use super::bimodule::Bimodule;
use super::error::{AlgebraError, Side};
use super::fd::{make_algebra, FdAlgebra};

/// Positions of basis elements as matrix units of a `size × size` matrix,
/// available for the matrix families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixUnits {
    pub size: usize,
    pub positions: Vec<(usize, usize)>,
}

impl MatrixUnits {
    pub fn to_matrix(&self, field: Field, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, self.size, self.size);
        for (c, &(i, j)) in x.iter().zip(&self.positions) {
            m.set(i, j, c.clone());
        }
        m
    }

    /// Coordinates of a matrix supported on the pattern.
    pub fn from_matrix(&self, m: &Matrix) -> Option<Vector> {
        let coords: Vector = self.positions.iter().map(|&(i, j)| m.get(i, j).clone()).collect();
        (self.to_matrix(m.field(), &coords) == *m).then_some(coords)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TriangularOptions {
    /// Reject bimodules that are not faithful on both sides.
    pub require_faithful: bool,
}

impl Default for TriangularOptions {
    fn default() -> Self {
        TriangularOptions { require_faithful: true }
    }
}

#[derive(Debug, Clone)]
pub struct TriangularAlgebra {
    a: FdAlgebra,
    m: Bimodule,
    b: FdAlgebra,
    t: FdAlgebra,
    p: Vector,
    q: Vector,
    faithful_left: bool,
    faithful_right: bool,
    matrix_units: Option<MatrixUnits>,
}

pub fn make_triangular(a: FdAlgebra, m: Bimodule, b: FdAlgebra) -> Result<TriangularAlgebra, AlgebraError> {
    make_triangular_with(a, m, b, TriangularOptions::default())
}

pub fn make_triangular_with(
    a: FdAlgebra,
    m: Bimodule,
    b: FdAlgebra,
    opts: TriangularOptions,
) -> Result<TriangularAlgebra, AlgebraError> {
    let field = a.field();
    let unit_a = a.unit().cloned().ok_or(AlgebraError::NotUnital("A"))?;
    let unit_b = b.unit().cloned().ok_or(AlgebraError::NotUnital("B"))?;
    if m.dim() == 0 {
        return Err(AlgebraError::ZeroModule);
    }
    let (da, dm, db) = (a.dim(), m.dim(), b.dim());
    if m.left_table().len() != da || m.right_table().first().map_or(0, Vec::len) != db {
        return Err(AlgebraError::Shape("bimodule does not match A and B".into()));
    }

    let left_ann = m.annihilator(Side::Left, da);
    let right_ann = m.annihilator(Side::Right, db);
    if opts.require_faithful {
        if let Some(w) = left_ann.basis().first() {
            return Err(AlgebraError::NotFaithful {
                side: Side::Left,
                witness: w.clone(),
            });
        }
        if let Some(w) = right_ann.basis().first() {
            return Err(AlgebraError::NotFaithful {
                side: Side::Right,
                witness: w.clone(),
            });
        }
    }

    let n = da + dm + db;
    let embed = |off: usize, v: &[Scalar]| -> Vector {
        let mut out = vector::zeros(field, n);
        out[off..off + v.len()].clone_from_slice(v);
        out
    };
    let mut table = vec![vec![vector::zeros(field, n); n]; n];
    for i in 0..da {
        for j in 0..da {
            table[i][j] = embed(0, &a.table()[i][j]);
        }
        for k in 0..dm {
            table[i][da + k] = embed(da, &m.left_table()[i][k]);
        }
    }
    for k in 0..dm {
        for j in 0..db {
            table[da + k][da + dm + j] = embed(da, &m.right_table()[k][j]);
        }
    }
    for i in 0..db {
        for j in 0..db {
            table[da + dm + i][da + dm + j] = embed(da + dm, &b.table()[i][j]);
        }
    }
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("A:{l}"))
        .chain(m.labels().iter().map(|l| format!("M:{l}")))
        .chain(b.labels().iter().map(|l| format!("B:{l}")))
        .collect();
    let p = embed(0, &unit_a);
    let q = embed(da + dm, &unit_b);
    let unit = vector::add(&p, &q);
    let t = make_algebra(field, labels, table, Some(unit), false)?;
    Ok(TriangularAlgebra {
        a,
        m,
        b,
        t,
        p,
        q,
        faithful_left: left_ann.is_zero(),
        faithful_right: right_ann.is_zero(),
        matrix_units: None,
    })
}

impl TriangularAlgebra {
    pub fn a(&self) -> &FdAlgebra {
        &self.a
    }

    pub fn m(&self) -> &Bimodule {
        &self.m
    }

    pub fn b(&self) -> &FdAlgebra {
        &self.b
    }

    /// The assembled algebra.
    pub fn algebra(&self) -> &FdAlgebra {
        &self.t
    }

    pub fn field(&self) -> Field {
        self.t.field()
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a.dim(), self.m.dim(), self.b.dim())
    }

    pub fn p(&self) -> &Vector {
        &self.p
    }

    pub fn q(&self) -> &Vector {
        &self.q
    }

    pub fn faithful(&self) -> (bool, bool) {
        (self.faithful_left, self.faithful_right)
    }

    /// Both `A` and `B` are declared to have only trivial idempotents.
    pub fn flags_hold(&self) -> bool {
        self.a.only_trivial_idempotents() && self.b.only_trivial_idempotents()
    }

    pub fn matrix_units(&self) -> Option<&MatrixUnits> {
        self.matrix_units.as_ref()
    }

    pub(crate) fn with_matrix_units(mut self, units: MatrixUnits, labels: Vec<String>) -> Self {
        assert_eq!(units.positions.len(), self.dim(), "matrix unit count mismatch");
        self.t = self.t.with_labels(labels);
        self.matrix_units = Some(units);
        self
    }

    pub fn embed(&self, a: &[Scalar], m: &[Scalar], b: &[Scalar]) -> Vector {
        let (da, dm, db) = self.dims();
        assert!(
            a.len() == da && m.len() == dm && b.len() == db,
            "component dimension mismatch"
        );
        vector::concat(&[a, m, b])
    }

    pub fn embed_a(&self, a: &[Scalar]) -> Vector {
        self.embed(a, &self.m.zero(), &self.b.zero())
    }

    pub fn embed_m(&self, m: &[Scalar]) -> Vector {
        self.embed(&self.a.zero(), m, &self.b.zero())
    }

    pub fn embed_b(&self, b: &[Scalar]) -> Vector {
        self.embed(&self.a.zero(), &self.m.zero(), b)
    }

    pub fn pi_a(&self, x: &[Scalar]) -> Vector {
        x[..self.a.dim()].to_vec()
    }

    pub fn pi_m(&self, x: &[Scalar]) -> Vector {
        let da = self.a.dim();
        x[da..da + self.m.dim()].to_vec()
    }

    pub fn pi_b(&self, x: &[Scalar]) -> Vector {
        x[self.a.dim() + self.m.dim()..].to_vec()
    }

    pub fn split(&self, x: &[Scalar]) -> (Vector, Vector, Vector) {
        (self.pi_a(x), self.pi_m(x), self.pi_b(x))
    }

    /// `(a, m, b)(a', m', b') = (aa', am' + mb', bb')` evaluated through the
    /// component operations rather than the assembled table.
    pub fn block_product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let (a, m, b) = self.split(x);
        let (a2, m2, b2) = self.split(y);
        let mm = vector::add(&self.m.act_left(&a, &m2), &self.m.act_right(&m, &b2));
        self.embed(&self.a.mul(&a, &a2), &mm, &self.b.mul(&b, &b2))
    }

    pub fn unit_a(&self) -> &Vector {
        self.a.unit().expect("A is unital by construction")
    }

    pub fn unit_b(&self) -> &Vector {
        self.b.unit().expect("B is unital by construction")
    }

    /// Diagonal sign element. With a matrix realization `signs` has one
    /// entry per row (`diag(s_1, …, s_n)`); otherwise it is `[s_A, s_B]`
    /// giving `(s_A·1_A, 0, s_B·1_B)`.
    pub fn diag_sign_element(&self, signs: &[i64]) -> Result<Vector, AlgebraError> {
        let field = self.field();
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(AlgebraError::InvalidParameters("signs must be ±1".into()));
        }
        match &self.matrix_units {
            Some(mu) => {
                if signs.len() != mu.size {
                    return Err(AlgebraError::InvalidParameters(format!(
                        "expected {} signs, got {}",
                        mu.size,
                        signs.len()
                    )));
                }
                let mut d = Matrix::zeros(field, mu.size, mu.size);
                for (i, &s) in signs.iter().enumerate() {
                    d.set(i, i, field.from_i64(s));
                }
                Ok(mu.from_matrix(&d).expect("diagonal lies in the pattern"))
            }
            None => {
                let [sa, sb] = signs else {
                    return Err(AlgebraError::InvalidParameters("expected two signs [s_A, s_B]".into()));
                };
                Ok(self.embed(
                    &vector::scale(&field.from_i64(*sa), self.unit_a()),
                    &self.m.zero(),
                    &vector::scale(&field.from_i64(*sb), self.unit_b()),
                ))
            }
        }
    }

    /// Short description such as `Trian(dimA=1, dimM=2, dimB=3)`.
    pub fn describe(&self) -> String {
        let (da, dm, db) = self.dims();
        format!("Trian(dimA={da}, dimM={dm}, dimB={db}) over {}", self.field())
    }
}
