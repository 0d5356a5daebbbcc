//! Centers and σ-centers of triangular algebras.
//!
//! Both are computed twice: once as the kernel of the defining commutation
//! constraints over the whole algebra, once from the block description
//! (`(a, 0, b)` with `am = mb`, resp. `(a, -m_σ b, b)` with `am = ν_σ(m) b`).
//! The two results must be the same canonical subspace.

use crate::exactlin::{solve_linear, vector, Matrix, Subspace, Vector};
use crate::maps::{is_automorphism, LinearEndo};
use crate::structure::{decompose_automorphism, AutParts};

use super::error::AlgebraError;
use super::triangular::TriangularAlgebra;

#[derive(Debug, Clone)]
pub struct CenterData {
    pub center: Subspace,
    pub pi_a_center: Subspace,
    pub pi_b_center: Subspace,
    /// Column `i` is `τ(a_i)` for the `i`-th canonical basis vector `a_i` of
    /// `π_A(Z(T))`.
    pub tau: Matrix,
}

#[derive(Debug, Clone)]
pub struct SigmaCenterData {
    pub sigma_center: Subspace,
    pub pi_a: Subspace,
    pub pi_b: Subspace,
    /// Column `i` is `η(b_i)` for the `i`-th canonical basis vector of
    /// `π_B(Z_σ(T))`. Present only when `σ` could be decomposed.
    pub eta: Option<Matrix>,
    /// The block-form cross-check ran (needs the idempotent flags).
    pub structural_checked: bool,
}

/// Projects a subspace of `T` onto a block.
fn project(
    t: &TriangularAlgebra,
    s: &Subspace,
    f: impl Fn(&TriangularAlgebra, &Vector) -> Vector,
    dim: usize,
) -> Subspace {
    Subspace::span(t.field(), dim, s.basis().iter().map(|v| f(t, v)))
}

/// Stacked matrix of `(a, b) ↦ (a m_k − ν(m_k) b)_k` on `A ⊕ B` coordinates.
fn block_center_system(t: &TriangularAlgebra, nu: &LinearEndo) -> Matrix {
    let (da, dm, db) = t.dims();
    let m = t.m();
    let mut out = Matrix::zeros(t.field(), dm * dm, da + db);
    for k in 0..dm {
        let mk = m.basis_vector(k);
        let nk = nu.apply(&mk);
        for i in 0..da {
            let v = m.act_left(&t.a().basis_vector(i), &mk);
            for (r, s) in v.into_iter().enumerate() {
                out.set(k * dm + r, i, s);
            }
        }
        for j in 0..db {
            let v = m.act_right(&nk, &t.b().basis_vector(j));
            for (r, s) in v.into_iter().enumerate() {
                out.set(k * dm + r, da + j, -&s);
            }
        }
    }
    out
}

pub fn center(t: &TriangularAlgebra) -> Result<CenterData, AlgebraError> {
    let field = t.field();
    let (da, dm, db) = t.dims();
    let oracle = t.algebra().center();

    let id_m = LinearEndo::identity(field, dm);
    let pairs = block_center_system(t, &id_m).kernel();
    let structural = Subspace::span(
        field,
        t.dim(),
        pairs
            .basis()
            .iter()
            .map(|ab| t.embed(&ab[..da], &t.m().zero(), &ab[da..])),
    );
    if structural != oracle {
        return Err(AlgebraError::StructuralMismatch(format!(
            "center: commutator kernel has dim {}, block form has dim {}",
            oracle.dim(),
            structural.dim()
        )));
    }

    let pi_a_center = project(t, &oracle, |t, v| t.pi_a(v), da);
    let pi_b_center = project(t, &oracle, |t, v| t.pi_b(v), db);

    // τ(a): the unique b with m b = a m for all m.
    let right = t.m().right_regular_matrix();
    let mut images = Vec::with_capacity(pi_a_center.dim());
    for a in pi_a_center.basis() {
        let rhs: Vector = (0..dm)
            .flat_map(|k| t.m().act_left(a, &t.m().basis_vector(k)))
            .collect();
        let b = solve_linear(&right, &rhs)
            .ok_or_else(|| AlgebraError::StructuralMismatch("no b with am = mb for a central a".into()))?;
        images.push(b);
    }
    let tau = Matrix::from_columns(field, db, &images);
    Ok(CenterData {
        center: oracle,
        pi_a_center,
        pi_b_center,
        tau,
    })
}

pub fn sigma_center(t: &TriangularAlgebra, sigma: &LinearEndo) -> Result<SigmaCenterData, AlgebraError> {
    is_automorphism(t.algebra(), sigma).map_err(AlgebraError::NotAutomorphism)?;
    let field = t.field();
    let (da, dm, db) = t.dims();
    let oracle = t.algebra().sigma_center(sigma.matrix());
    let pi_a = project(t, &oracle, |t, v| t.pi_a(v), da);
    let pi_b = project(t, &oracle, |t, v| t.pi_b(v), db);

    let parts: Option<AutParts> = if sigma.is_identity() {
        Some(AutParts::identity(t))
    } else if t.flags_hold() {
        Some(decompose_automorphism(t, sigma).map_err(|e| AlgebraError::StructuralMismatch(e.to_string()))?)
    } else {
        None
    };

    let Some(parts) = parts else {
        return Ok(SigmaCenterData {
            sigma_center: oracle,
            pi_a,
            pi_b,
            eta: None,
            structural_checked: false,
        });
    };

    let pairs = block_center_system(t, &parts.nu_sigma).kernel();
    let structural = Subspace::span(
        field,
        t.dim(),
        pairs.basis().iter().map(|ab| {
            let b = &ab[da..];
            let m = vector::neg(&t.m().act_right(&parts.m_sigma, b));
            t.embed(&ab[..da], &m, b)
        }),
    );
    if structural != oracle {
        return Err(AlgebraError::StructuralMismatch(format!(
            "σ-center: kernel has dim {}, block form has dim {}",
            oracle.dim(),
            structural.dim()
        )));
    }

    // η(b): the unique a with a m = ν(m) b for all m.
    let left = t.m().left_regular_matrix(da);
    let mut images = Vec::with_capacity(pi_b.dim());
    for b in pi_b.basis() {
        let rhs: Vector = (0..dm)
            .flat_map(|k| {
                let nk = parts.nu_sigma.apply(&t.m().basis_vector(k));
                t.m().act_right(&nk, b)
            })
            .collect();
        let a =
            solve_linear(&left, &rhs).ok_or_else(|| AlgebraError::StructuralMismatch("no a with am = ν(m)b".into()))?;
        images.push(a);
    }
    Ok(SigmaCenterData {
        sigma_center: oracle,
        pi_a,
        pi_b,
        eta: Some(Matrix::from_columns(field, da, &images)),
        structural_checked: true,
    })
}
