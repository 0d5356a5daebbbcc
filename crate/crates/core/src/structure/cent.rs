//! σ-centralizing maps and their six component maps.

use crate::algebra::{FdAlgebra, TriangularAlgebra};
use crate::exactlin::{vector, Matrix, Scalar, Subspace, Vector};
use crate::maps::{bracket_sigma, check_predicate, LinearEndo, PredicateMode};

use super::aut::{parts_for, AutParts};
use super::common::{block_map, compare_maps, first_failure, from_blocks, Block, ConditionCheck, StructureError};

/// `δ₁: A→A, δ₂: M→A, δ₃: B→A, μ₁: A→B, μ₂: M→B, μ₃: B→B` as matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentParts {
    pub delta1: Matrix,
    pub delta2: Matrix,
    pub delta3: Matrix,
    pub mu1: Matrix,
    pub mu2: Matrix,
    pub mu3: Matrix,
}

pub const CONDITION_LABELS: [&str; 8] = ["(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)", "(viii)"];

impl CentParts {
    fn mu(&self, a: &[Scalar], m: &[Scalar], b: &[Scalar]) -> Vector {
        vector::add(
            &vector::add(&self.mu1.mul_vec(a), &self.mu2.mul_vec(m)),
            &self.mu3.mul_vec(b),
        )
    }

    fn delta(&self, a: &[Scalar], m: &[Scalar], b: &[Scalar]) -> Vector {
        vector::add(
            &vector::add(&self.delta1.mul_vec(a), &self.delta2.mul_vec(m)),
            &self.delta3.mul_vec(b),
        )
    }
}

/// M-component of the display:
/// `−m_σ(μ₁(a) + μ₂(m) + μ₃(b)) + δ₁(1)m − ν(m)μ₁(1)`.
fn display_m(t: &TriangularAlgebra, aut: &AutParts, p: &CentParts, a: &[Scalar], m: &[Scalar], b: &[Scalar]) -> Vector {
    let mm = t.m();
    let d1 = p.delta1.mul_vec(t.unit_a());
    let m1 = p.mu1.mul_vec(t.unit_a());
    let mut x = vector::neg(&mm.act_right(&aut.m_sigma, &p.mu(a, m, b)));
    x = vector::add(&x, &mm.act_left(&d1, m));
    vector::sub(&x, &mm.act_right(&aut.nu_sigma.apply(m), &m1))
}

pub fn compose_centralizing(t: &TriangularAlgebra, aut: &AutParts, p: &CentParts) -> LinearEndo {
    from_blocks(t, |a, m, b| {
        t.embed(&p.delta(a, m, b), &display_m(t, aut, p, a, m, b), &p.mu(a, m, b))
    })
}

fn basis(alg: &FdAlgebra) -> Vec<Vector> {
    (0..alg.dim()).map(|i| alg.basis_vector(i)).collect()
}

fn in_subspace(s: &Subspace, cases: impl IntoIterator<Item = (String, Vector)>) -> Result<(), String> {
    first_failure(cases.into_iter().map(|(at, v)| (at, s.residual(&v))))
}

/// Every side condition of the structure theorem, each reported separately.
/// Labels `(i)`–`(viii)` follow the theorem; the range conditions on `δ₂`,
/// `μ₂` and the M-component display are reported alongside.
pub fn check_cent_conditions(t: &TriangularAlgebra, aut: &AutParts, p: &CentParts) -> Vec<ConditionCheck> {
    let (a_alg, b_alg, mm) = (t.a(), t.b(), t.m());
    let (ab, bb) = (basis(a_alg), basis(b_alg));
    let mb: Vec<Vector> = (0..mm.dim()).map(|k| mm.basis_vector(k)).collect();
    let (f, g, nu) = (&aut.f_sigma, &aut.g_sigma, &aut.nu_sigma);
    let (one_a, one_b) = (t.unit_a(), t.unit_b());
    let d1 = LinearEndo::new(p.delta1.clone());
    let m3 = LinearEndo::new(p.mu3.clone());
    let d1_1 = p.delta1.mul_vec(one_a);
    let m1_1 = p.mu1.mul_vec(one_a);
    let m3_1 = p.mu3.mul_vec(one_b);
    let d3_1 = p.delta3.mul_vec(one_b);
    // δ₁(1)m − ν(m)μ₁(1)
    let c_a = |m: &[Scalar]| vector::sub(&mm.act_left(&d1_1, m), &mm.act_right(&nu.apply(m), &m1_1));
    // ν(m)μ₃(1) − δ₃(1)m
    let c_b = |m: &[Scalar]| vector::sub(&mm.act_right(&nu.apply(m), &m3_1), &mm.act_left(&d3_1, m));

    let cond_iii = first_failure(ab.iter().enumerate().flat_map(|(i, a)| {
        mb.iter().enumerate().map(move |(k, m)| {
            let lhs = vector::sub(
                &mm.act_left(&p.delta1.mul_vec(a), m),
                &mm.act_right(&nu.apply(m), &p.mu1.mul_vec(a)),
            );
            let rhs = mm.act_left(&f.apply(a), &c_a(m));
            (format!("a{i}, m{k}"), vector::sub(&lhs, &rhs))
        })
    }));
    let cond_iv = first_failure(bb.iter().enumerate().flat_map(|(j, b)| {
        mb.iter().enumerate().map(move |(k, m)| {
            let lhs = vector::sub(
                &mm.act_right(&nu.apply(m), &p.mu3.mul_vec(b)),
                &mm.act_left(&p.delta3.mul_vec(b), m),
            );
            let rhs = mm.act_right(&c_b(m), b);
            (format!("b{j}, m{k}"), vector::sub(&lhs, &rhs))
        })
    }));
    // δ₂(m)m = ν(m)μ₂(m) is quadratic in m; check its polarization.
    let q_v = |m: &[Scalar], m2: &[Scalar]| {
        vector::sub(
            &mm.act_left(&p.delta2.mul_vec(m), m2),
            &mm.act_right(&nu.apply(m2), &p.mu2.mul_vec(m)),
        )
    };
    let cond_v = first_failure((0..mb.len()).flat_map(|k| {
        let mb = &mb;
        (k..mb.len()).map(move |l| {
            let v = if k == l {
                q_v(&mb[k], &mb[k])
            } else {
                vector::add(&q_v(&mb[k], &mb[l]), &q_v(&mb[l], &mb[k]))
            };
            (format!("m{k}, m{l}"), v)
        })
    }));
    let cond_vi = first_failure(
        mb.iter()
            .enumerate()
            .map(|(k, m)| (format!("m{k}"), vector::sub(&c_a(m), &c_b(m)))),
    );
    let za = a_alg.center();
    let zb = b_alg.center();
    let cond_vii = in_subspace(
        &za,
        ab.iter().enumerate().flat_map(|(i, a)| {
            bb.iter()
                .enumerate()
                .map(move |(j, b)| (format!("a{i}, b{j}"), bracket_sigma(a_alg, f, a, &p.delta3.mul_vec(b))))
        }),
    );
    let cond_viii = in_subspace(
        &zb,
        bb.iter().enumerate().flat_map(|(j, b)| {
            ab.iter()
                .enumerate()
                .map(move |(i, a)| (format!("b{j}, a{i}"), bracket_sigma(b_alg, g, b, &p.mu1.mul_vec(a))))
        }),
    );
    let zfa = a_alg.sigma_center(f.matrix());
    let zgb = b_alg.sigma_center(g.matrix());
    let delta2_range = in_subspace(
        &zfa,
        mb.iter()
            .enumerate()
            .map(|(k, m)| (format!("m{k}"), p.delta2.mul_vec(m))),
    );
    let mu2_range = in_subspace(
        &zgb,
        mb.iter().enumerate().map(|(k, m)| (format!("m{k}"), p.mu2.mul_vec(m))),
    );

    vec![
        ConditionCheck::from_result(
            "(i)",
            check_predicate(a_alg, &d1, f, PredicateMode::Commuting).map_err(|w| w.to_string()),
        ),
        ConditionCheck::from_result(
            "(ii)",
            check_predicate(b_alg, &m3, g, PredicateMode::Commuting).map_err(|w| w.to_string()),
        ),
        ConditionCheck::from_result("(iii)", cond_iii),
        ConditionCheck::from_result("(iv)", cond_iv),
        ConditionCheck::from_result("(v)", cond_v),
        ConditionCheck::from_result("(vi)", cond_vi),
        ConditionCheck::from_result("(vii)", cond_vii),
        ConditionCheck::from_result("(viii)", cond_viii),
        ConditionCheck::from_result("delta2 into Z_f(A)", delta2_range),
        ConditionCheck::from_result("mu2 into Z_g(B)", mu2_range),
    ]
}

/// Decomposition together with the full list of condition outcomes.
#[derive(Debug, Clone)]
pub struct CentDecomposition {
    pub parts: CentParts,
    pub aut: AutParts,
    pub conditions: Vec<ConditionCheck>,
}

fn extract(t: &TriangularAlgebra, theta: &LinearEndo) -> CentParts {
    CentParts {
        delta1: block_map(t, theta, Block::A, Block::A),
        delta2: block_map(t, theta, Block::M, Block::A),
        delta3: block_map(t, theta, Block::B, Block::A),
        mu1: block_map(t, theta, Block::A, Block::B),
        mu2: block_map(t, theta, Block::M, Block::B),
        mu3: block_map(t, theta, Block::B, Block::B),
    }
}

pub fn decompose_centralizing(
    t: &TriangularAlgebra,
    sigma: &LinearEndo,
    theta: &LinearEndo,
) -> Result<CentDecomposition, StructureError> {
    let aut = parts_for(t, sigma)?;
    check_predicate(t.algebra(), theta, sigma, PredicateMode::Centralizing)
        .map_err(|w| StructureError::HypothesisNotMet(format!("not σ-centralizing: {w}")))?;
    let parts = extract(t, theta);
    let mut conditions = check_cent_conditions(t, &aut, &parts);
    let display = first_failure((0..t.dim()).map(|j| {
        let x = t.algebra().basis_vector(j);
        let (a, m, b) = t.split(&x);
        let v = vector::sub(&t.pi_m(&theta.apply(&x)), &display_m(t, &aut, &parts, &a, &m, &b));
        (format!("e{j}"), v)
    }));
    conditions.push(ConditionCheck::from_result("display", display));
    for c in &conditions {
        c.clone().into_result()?;
    }
    compare_maps("σ-centralizing map", theta, &compose_centralizing(t, &aut, &parts))?;
    Ok(CentDecomposition { parts, aut, conditions })
}

/// `δ₃(B) ⊆ Z_f(A)` and `μ₁(A) ⊆ Z_g(B)`.
pub fn commuting_criterion(t: &TriangularAlgebra, aut: &AutParts, p: &CentParts) -> bool {
    let zfa = t.a().sigma_center(aut.f_sigma.matrix());
    let zgb = t.b().sigma_center(aut.g_sigma.matrix());
    p.delta3.columns().iter().all(|c| zfa.contains(c)) && p.mu1.columns().iter().all(|c| zgb.contains(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::upper_triangular;
    use crate::exactlin::Field;

    #[test]
    fn identity_map() {
        let f = Field::Rational;
        let t = upper_triangular(2, f).unwrap();
        let id = LinearEndo::identity(f, 3);
        let dec = decompose_centralizing(&t, &id, &id).unwrap();
        assert!(dec.parts.delta1 == Matrix::identity(f, 1) && dec.parts.mu3 == Matrix::identity(f, 1));
        assert!(dec.parts.delta2.is_zero() && dec.parts.mu1.is_zero());
        assert_eq!(dec.conditions.len(), 11);
        assert!(dec.conditions.iter().all(|c| c.holds));
        assert!(commuting_criterion(&t, &dec.aut, &dec.parts));
    }

    #[test]
    fn central_multiple() {
        let f = Field::Rational;
        let t = upper_triangular(3, f).unwrap();
        let z = vector::scale(&f.from_i64(7), t.algebra().unit().unwrap());
        let th = LinearEndo::new(t.algebra().left_mul_matrix(&z));
        let id = LinearEndo::identity(f, t.dim());
        assert!(decompose_centralizing(&t, &id, &th).is_ok());
    }
}
