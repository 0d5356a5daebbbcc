//! σ-derivations, generalized σ-derivations and left multipliers.

use crate::algebra::TriangularAlgebra;
use crate::exactlin::{vector, Scalar, Vector};
use crate::maps::{is_generalized_pair, is_left_multiplier, is_sigma_derivation, LinearEndo};

use super::aut::{parts_for, AutParts};
use super::common::{block_endo, compare_maps, first_failure, from_blocks, Block, ConditionCheck, StructureError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerParts {
    pub d_a: LinearEndo,
    pub d_b: LinearEndo,
    pub m_d: Vector,
    pub xi: LinearEndo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParts {
    pub big_d_a: LinearEndo,
    pub big_d_b: LinearEndo,
    pub m_d: Vector,
    pub m_big_d: Vector,
    pub xi: LinearEndo,
    pub der: DerParts,
    /// `m_σ D_B(b) ≠ m_σ d_B(b)` for some basis `b`, i.e. the two published
    /// forms of the M-component disagree on this instance.
    pub display_form_differs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultParts {
    pub f_a: LinearEndo,
    pub f_b: LinearEndo,
    pub m_f: Vector,
}

fn hyp(what: &str, w: impl std::fmt::Display) -> StructureError {
    StructureError::HypothesisNotMet(format!("{what}: {w}"))
}

/// `(a, m, b) ↦ (d_A(a), f(a)m_d − m_d b − m_σ d_B(b) + ξ(m), d_B(b))`.
pub fn compose_sigma_derivation(t: &TriangularAlgebra, aut: &AutParts, p: &DerParts) -> LinearEndo {
    let mm = t.m();
    from_blocks(t, |a, m, b| {
        let dbb = p.d_b.apply(b);
        let mut x = mm.act_left(&aut.f_sigma.apply(a), &p.m_d);
        x = vector::sub(&x, &mm.act_right(&p.m_d, b));
        x = vector::sub(&x, &mm.act_right(&aut.m_sigma, &dbb));
        x = vector::add(&x, &p.xi.apply(m));
        t.embed(&p.d_a.apply(a), &x, &dbb)
    })
}

pub fn check_der_parts(t: &TriangularAlgebra, aut: &AutParts, p: &DerParts) -> Vec<ConditionCheck> {
    let (da, dm, db) = t.dims();
    let m = t.m();
    let xi_left = (0..da).flat_map(|i| {
        (0..dm).map(move |k| {
            let (a, mk) = (t.a().basis_vector(i), m.basis_vector(k));
            let lhs = p.xi.apply(&m.act_left(&a, &mk));
            let rhs = vector::add(
                &m.act_left(&p.d_a.apply(&a), &mk),
                &m.act_left(&aut.f_sigma.apply(&a), &p.xi.apply(&mk)),
            );
            (format!("a{i}, m{k}"), vector::sub(&lhs, &rhs))
        })
    });
    let xi_right = (0..dm).flat_map(|k| {
        (0..db).map(move |j| {
            let (mk, b) = (m.basis_vector(k), t.b().basis_vector(j));
            let lhs = p.xi.apply(&m.act_right(&mk, &b));
            let rhs = vector::add(
                &m.act_right(&p.xi.apply(&mk), &b),
                &m.act_right(&aut.nu_sigma.apply(&mk), &p.d_b.apply(&b)),
            );
            (format!("m{k}, b{j}"), vector::sub(&lhs, &rhs))
        })
    });
    vec![
        ConditionCheck::from_result(
            "d_A is an f_sigma-derivation",
            is_sigma_derivation(t.a(), &p.d_a, &aut.f_sigma).map_err(|w| w.to_string()),
        ),
        ConditionCheck::from_result(
            "d_B is a g_sigma-derivation",
            is_sigma_derivation(t.b(), &p.d_b, &aut.g_sigma).map_err(|w| w.to_string()),
        ),
        ConditionCheck::from_result(
            "d_A(1) = 0",
            first_failure([("1_A".to_string(), p.d_a.apply(t.unit_a()))]),
        ),
        ConditionCheck::from_result(
            "d_B(1) = 0",
            first_failure([("1_B".to_string(), p.d_b.apply(t.unit_b()))]),
        ),
        ConditionCheck::from_result("xi(am) = d_A(a)m + f(a)xi(m)", first_failure(xi_left)),
        ConditionCheck::from_result("xi(mb) = xi(m)b + nu(m)d_B(b)", first_failure(xi_right)),
    ]
}

fn extract_der(t: &TriangularAlgebra, d: &LinearEndo) -> DerParts {
    DerParts {
        d_a: block_endo(t, d, Block::A),
        d_b: block_endo(t, d, Block::B),
        m_d: t.pi_m(&d.apply(t.p())),
        xi: block_endo(t, d, Block::M),
    }
}

pub fn decompose_sigma_derivation(
    t: &TriangularAlgebra,
    sigma: &LinearEndo,
    d: &LinearEndo,
) -> Result<DerParts, StructureError> {
    let aut = parts_for(t, sigma)?;
    is_sigma_derivation(t.algebra(), d, sigma).map_err(|w| hyp("not a σ-derivation", w))?;
    let parts = extract_der(t, d);
    for c in check_der_parts(t, &aut, &parts) {
        c.into_result()?;
    }
    compare_maps("σ-derivation", d, &compose_sigma_derivation(t, &aut, &parts))?;
    Ok(parts)
}

/// `(a, m, b) ↦ (D_A(a), f(a)m_d + m_D b − m_σ d_B(b) + ξ(m) + D_A(1)m, D_B(b))`.
pub fn compose_generalized(t: &TriangularAlgebra, aut: &AutParts, p: &GenParts) -> LinearEndo {
    let mm = t.m();
    let da1 = p.big_d_a.apply(t.unit_a());
    from_blocks(t, |a, m, b| {
        let mut x = mm.act_left(&aut.f_sigma.apply(a), &p.m_d);
        x = vector::add(&x, &mm.act_right(&p.m_big_d, b));
        x = vector::sub(&x, &mm.act_right(&aut.m_sigma, &p.der.d_b.apply(b)));
        x = vector::add(&x, &p.xi.apply(m));
        x = vector::add(&x, &mm.act_left(&da1, m));
        t.embed(&p.big_d_a.apply(a), &x, &p.big_d_b.apply(b))
    })
}

pub fn check_gen_parts(t: &TriangularAlgebra, aut: &AutParts, p: &GenParts) -> Vec<ConditionCheck> {
    let mut out = check_der_parts(t, aut, &p.der);
    out.push(ConditionCheck::from_result(
        "D_A(aa') = D_A(a)a' + f(a)d_A(a')",
        is_generalized_pair(t.a(), &p.big_d_a, &p.der.d_a, &aut.f_sigma).map_err(|w| w.to_string()),
    ));
    out.push(ConditionCheck::from_result(
        "D_B(bb') = D_B(b)b' + g(b)d_B(b')",
        is_generalized_pair(t.b(), &p.big_d_b, &p.der.d_b, &aut.g_sigma).map_err(|w| w.to_string()),
    ));
    out
}

pub fn decompose_generalized(
    t: &TriangularAlgebra,
    sigma: &LinearEndo,
    big_d: &LinearEndo,
    d: &LinearEndo,
) -> Result<GenParts, StructureError> {
    let aut = parts_for(t, sigma)?;
    is_generalized_pair(t.algebra(), big_d, d, sigma).map_err(|w| hyp("not a generalized pair", w))?;
    let der = decompose_sigma_derivation(t, sigma, d)?;
    let big_d_b = block_endo(t, big_d, Block::B);
    let display_form_differs = (0..t.b().dim()).any(|j| {
        let b = t.b().basis_vector(j);
        let diff = vector::sub(&big_d_b.apply(&b), &der.d_b.apply(&b));
        !vector::is_zero(&t.m().act_right(&aut.m_sigma, &diff))
    });
    let parts = GenParts {
        big_d_a: block_endo(t, big_d, Block::A),
        big_d_b,
        m_d: der.m_d.clone(),
        m_big_d: t.pi_m(&big_d.apply(t.q())),
        xi: der.xi.clone(),
        der,
        display_form_differs,
    };
    for c in check_gen_parts(t, &aut, &parts) {
        c.into_result()?;
    }
    compare_maps("generalized σ-derivation", big_d, &compose_generalized(t, &aut, &parts))?;
    Ok(parts)
}

/// `(a, m, b) ↦ (F_A(a), m_F b + F_A(1)m, F_B(b))`.
pub fn compose_left_multiplier(t: &TriangularAlgebra, p: &MultParts) -> LinearEndo {
    let mm = t.m();
    let fa1 = p.f_a.apply(t.unit_a());
    from_blocks(t, |a, m, b: &[Scalar]| {
        let x = vector::add(&mm.act_right(&p.m_f, b), &mm.act_left(&fa1, m));
        t.embed(&p.f_a.apply(a), &x, &p.f_b.apply(b))
    })
}

pub fn decompose_left_multiplier(t: &TriangularAlgebra, f: &LinearEndo) -> Result<MultParts, StructureError> {
    is_left_multiplier(t.algebra(), f).map_err(|w| hyp("not a left multiplier", w))?;
    let parts = MultParts {
        f_a: block_endo(t, f, Block::A),
        f_b: block_endo(t, f, Block::B),
        m_f: t.pi_m(&f.apply(t.q())),
    };
    ConditionCheck::from_result(
        "F_A left multiplier",
        is_left_multiplier(t.a(), &parts.f_a).map_err(|w| w.to_string()),
    )
    .into_result()?;
    ConditionCheck::from_result(
        "F_B left multiplier",
        is_left_multiplier(t.b(), &parts.f_b).map_err(|w| w.to_string()),
    )
    .into_result()?;
    compare_maps("left multiplier", f, &compose_left_multiplier(t, &parts))?;
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::upper_triangular;
    use crate::exactlin::Field;

    #[test]
    fn inner_derivation_on_t2() {
        let f = Field::Rational;
        let t = upper_triangular(2, f).unwrap();
        let alg = t.algebra();
        let e12 = alg.basis_vector(1);
        let ad = LinearEndo::from_fn(f, 3, |x| alg.commutator(&e12, x));
        let id = LinearEndo::identity(f, 3);
        let p = decompose_sigma_derivation(&t, &id, &ad).unwrap();
        assert!(p.d_a.is_zero() && p.d_b.is_zero() && p.xi.is_zero());
        assert_eq!(p.m_d, vector::from_i64(f, &[-1]));
        let z = decompose_sigma_derivation(&t, &id, &LinearEndo::zero(f, 3)).unwrap();
        assert!(vector::is_zero(&z.m_d));
    }

    #[test]
    fn left_multiplication_parts() {
        let f = Field::Rational;
        let t = upper_triangular(2, f).unwrap();
        let alg = t.algebra();
        let x0 = vector::from_i64(f, &[2, 3, 5]);
        let lm = LinearEndo::new(alg.left_mul_matrix(&x0));
        let p = decompose_left_multiplier(&t, &lm).unwrap();
        assert_eq!(p.m_f, vector::from_i64(f, &[3]));
        assert_eq!(p.f_a.image(0), vector::from_i64(f, &[2]));
        assert_eq!(p.f_b.image(0), vector::from_i64(f, &[5]));
        let id = decompose_left_multiplier(&t, &LinearEndo::identity(f, 3)).unwrap();
        assert!(id.f_a.is_identity() && id.f_b.is_identity() && vector::is_zero(&id.m_f));
    }

    #[test]
    fn derivation_as_generalized() {
        let f = Field::Rational;
        let t = upper_triangular(2, f).unwrap();
        let alg = t.algebra();
        let e12 = alg.basis_vector(1);
        let ad = LinearEndo::from_fn(f, 3, |x| alg.commutator(&e12, x));
        let id = LinearEndo::identity(f, 3);
        let g = decompose_generalized(&t, &id, &ad, &ad).unwrap();
        assert!(!g.display_form_differs);
        assert_eq!(g.m_big_d, vector::neg(&g.m_d));
    }
}
