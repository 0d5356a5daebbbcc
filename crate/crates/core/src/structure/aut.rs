use crate::algebra::TriangularAlgebra;
use crate::exactlin::{vector, Vector};
use crate::maps::{is_automorphism, LinearEndo};

use super::common::{block_endo, compare_maps, first_failure, from_blocks, Block, ConditionCheck, StructureError};

/// Component data `(f_σ, g_σ, m_σ, ν_σ)` of an automorphism of `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutParts {
    pub f_sigma: LinearEndo,
    pub g_sigma: LinearEndo,
    pub m_sigma: Vector,
    pub nu_sigma: LinearEndo,
}

impl AutParts {
    pub fn identity(t: &TriangularAlgebra) -> Self {
        let (da, dm, db) = t.dims();
        let f = t.field();
        AutParts {
            f_sigma: LinearEndo::identity(f, da),
            g_sigma: LinearEndo::identity(f, db),
            m_sigma: vector::zeros(f, dm),
            nu_sigma: LinearEndo::identity(f, dm),
        }
    }
}

/// `(a, m, b) ↦ (f(a), f(a)m_σ − m_σ g(b) + ν(m), g(b))` without any checks.
pub(crate) fn assemble(t: &TriangularAlgebra, p: &AutParts) -> LinearEndo {
    let m_mod = t.m();
    from_blocks(t, |a, m, b| {
        let fa = p.f_sigma.apply(a);
        let gb = p.g_sigma.apply(b);
        let mut mm = m_mod.act_left(&fa, &p.m_sigma);
        mm = vector::sub(&mm, &m_mod.act_right(&p.m_sigma, &gb));
        mm = vector::add(&mm, &p.nu_sigma.apply(m));
        t.embed(&fa, &mm, &gb)
    })
}

/// Side conditions on the parts: `f`, `g` automorphisms, `ν` bijective and
/// intertwining.
pub fn check_aut_parts(t: &TriangularAlgebra, p: &AutParts) -> Vec<ConditionCheck> {
    let (da, dm, db) = t.dims();
    let m = t.m();
    let nu_left = (0..da).flat_map(|i| {
        (0..dm).map(move |k| {
            let (a, mk) = (t.a().basis_vector(i), m.basis_vector(k));
            let lhs = p.nu_sigma.apply(&m.act_left(&a, &mk));
            let rhs = m.act_left(&p.f_sigma.apply(&a), &p.nu_sigma.apply(&mk));
            (format!("a{i}, m{k}"), vector::sub(&lhs, &rhs))
        })
    });
    let nu_right = (0..dm).flat_map(|k| {
        (0..db).map(move |j| {
            let (mk, b) = (m.basis_vector(k), t.b().basis_vector(j));
            let lhs = p.nu_sigma.apply(&m.act_right(&mk, &b));
            let rhs = m.act_right(&p.nu_sigma.apply(&mk), &p.g_sigma.apply(&b));
            (format!("m{k}, b{j}"), vector::sub(&lhs, &rhs))
        })
    });
    vec![
        ConditionCheck::from_result(
            "f_sigma automorphism",
            is_automorphism(t.a(), &p.f_sigma).map_err(|w| w.to_string()),
        ),
        ConditionCheck::from_result(
            "g_sigma automorphism",
            is_automorphism(t.b(), &p.g_sigma).map_err(|w| w.to_string()),
        ),
        ConditionCheck::from_result(
            "nu_sigma bijective",
            if p.nu_sigma.is_invertible() {
                Ok(())
            } else {
                Err("ν_σ is singular".into())
            },
        ),
        ConditionCheck::from_result("nu(am) = f(a)nu(m)", first_failure(nu_left)),
        ConditionCheck::from_result("nu(mb) = nu(m)g(b)", first_failure(nu_right)),
    ]
}

pub fn decompose_automorphism(t: &TriangularAlgebra, sigma: &LinearEndo) -> Result<AutParts, StructureError> {
    if !t.flags_hold() {
        return Err(StructureError::HypothesisNotMet(
            "A and B must have only trivial idempotents".into(),
        ));
    }
    is_automorphism(t.algebra(), sigma)
        .map_err(|w| StructureError::HypothesisNotMet(format!("σ is not an automorphism: {w}")))?;
    let parts = AutParts {
        f_sigma: block_endo(t, sigma, Block::A),
        g_sigma: block_endo(t, sigma, Block::B),
        m_sigma: t.pi_m(&sigma.apply(t.p())),
        nu_sigma: block_endo(t, sigma, Block::M),
    };
    for c in check_aut_parts(t, &parts) {
        c.into_result()?;
    }
    compare_maps("automorphism", sigma, &assemble(t, &parts))?;
    Ok(parts)
}

/// Inverse direction of the decomposition.
pub fn compose_automorphism(t: &TriangularAlgebra, parts: &AutParts) -> Result<LinearEndo, StructureError> {
    let (da, dm, db) = t.dims();
    if parts.f_sigma.dim() != da || parts.g_sigma.dim() != db || parts.nu_sigma.dim() != dm || parts.m_sigma.len() != dm
    {
        return Err(StructureError::InvalidParts(
            "component dimensions do not match T".into(),
        ));
    }
    for c in check_aut_parts(t, parts) {
        if !c.holds {
            return Err(StructureError::InvalidParts(format!(
                "{}: {}",
                c.label,
                c.witness.unwrap_or_default()
            )));
        }
    }
    let sigma = assemble(t, parts);
    is_automorphism(t.algebra(), &sigma)
        .map_err(|w| StructureError::InvalidParts(format!("assembled map is not an automorphism: {w}")))?;
    Ok(sigma)
}

/// Parts of σ for consumers: the identity needs no hypothesis, anything
/// else goes through [`decompose_automorphism`].
pub(crate) fn parts_for(t: &TriangularAlgebra, sigma: &LinearEndo) -> Result<AutParts, StructureError> {
    if sigma.is_identity() {
        Ok(AutParts::identity(t))
    } else {
        decompose_automorphism(t, sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::upper_triangular;
    use crate::exactlin::Field;

    fn conj_t2(t: &TriangularAlgebra, u: [i64; 3]) -> LinearEndo {
        let alg = t.algebra();
        let u = vector::from_i64(t.field(), &u);
        let ui = alg.inverse(&u).unwrap();
        LinearEndo::from_fn(t.field(), 3, |x| alg.mul(&alg.mul(&u, x), &ui))
    }

    #[test]
    fn t2_conjugations() {
        let f = Field::Rational;
        let t = upper_triangular(2, f).unwrap();
        let p = decompose_automorphism(&t, &conj_t2(&t, [1, 1, 1])).unwrap();
        assert!(p.f_sigma.is_identity() && p.g_sigma.is_identity() && p.nu_sigma.is_identity());
        assert_eq!(p.m_sigma, vector::from_i64(f, &[-1]));

        let p = decompose_automorphism(&t, &conj_t2(&t, [1, 0, -1])).unwrap();
        assert_eq!(p.m_sigma, vector::from_i64(f, &[0]));
        assert_eq!(p.nu_sigma, LinearEndo::identity(f, 1).scale(&f.from_i64(-1)));

        let id = decompose_automorphism(&t, &LinearEndo::identity(f, 3)).unwrap();
        assert_eq!(id, AutParts::identity(&t));
    }

    #[test]
    fn compose_examples() {
        let f = Field::Rational;
        let t = upper_triangular(2, f).unwrap();
        let id = compose_automorphism(&t, &AutParts::identity(&t)).unwrap();
        assert!(id.is_identity());
        let mut parts = AutParts::identity(&t);
        parts.m_sigma = vector::from_i64(f, &[1]);
        assert_eq!(compose_automorphism(&t, &parts).unwrap(), conj_t2(&t, [1, -1, 1]));
        parts.nu_sigma = LinearEndo::zero(f, 1);
        assert!(matches!(
            compose_automorphism(&t, &parts),
            Err(StructureError::InvalidParts(_))
        ));
    }

    #[test]
    fn flags_required() {
        let t = crate::algebra::block_upper(&[2, 1], 1, Field::Rational).unwrap();
        let id = LinearEndo::identity(t.field(), t.dim());
        assert!(matches!(
            decompose_automorphism(&t, &id),
            Err(StructureError::HypothesisNotMet(_))
        ));
        assert!(parts_for(&t, &id).is_ok());
    }
}
