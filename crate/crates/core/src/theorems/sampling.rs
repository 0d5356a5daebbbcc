//! Seeded generators of automorphisms of a triangular algebra.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FdAlgebra, TriangularAlgebra};
use crate::exactlin::{vector, Field, Scalar, Vector};
use crate::maps::LinearEndo;
use crate::structure::{compose_automorphism, AutParts};

use super::TheoremError;

const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphismSource {
    /// Assembled from inner automorphisms of `A`, `B`, a scaled intertwiner
    /// and a random `m_σ`.
    Parts,
    /// Conjugation by a random invertible element of `T`.
    Conjugation,
}

impl fmt::Display for AutomorphismSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomorphismSource::Parts => f.write_str("parts"),
            AutomorphismSource::Conjugation => f.write_str("conjugation"),
        }
    }
}

/// Small integers in `[-3, 3]` over `Q`, uniform residues over `F_p`.
pub fn random_scalar(field: Field, rng: &mut impl Rng) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

fn random_vector(field: Field, n: usize, rng: &mut impl Rng) -> Vector {
    (0..n).map(|_| random_scalar(field, rng)).collect()
}

/// A random unit of a unital algebra together with its inverse.
pub fn random_invertible(alg: &FdAlgebra, rng: &mut impl Rng) -> Option<(Vector, Vector)> {
    for _ in 0..MAX_ATTEMPTS {
        let x = random_vector(alg.field(), alg.dim(), rng);
        if let Some(inv) = alg.inverse(&x) {
            return Some((x, inv));
        }
    }
    None
}

fn inner(alg: &FdAlgebra, u: &[Scalar], ui: &[Scalar]) -> LinearEndo {
    LinearEndo::from_fn(alg.field(), alg.dim(), |x| alg.mul(&alg.mul(u, x), ui))
}

fn no_unit(what: &str) -> TheoremError {
    TheoremError::HypothesisNotMet(format!("could not draw an invertible element of {what}"))
}

pub fn random_automorphism(
    t: &TriangularAlgebra,
    source: AutomorphismSource,
    rng: &mut impl Rng,
) -> Result<LinearEndo, TheoremError> {
    let field = t.field();
    match source {
        AutomorphismSource::Parts => {
            let (u, ui) = random_invertible(t.a(), rng).ok_or_else(|| no_unit("A"))?;
            let (v, vi) = random_invertible(t.b(), rng).ok_or_else(|| no_unit("B"))?;
            let c = loop {
                let c = random_scalar(field, rng);
                if !c.is_zero() {
                    break c;
                }
            };
            let m = t.m();
            let nu = LinearEndo::from_fn(field, m.dim(), |x| {
                vector::scale(&c, &m.act_left(&u, &m.act_right(x, &vi)))
            });
            let parts = AutParts {
                f_sigma: inner(t.a(), &u, &ui),
                g_sigma: inner(t.b(), &v, &vi),
                m_sigma: random_vector(field, m.dim(), rng),
                nu_sigma: nu,
            };
            Ok(compose_automorphism(t, &parts)?)
        }
        AutomorphismSource::Conjugation => {
            let (a, _) = random_invertible(t.a(), rng).ok_or_else(|| no_unit("A"))?;
            let (b, _) = random_invertible(t.b(), rng).ok_or_else(|| no_unit("B"))?;
            let x = t.embed(&a, &random_vector(field, t.m().dim(), rng), &b);
            let xi = t.algebra().inverse(&x).ok_or_else(|| no_unit("T"))?;
            Ok(inner(t.algebra(), &x, &xi))
        }
    }
}

/// `count` non-identity automorphisms, alternating between the two sources.
/// Identity draws are discarded.
pub(crate) fn sample_automorphisms(
    t: &TriangularAlgebra,
    count: usize,
    seed: u64,
) -> Result<Vec<(AutomorphismSource, LinearEndo)>, TheoremError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < MAX_ATTEMPTS {
        attempts += 1;
        let src = if out.len() % 2 == 0 {
            AutomorphismSource::Parts
        } else {
            AutomorphismSource::Conjugation
        };
        let sigma = random_automorphism(t, src, &mut rng)?;
        if !sigma.is_identity() {
            out.push((src, sigma));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::upper_triangular;
    use crate::maps::is_automorphism;

    #[test]
    fn samples_are_automorphisms_and_deterministic() {
        let t = upper_triangular(2, Field::prime(5).unwrap()).unwrap();
        let a = sample_automorphisms(&t, 12, 42).unwrap();
        let b = sample_automorphisms(&t, 12, 42).unwrap();
        assert_eq!(a, b);
        for (_, s) in &a {
            assert_eq!(is_automorphism(t.algebra(), s), Ok(()));
            assert!(!s.is_identity());
        }
    }
}
