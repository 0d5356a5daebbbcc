//! Pointwise checks of the defining identities on basis pairs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::FdAlgebra;
use crate::exactlin::{vector, Matrix, Scalar, Vector};

use super::endo::LinearEndo;
use super::witness::Witness;

/// `σ(x)y − yx`.
pub fn bracket_sigma(alg: &FdAlgebra, sigma: &LinearEndo, x: &[Scalar], y: &[Scalar]) -> Vector {
    vector::sub(&alg.mul(&sigma.apply(x), y), &alg.mul(y, x))
}

/// `σ(x)y + yx`.
pub fn abracket_sigma(alg: &FdAlgebra, sigma: &LinearEndo, x: &[Scalar], y: &[Scalar]) -> Vector {
    vector::add(&alg.mul(&sigma.apply(x), y), &alg.mul(y, x))
}

/// First basis pair `(i, j)` in lexicographic order with nonzero residual.
fn first_pair(n: usize, residual: impl Fn(usize, usize) -> Vector) -> Result<(), Witness> {
    for i in 0..n {
        for j in 0..n {
            let r = residual(i, j);
            if !vector::is_zero(&r) {
                return Err(Witness::BasisPair { i, j, residual: r });
            }
        }
    }
    Ok(())
}

fn check_dims(alg: &FdAlgebra, maps: &[&LinearEndo]) {
    for m in maps {
        assert_eq!(m.dim(), alg.dim(), "map dimension does not match the algebra");
    }
}

/// Multiplicative on basis pairs, invertible, and unit-preserving when the
/// algebra is unital.
pub fn is_automorphism(alg: &FdAlgebra, theta: &LinearEndo) -> Result<(), Witness> {
    check_dims(alg, &[theta]);
    first_pair(alg.dim(), |i, j| {
        let (ei, ej) = (alg.basis_vector(i), alg.basis_vector(j));
        vector::sub(
            &theta.apply(&alg.mul(&ei, &ej)),
            &alg.mul(&theta.apply(&ei), &theta.apply(&ej)),
        )
    })?;
    if !theta.is_invertible() {
        return Err(Witness::NotInvertible);
    }
    if let Some(u) = alg.unit() {
        let image = theta.apply(u);
        if &image != u {
            return Err(Witness::UnitNotFixed { image });
        }
    }
    Ok(())
}

/// `d(xy) = d(x)y + σ(x)d(y)` on all basis pairs.
pub fn is_sigma_derivation(alg: &FdAlgebra, d: &LinearEndo, sigma: &LinearEndo) -> Result<(), Witness> {
    is_generalized_identity(alg, d, d, sigma)
}

fn is_generalized_identity(
    alg: &FdAlgebra,
    big_d: &LinearEndo,
    d: &LinearEndo,
    sigma: &LinearEndo,
) -> Result<(), Witness> {
    check_dims(alg, &[big_d, d, sigma]);
    first_pair(alg.dim(), |i, j| {
        let (ei, ej) = (alg.basis_vector(i), alg.basis_vector(j));
        let lhs = big_d.apply(&alg.mul(&ei, &ej));
        let rhs = vector::add(
            &alg.mul(&big_d.apply(&ei), &ej),
            &alg.mul(&sigma.apply(&ei), &d.apply(&ej)),
        );
        vector::sub(&lhs, &rhs)
    })
}

/// `D(xy) = D(x)y + σ(x)d(y)` with `d` itself a σ-derivation.
pub fn is_generalized_pair(
    alg: &FdAlgebra,
    big_d: &LinearEndo,
    d: &LinearEndo,
    sigma: &LinearEndo,
) -> Result<(), Witness> {
    is_sigma_derivation(alg, d, sigma)?;
    is_generalized_identity(alg, big_d, d, sigma)
}

/// `F(xy) = F(x)y` on all basis pairs.
pub fn is_left_multiplier(alg: &FdAlgebra, f: &LinearEndo) -> Result<(), Witness> {
    check_dims(alg, &[f]);
    first_pair(alg.dim(), |i, j| {
        let (ei, ej) = (alg.basis_vector(i), alg.basis_vector(j));
        vector::sub(&f.apply(&alg.mul(&ei, &ej)), &alg.mul(&f.apply(&ei), &ej))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredicateMode {
    Commuting,
    Centralizing,
    SkewCommuting,
    SkewCentralizing,
}

impl PredicateMode {
    pub fn is_skew(self) -> bool {
        matches!(self, PredicateMode::SkewCommuting | PredicateMode::SkewCentralizing)
    }

    /// Condition is "∈ Z" rather than "= 0".
    pub fn modulo_center(self) -> bool {
        matches!(self, PredicateMode::Centralizing | PredicateMode::SkewCentralizing)
    }
}

impl fmt::Display for PredicateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PredicateMode::Commuting => "commuting",
            PredicateMode::Centralizing => "centralizing",
            PredicateMode::SkewCommuting => "skew_commuting",
            PredicateMode::SkewCentralizing => "skew_centralizing",
        };
        f.write_str(s)
    }
}

/// `[x, Θ(x)]_σ` or `⟨x, Θ(x)⟩_σ`.
pub fn quadratic_form(
    alg: &FdAlgebra,
    theta: &LinearEndo,
    sigma: &LinearEndo,
    mode: PredicateMode,
    x: &[Scalar],
) -> Vector {
    let tx = theta.apply(x);
    if mode.is_skew() {
        abracket_sigma(alg, sigma, x, &tx)
    } else {
        bracket_sigma(alg, sigma, x, &tx)
    }
}

/// Checks the quantified condition through its polarization: `q(e_i)` on the
/// diagonal and `B(e_i, e_j) = op(e_i, Θe_j) + op(e_j, Θe_i)` for `i < j`.
/// On failure the witness carries an element `x` at which `q` itself fails.
pub fn check_predicate(
    alg: &FdAlgebra,
    theta: &LinearEndo,
    sigma: &LinearEndo,
    mode: PredicateMode,
) -> Result<(), Witness> {
    check_dims(alg, &[theta, sigma]);
    let proj: Option<Matrix> = mode.modulo_center().then(|| alg.center().complement_projection());
    let reduce = |v: Vector| match &proj {
        Some(q) => q.mul_vec(&v),
        None => v,
    };
    let q = |x: &[Scalar]| quadratic_form(alg, theta, sigma, mode, x);
    let op = |x: &[Scalar], y: &[Scalar]| {
        if mode.is_skew() {
            abracket_sigma(alg, sigma, x, y)
        } else {
            bracket_sigma(alg, sigma, x, y)
        }
    };
    let n = alg.dim();
    for i in 0..n {
        for j in i..n {
            let (ei, ej) = (alg.basis_vector(i), alg.basis_vector(j));
            let value = if i == j {
                q(&ei)
            } else {
                vector::add(&op(&ei, &theta.apply(&ej)), &op(&ej, &theta.apply(&ei)))
            };
            if vector::is_zero(&reduce(value)) {
                continue;
            }
            let candidates = [vector::add(&ei, &ej), ei.clone(), ej.clone(), vector::sub(&ei, &ej)];
            for x in candidates {
                let value = q(&x);
                if !vector::is_zero(&reduce(value.clone())) {
                    return Err(Witness::Element { i, j, x, value });
                }
            }
            unreachable!("polarized failure without a failing element in char ≠ 2");
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Derivation,
    SigmaDerivation,
    GeneralizedPair,
    LeftMultiplier,
    Commuting,
    Centralizing,
    SkewCommuting,
    SkewCentralizing,
}

impl MapKind {
    pub const ALL: [MapKind; 8] = [
        MapKind::Derivation,
        MapKind::SigmaDerivation,
        MapKind::GeneralizedPair,
        MapKind::LeftMultiplier,
        MapKind::Commuting,
        MapKind::Centralizing,
        MapKind::SkewCommuting,
        MapKind::SkewCentralizing,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapKind::Derivation => "derivation",
            MapKind::SigmaDerivation => "sigma_derivation",
            MapKind::GeneralizedPair => "generalized_pair",
            MapKind::LeftMultiplier => "left_multiplier",
            MapKind::Commuting => "commuting",
            MapKind::Centralizing => "centralizing",
            MapKind::SkewCommuting => "skew_commuting",
            MapKind::SkewCentralizing => "skew_centralizing",
        }
    }

    /// Whether the kind's definition involves σ.
    pub fn uses_sigma(self) -> bool {
        !matches!(self, MapKind::Derivation | MapKind::LeftMultiplier)
    }

    pub fn is_pair(self) -> bool {
        self == MapKind::GeneralizedPair
    }

    pub fn predicate_mode(self) -> Option<PredicateMode> {
        match self {
            MapKind::Commuting => Some(PredicateMode::Commuting),
            MapKind::Centralizing => Some(PredicateMode::Centralizing),
            MapKind::SkewCommuting => Some(PredicateMode::SkewCommuting),
            MapKind::SkewCentralizing => Some(PredicateMode::SkewCentralizing),
            _ => None,
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown map kind '{s}'"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{fixture_n3, fixture_trian_aa0, upper_triangular};
    use crate::exactlin::Field;

    #[test]
    fn brackets_on_t2() {
        let t = upper_triangular(2, Field::Rational).unwrap();
        let alg = t.algebra();
        let id = LinearEndo::identity(alg.field(), 3);
        assert!(vector::is_zero(&bracket_sigma(alg, &id, t.p(), t.q())));
        let y = vector::from_i64(alg.field(), &[2, 3, 5]);
        assert!(vector::is_zero(&bracket_sigma(alg, &id, alg.unit().unwrap(), &y)));
    }

    #[test]
    fn n3_skew_commuting() {
        let f = Field::Rational;
        let fx = fixture_n3(f).unwrap();
        let id = LinearEndo::identity(f, 3);
        assert_eq!(
            check_predicate(&fx.algebra, &fx.theta, &fx.sigma, PredicateMode::SkewCommuting),
            Ok(())
        );
        let err = check_predicate(&fx.algebra, &fx.theta, &id, PredicateMode::SkewCommuting).unwrap_err();
        assert_eq!(
            err,
            Witness::Element {
                i: 0,
                j: 2,
                x: vector::from_i64(f, &[1, 0, 1]),
                value: vector::from_i64(f, &[0, 2, 0]),
            }
        );
    }

    #[test]
    fn aa0_fixture_predicates() {
        let f = Field::Rational;
        let fx = fixture_trian_aa0(4, f).unwrap();
        let id = LinearEndo::identity(f, 8);
        assert_eq!(is_sigma_derivation(&fx.algebra, &fx.d, &fx.sigma), Ok(()));
        assert!(is_sigma_derivation(&fx.algebra, &fx.d, &id).is_err());
        assert_eq!(is_generalized_pair(&fx.algebra, &fx.big_d, &fx.d, &fx.sigma), Ok(()));
        assert_eq!(is_automorphism(&fx.algebra, &fx.sigma), Ok(()));
    }

    #[test]
    fn automorphism_failures() {
        let t = upper_triangular(2, Field::Rational).unwrap();
        let alg = t.algebra();
        // projection onto span{1}: x ↦ π_A(x)·1
        let proj = LinearEndo::from_fn(alg.field(), 3, |x| vector::scale(&x[0], alg.unit().unwrap()));
        assert!(is_automorphism(alg, &proj).is_err());
        assert_eq!(is_automorphism(alg, &LinearEndo::identity(alg.field(), 3)), Ok(()));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in MapKind::ALL {
            assert_eq!(k.as_str().parse::<MapKind>().unwrap(), k);
        }
        assert!("bogus".parse::<MapKind>().is_err());
    }
}
