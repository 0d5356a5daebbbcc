//! The two counterexample fixtures and the checks they carry.

use serde::Serialize;

use crate::algebra::{fixture_n3, fixture_trian_aa0};
use crate::exactlin::{vector, Field};
use crate::maps::{
    check_predicate, is_generalized_pair, is_sigma_derivation, solve_space, LinearEndo, MapKind, PredicateMode, Witness,
};
use crate::structure::ConditionCheck;

use super::{TheoremError, TheoremReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureInfo {
    pub name: String,
    pub description: String,
    pub maps: Vec<String>,
    pub checks: Vec<String>,
}

/// Built-in fixtures whose name contains `filter` (all of them when the
/// filter is empty).
pub fn list_fixtures(filter: &str) -> Vec<FixtureInfo> {
    let all = vec![
        FixtureInfo {
            name: "n3".into(),
            description: "strictly upper triangular 3x3 matrices, basis e12, e13, e23, e12*e23 = e13".into(),
            maps: vec![
                "sigma: negates e12 and e23, fixes e13".into(),
                "theta: a*e12 + b*e13 + c*e23 -> a*e12 + c*e23".into(),
            ],
            checks: vec!["σ-skew-commuting but not skew-commuting".into()],
        },
        FixtureInfo {
            name: "trian_AA0".into(),
            description: "Trian(A, A, 0) for A = K[x]/(x^N), realized as A+A with (a,b)(c,d) = (ac, ad)".into(),
            maps: vec![
                "sigma: sigma_A + sigma_A with sigma_A(x) = -x".into(),
                "d: (a, b) -> (0, sigma_A(a))".into(),
                "D: (a, b) -> (a, sigma_A(a) + b)".into(),
            ],
            checks: vec![
                "d is a σ-derivation".into(),
                "d is not a derivation".into(),
                "(D, d) is a generalized σ-derivation".into(),
                "D admits no Id-partner".into(),
            ],
        },
    ];
    all.into_iter().filter(|f| f.name.contains(filter)).collect()
}

fn check(label: &str, ok: bool, witness: impl FnOnce() -> String) -> ConditionCheck {
    ConditionCheck {
        label: label.into(),
        holds: ok,
        witness: (!ok).then(witness),
    }
}

fn finish(mut r: TheoremReport, checks: Vec<ConditionCheck>) -> TheoremReport {
    r.passed = checks.iter().all(|c| c.holds);
    r.checks = checks;
    r
}

/// `Θ` is σ-skew-commuting; with `σ = Id` the witness is `x = e12 + e23`
/// with `⟨Θ(x), x⟩ = 2e13`.
pub fn verify_n3_example(field: Field) -> Result<TheoremReport, TheoremError> {
    let fx = fixture_n3(field).map_err(|e| TheoremError::HypothesisNotMet(e.to_string()))?;
    let alg = &fx.algebra;
    let id = LinearEndo::identity(field, 3);
    let mut r = TheoremReport::new("n3_example", format!("fixture n3 over {field}"));
    let with_sigma = check_predicate(alg, &fx.theta, &fx.sigma, PredicateMode::SkewCommuting);
    let with_id = check_predicate(alg, &fx.theta, &id, PredicateMode::SkewCommuting);
    let expected = Witness::Element {
        i: 0,
        j: 2,
        x: vector::from_i64(field, &[1, 0, 1]),
        value: vector::from_i64(field, &[0, 2, 0]),
    };
    let checks = vec![
        check("theta is σ-skew-commuting", with_sigma.is_ok(), || {
            format!("{}", with_sigma.clone().unwrap_err())
        }),
        check(
            "theta is not skew-commuting, x = e12 + e23 gives 2e13",
            with_id.as_ref().err() == Some(&expected),
            || format!("{with_id:?}"),
        ),
    ];
    if let Err(w) = &with_id {
        r.notes.push(format!("σ = Id: {w}"));
    }
    Ok(finish(r, checks))
}

/// Checks on `Trian(A, A, 0)`, `A = K[x]/(x^N)`, `N ≥ 3`.
pub fn verify_aa0_example(n: usize, field: Field) -> Result<TheoremReport, TheoremError> {
    if n < 3 {
        return Err(TheoremError::HypothesisNotMet("needs N ≥ 3 so that x² ≠ 0".into()));
    }
    let fx = fixture_trian_aa0(n, field).map_err(|e| TheoremError::HypothesisNotMet(e.to_string()))?;
    let alg = &fx.algebra;
    let id = LinearEndo::identity(field, 2 * n);
    let mut r = TheoremReport::new("aa0_example", format!("fixture trian_AA0(N={n}) over {field}"));
    let mut checks = Vec::new();

    let sd = is_sigma_derivation(alg, &fx.d, &fx.sigma);
    checks.push(check("d is a σ-derivation", sd.is_ok(), || {
        sd.clone().unwrap_err().to_string()
    }));

    // a = b = (x, x): d(ab) has M-part x², d(a)b + a d(b) has M-part −x².
    let a = fx.element(&[0, 1], &[0, 1]);
    let lhs = fx.d.apply(&alg.mul(&a, &a));
    let rhs = vector::add(&alg.mul(&fx.d.apply(&a), &a), &alg.mul(&a, &fx.d.apply(&a)));
    let x2 = fx.element(&[], &[0, 0, 1]);
    let known_witness = lhs == x2 && rhs == vector::neg(&x2);
    let not_der = is_sigma_derivation(alg, &fx.d, &id).is_err();
    checks.push(check(
        "d is not a derivation, a = b = (x, x) gives x² vs −x²",
        not_der && known_witness,
        || {
            format!(
                "d(ab) = {}, d(a)b + a d(b) = {}",
                alg.format_element(&lhs),
                alg.format_element(&rhs)
            )
        },
    ));

    let gp = is_generalized_pair(alg, &fx.big_d, &fx.d, &fx.sigma);
    checks.push(check("(D, d) is a generalized σ-derivation", gp.is_ok(), || {
        gp.clone().unwrap_err().to_string()
    }));

    // Probes for a derivation partner d̃ with D(ab) = D(a)b + a d̃(b).
    // a = (1, 0) is a left identity, so b = (x, 0) forces
    // d̃(b) = D(b) − D(1, 0)b = (0, −x). Then a = b = (x, 0) needs
    // D(ab) − D(a)b = (0, x²) to equal a d̃(b) = (0, −x²).
    let probe = |a: &[crate::exactlin::Scalar], b: &[crate::exactlin::Scalar]| {
        vector::sub(&fx.big_d.apply(&alg.mul(a, b)), &alg.mul(&fx.big_d.apply(a), b))
    };
    let one = fx.element(&[1], &[]);
    let b = fx.element(&[0, 1], &[]);
    let forced = probe(&one, &b);
    let lhs2 = probe(&b, &b);
    let rhs2 = alg.mul(&b, &forced);
    let contradiction = forced == fx.element(&[], &[0, -1]) && lhs2 == x2 && rhs2 == vector::neg(&x2);
    r.notes.push(format!(
        "probe a = (1,0), b = (x,0) forces d~(b) = {}; probe a = b = (x,0): D(ab) - D(a)b = {} but a d~(b) = {}",
        alg.format_element(&forced),
        alg.format_element(&lhs2),
        alg.format_element(&rhs2),
    ));

    let space = solve_space(alg, &id, MapKind::GeneralizedPair)?;
    let d_space = space.first_components();
    r.dims.insert("id_generalized_pair".into(), space.dim());
    r.dims.insert("id_generalized_first_components".into(), d_space.dim());
    let no_partner = !d_space.contains(&fx.big_d.to_vector());
    checks.push(check("D admits no Id-partner", no_partner && contradiction, || {
        format!(
            "D in solved space: {}, probe contradiction: {contradiction}",
            !no_partner
        )
    }));
    Ok(finish(r, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_verify() {
        let r = verify_n3_example(Field::Rational).unwrap();
        assert!(r.passed, "{r:?}");
        let r = verify_aa0_example(4, Field::Rational).unwrap();
        assert!(r.passed, "{r:?}");
        let r = verify_aa0_example(3, Field::prime(7).unwrap()).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(verify_aa0_example(2, Field::Rational).is_err());
    }

    #[test]
    fn catalog_filter() {
        assert_eq!(list_fixtures("").len(), 2);
        let n3 = list_fixtures("n3");
        assert_eq!(n3.len(), 1);
        assert!(n3[0].checks[0].contains("skew-commuting"));
        assert_eq!(list_fixtures("AA0")[0].checks.len(), 4);
        assert!(list_fixtures("nothing").is_empty());
    }
}
