//! Executes the tasks of a validated configuration.

use std::collections::BTreeMap;

use serde_json::Value;

use crate::algebra::{center, has_only_trivial_idempotents_bruteforce, sigma_center, FdAlgebra, TriangularAlgebra};
use crate::exactlin::Subspace;
use crate::maps::{check_predicate, is_left_multiplier, solve_space, LinearEndo, MapKind, PredicateMode};
use crate::structure::{
    automorphism_parts, check_aut_parts, check_der_parts, check_gen_parts, commuting_criterion, compose_automorphism,
    compose_centralizing, compose_generalized, compose_left_multiplier, compose_sigma_derivation,
    decompose_centralizing, decompose_generalized, decompose_left_multiplier, decompose_sigma_derivation, AutParts,
};
use crate::theorems::{
    verify_aa0_example, verify_gd_left_mult, verify_mayne, verify_n3_example, verify_posner, verify_sharma_dhara,
    verify_skew_zero, TheoremReport,
};

use super::config::{Built, DecomposeTarget, FixtureKind, Instance, Task, Theorem};
use super::report::{
    endo_json, matrix_json, summarize, vector_json, ConditionRecord, ElementRecord, RunReport, Status, TaskRecord,
};

pub fn run_instance(inst: &Instance) -> RunReport {
    let tasks: Vec<TaskRecord> = inst
        .tasks
        .iter()
        .map(|(name, task)| run_task(inst, name, *task).unwrap_or_else(|e| TaskRecord::error(name, e)))
        .collect();
    let (summary, exit_code) = summarize(&tasks);
    let alg = inst.built.algebra();
    let algebra = match &inst.built {
        Built::Triangular(t) => t.describe(),
        Built::Plain(a) => format!("algebra of dim {} over {}", a.dim(), a.field()),
    };
    RunReport {
        schema_version: super::config::SCHEMA_VERSION,
        field: inst.field.to_string(),
        algebra,
        labels: alg.labels().to_vec(),
        sigma: inst.sigma.matrix().to_strings(),
        seed: inst.seed,
        tasks,
        summary,
        exit_code,
    }
}

fn need_tri(inst: &Instance) -> Result<&TriangularAlgebra, String> {
    inst.built
        .triangular()
        .ok_or_else(|| "needs a triangular algebra".to_string())
}

fn basis_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.to_strings()
}

fn run_task(inst: &Instance, name: &str, task: Task) -> Result<TaskRecord, String> {
    let alg = inst.built.algebra();
    match task {
        Task::Center => {
            let mut r = TaskRecord::new(name, Status::Ok);
            match &inst.built {
                Built::Triangular(t) => {
                    let c = center(t).map_err(|e| e.to_string())?;
                    r.dims.insert("center".into(), c.center.dim());
                    r.dims.insert("pi_a".into(), c.pi_a_center.dim());
                    r.dims.insert("pi_b".into(), c.pi_b_center.dim());
                    r.bases.insert("center".into(), basis_strings(&c.center));
                    r.bases.insert("tau".into(), c.tau.to_strings());
                    r.notes.push("oracle and block-form centers agree".into());
                }
                Built::Plain(a) => {
                    let z = a.center();
                    r.dims.insert("center".into(), z.dim());
                    r.bases.insert("center".into(), basis_strings(&z));
                }
            }
            Ok(r)
        }
        Task::SigmaCenter => {
            let mut r = TaskRecord::new(name, Status::Ok);
            match &inst.built {
                Built::Triangular(t) => {
                    let c = sigma_center(t, &inst.sigma).map_err(|e| e.to_string())?;
                    r.dims.insert("sigma_center".into(), c.sigma_center.dim());
                    r.dims.insert("pi_a".into(), c.pi_a.dim());
                    r.dims.insert("pi_b".into(), c.pi_b.dim());
                    r.bases.insert("sigma_center".into(), basis_strings(&c.sigma_center));
                    if let Some(eta) = &c.eta {
                        r.bases.insert("eta".into(), eta.to_strings());
                    }
                    if c.structural_checked {
                        r.notes.push("oracle and block-form σ-centers agree".into());
                    }
                }
                Built::Plain(a) => {
                    let z = a.sigma_center(inst.sigma.matrix());
                    r.dims.insert("sigma_center".into(), z.dim());
                    r.bases.insert("sigma_center".into(), basis_strings(&z));
                }
            }
            Ok(r)
        }
        Task::Solve(kind) => {
            let space = solve_space(alg, &sigma_for(inst, kind), kind).map_err(|e| e.to_string())?;
            let mut r = TaskRecord::new(name, Status::Ok);
            r.dims.insert("space".into(), space.dim());
            r.bases.insert("space".into(), basis_strings(&space.space));
            Ok(r)
        }
        Task::Decompose(target) => decompose(inst, name, need_tri(inst)?, target),
        Task::Verify(th) => {
            let rep = match th {
                Theorem::Posner => verify_posner(need_tri(inst)?, &inst.sigma),
                Theorem::SkewZero => verify_skew_zero(need_tri(inst)?, &inst.sigma),
                Theorem::SharmaDhara => verify_sharma_dhara(alg),
                Theorem::GdLeftMult => verify_gd_left_mult(need_tri(inst)?),
                Theorem::Mayne => verify_mayne(need_tri(inst)?, inst.samples, inst.seed),
                Theorem::Fixture => match inst.fixture {
                    Some(FixtureKind::N3) => verify_n3_example(inst.field),
                    Some(FixtureKind::Aa0(n)) => verify_aa0_example(n, inst.field),
                    None => return Err("no fixture".into()),
                },
            }
            .map_err(|e| e.to_string())?;
            Ok(theorem_record(name, rep))
        }
        Task::Idempotents => idempotents(inst, name),
    }
}

fn sigma_for(inst: &Instance, kind: MapKind) -> LinearEndo {
    if kind.uses_sigma() {
        inst.sigma.clone()
    } else {
        LinearEndo::identity(inst.field, inst.built.algebra().dim())
    }
}

fn theorem_record(name: &str, rep: TheoremReport) -> TaskRecord {
    let mut r = TaskRecord::new(name, if rep.passed { Status::Pass } else { Status::Fail });
    r.dims = rep.dims;
    r.conditions = rep.checks.iter().map(ConditionRecord::from).collect();
    r.witness = rep.witness.map(|w| w.matrix().to_strings());
    r.notes = rep.notes;
    r.notes.insert(0, format!("{}: {}", rep.theorem, rep.instance));
    r
}

fn idempotents(inst: &Instance, name: &str) -> Result<TaskRecord, String> {
    let bound = inst.enumeration_bound as u128;
    let mut r = TaskRecord::new(name, Status::Pass);
    let parts: Vec<(&str, &FdAlgebra)> = match &inst.built {
        Built::Triangular(t) => vec![("A", t.a()), ("B", t.b())],
        Built::Plain(a) => vec![("algebra", a)],
    };
    for (label, a) in parts {
        let actual = has_only_trivial_idempotents_bruteforce(a, bound).map_err(|e| e.to_string())?;
        let declared = a.only_trivial_idempotents();
        r.conditions.push(ConditionRecord {
            label: format!("{label}: declared flag matches enumeration"),
            holds: actual == declared,
            witness: (actual != declared).then(|| format!("declared {declared}, enumerated {actual}")),
        });
        r.notes.push(format!("{label}: only trivial idempotents = {actual}"));
    }
    if r.conditions.iter().any(|c| !c.holds) {
        r.status = Status::Fail;
    }
    Ok(r)
}

fn element(index: usize) -> ElementRecord {
    ElementRecord {
        index,
        components: BTreeMap::new(),
        conditions: Vec::new(),
        recomposed: false,
        error: None,
    }
}

fn comps(e: &mut ElementRecord, items: Vec<(&str, Value)>) {
    for (k, v) in items {
        e.components.insert(k.into(), v);
    }
}

fn conds(e: &mut ElementRecord, cs: &[crate::structure::ConditionCheck]) {
    e.conditions.extend(cs.iter().map(ConditionRecord::from));
}

fn aut_element(t: &TriangularAlgebra, sigma: &LinearEndo, aut: &AutParts) -> ElementRecord {
    let mut e = element(0);
    comps(
        &mut e,
        vec![
            ("f_sigma", endo_json(&aut.f_sigma)),
            ("g_sigma", endo_json(&aut.g_sigma)),
            ("m_sigma", vector_json(&aut.m_sigma)),
            ("nu_sigma", endo_json(&aut.nu_sigma)),
        ],
    );
    conds(&mut e, &check_aut_parts(t, aut));
    e.recomposed = compose_automorphism(t, aut).is_ok_and(|s| &s == sigma);
    e
}

fn decompose(
    inst: &Instance,
    name: &str,
    t: &TriangularAlgebra,
    target: DecomposeTarget,
) -> Result<TaskRecord, String> {
    let mut r = TaskRecord::new(name, Status::Pass);
    let kind = match target {
        DecomposeTarget::Automorphism => {
            let aut = automorphism_parts(t, &inst.sigma).map_err(|e| e.to_string())?;
            r.elements.push(aut_element(t, &inst.sigma, &aut));
            return Ok(finish(r));
        }
        DecomposeTarget::Map(k) => k,
    };
    let sigma = sigma_for(inst, kind);
    let aut = automorphism_parts(t, &sigma).map_err(|e| e.to_string())?;
    let space = solve_space(t.algebra(), &sigma, kind).map_err(|e| e.to_string())?;
    r.dims.insert("space".into(), space.dim());
    let mut display_differs = 0;
    if kind.is_pair() {
        for (i, (big_d, d)) in space.basis_pairs().into_iter().enumerate() {
            let mut e = element(i);
            match decompose_generalized(t, &sigma, &big_d, &d) {
                Ok(p) => {
                    comps(
                        &mut e,
                        vec![
                            ("big_d_a", endo_json(&p.big_d_a)),
                            ("big_d_b", endo_json(&p.big_d_b)),
                            ("m_d", vector_json(&p.m_d)),
                            ("m_big_d", vector_json(&p.m_big_d)),
                            ("xi", endo_json(&p.xi)),
                            ("d_a", endo_json(&p.der.d_a)),
                            ("d_b", endo_json(&p.der.d_b)),
                            ("display_form_differs", Value::Bool(p.display_form_differs)),
                        ],
                    );
                    display_differs += usize::from(p.display_form_differs);
                    conds(&mut e, &check_gen_parts(t, &aut, &p));
                    e.recomposed =
                        compose_generalized(t, &aut, &p) == big_d && compose_sigma_derivation(t, &aut, &p.der) == d;
                }
                Err(err) => e.error = Some(err.to_string()),
            }
            r.elements.push(e);
        }
        if display_differs > 0 {
            r.notes.push(format!(
                "{display_differs} element(s) where -m_σ D_B(b) differs from the recomposed -m_σ d_B(b)"
            ));
        }
        return Ok(finish(r));
    }
    for (i, theta) in space.basis_endos().into_iter().enumerate() {
        let mut e = element(i);
        let outcome: Result<(), String> = match kind {
            MapKind::Derivation | MapKind::SigmaDerivation => decompose_sigma_derivation(t, &sigma, &theta).map(|p| {
                comps(
                    &mut e,
                    vec![
                        ("d_a", endo_json(&p.d_a)),
                        ("d_b", endo_json(&p.d_b)),
                        ("m_d", vector_json(&p.m_d)),
                        ("xi", endo_json(&p.xi)),
                    ],
                );
                conds(&mut e, &check_der_parts(t, &aut, &p));
                e.recomposed = compose_sigma_derivation(t, &aut, &p) == theta;
            }),
            MapKind::LeftMultiplier => decompose_left_multiplier(t, &theta).map(|p| {
                comps(
                    &mut e,
                    vec![
                        ("f_a", endo_json(&p.f_a)),
                        ("f_b", endo_json(&p.f_b)),
                        ("m_f", vector_json(&p.m_f)),
                    ],
                );
                for (label, a, f) in [
                    ("F_A left multiplier", t.a(), &p.f_a),
                    ("F_B left multiplier", t.b(), &p.f_b),
                ] {
                    let res = is_left_multiplier(a, f);
                    e.conditions.push(ConditionRecord {
                        label: label.into(),
                        holds: res.is_ok(),
                        witness: res.err().map(|w| w.to_string()),
                    });
                }
                e.recomposed = compose_left_multiplier(t, &p) == theta;
            }),
            MapKind::Centralizing | MapKind::Commuting => decompose_centralizing(t, &sigma, &theta).map(|dec| {
                let p = &dec.parts;
                comps(
                    &mut e,
                    vec![
                        ("delta1", matrix_json(&p.delta1)),
                        ("delta2", matrix_json(&p.delta2)),
                        ("delta3", matrix_json(&p.delta3)),
                        ("mu1", matrix_json(&p.mu1)),
                        ("mu2", matrix_json(&p.mu2)),
                        ("mu3", matrix_json(&p.mu3)),
                    ],
                );
                conds(&mut e, &dec.conditions);
                let criterion = commuting_criterion(t, &dec.aut, p);
                let commuting = check_predicate(t.algebra(), &theta, &sigma, PredicateMode::Commuting).is_ok();
                e.components.insert("commuting".into(), Value::Bool(commuting));
                e.conditions.push(ConditionRecord {
                    label: "commuting iff delta3(B) in Z_f(A) and mu1(A) in Z_g(B)".into(),
                    holds: criterion == commuting,
                    witness: (criterion != commuting).then(|| format!("criterion {criterion}, predicate {commuting}")),
                });
                e.recomposed = compose_centralizing(t, &dec.aut, p) == theta;
            }),
            MapKind::SkewCommuting | MapKind::SkewCentralizing | MapKind::GeneralizedPair => {
                unreachable!("rejected during validation")
            }
        }
        .map_err(|err| err.to_string());
        if let Err(err) = outcome {
            e.error = Some(err);
        }
        r.elements.push(e);
    }
    Ok(finish(r))
}

fn finish(mut r: TaskRecord) -> TaskRecord {
    let ok = r
        .elements
        .iter()
        .all(|e| e.error.is_none() && e.recomposed && e.conditions.iter().all(|c| c.holds));
    r.status = if ok { Status::Pass } else { Status::Fail };
    r
}
