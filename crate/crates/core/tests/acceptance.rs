//! Acceptance run: one `[PASS]`/`[FAIL]` line per criterion, nonzero exit if
//! any criterion fails.

mod common;

use std::process::Command;

use common::{diag_sign, f5, identity, poly_flip, q, shear};
use trialg::algebra::{
    block_upper, center, fixture_n3, full_matrix, trunc_poly_triangular, upper_triangular, TriangularAlgebra,
};
use trialg::cli::{run, RunConfig, RunReport, Status};
use trialg::exactlin::{vector, Subspace};
use trialg::maps::{check_predicate, solve_space, LinearEndo, MapKind, PredicateMode, Witness};
use trialg::structure::CONDITION_LABELS;
use trialg::theorems::{
    verify_aa0_example, verify_gd_left_mult, verify_mayne, verify_n3_example, verify_posner, verify_sharma_dhara,
    verify_skew_zero,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1() -> Outcome {
    let fx = fixture_n3(q()).map_err(|e| e.to_string())?;
    let id = LinearEndo::identity(q(), 3);
    check_predicate(&fx.algebra, &fx.theta, &fx.sigma, PredicateMode::SkewCommuting)
        .map_err(|w| format!("Θ not σ-skew-commuting: {w}"))?;
    let w = check_predicate(&fx.algebra, &fx.theta, &id, PredicateMode::SkewCommuting)
        .err()
        .ok_or("Θ is skew-commuting for σ = Id")?;
    let expected = Witness::Element {
        i: 0,
        j: 2,
        x: vector::from_i64(q(), &[1, 0, 1]),
        value: vector::from_i64(q(), &[0, 2, 0]),
    };
    ensure(w == expected, || format!("unexpected witness {w}"))?;
    let r = verify_n3_example(q()).map_err(|e| e.to_string())?;
    ensure(r.passed, || format!("{:?}", r.checks))?;
    Ok(format!("witness {w}"))
}

fn ac2() -> Outcome {
    let r = verify_aa0_example(4, q()).map_err(|e| e.to_string())?;
    ensure(r.checks.len() == 4, || format!("{} checks", r.checks.len()))?;
    for c in &r.checks {
        ensure(c.holds, || format!("{}: {:?}", c.label, c.witness))?;
    }
    Ok(format!(
        "4/4 checks; Id-generalized pairs dim {}, first components dim {}",
        r.dims["id_generalized_pair"], r.dims["id_generalized_first_components"]
    ))
}

fn ac3() -> Outcome {
    let mut dims = Vec::new();
    for n in 2..=4 {
        let t = upper_triangular(n, q()).map_err(|e| e.to_string())?;
        let c = center(&t).map_err(|e| e.to_string())?;
        let oracle = t.algebra().center();
        ensure(c.center == oracle, || {
            format!("T{n}: structural and oracle centers differ")
        })?;
        ensure(oracle.dim() == 1, || format!("T{n}: dim Z = {}", oracle.dim()))?;
        ensure(oracle.contains(t.algebra().unit().unwrap()), || {
            format!("T{n}: 1 not central")
        })?;
        dims.push(oracle.dim());
    }
    Ok(format!("dim Z(T_n) for n = 2, 3, 4: {dims:?}"))
}

fn ac4() -> Outcome {
    let t = upper_triangular(2, q()).map_err(|e| e.to_string())?;
    let alg = t.algebra();
    let space = solve_space(alg, &identity(&t), MapKind::Derivation).map_err(|e| e.to_string())?;
    let inner = Subspace::span(
        q(),
        9,
        (0..3).map(|i| {
            let ti = alg.basis_vector(i);
            LinearEndo::from_fn(q(), 3, |x| alg.commutator(&ti, x)).to_vector()
        }),
    );
    ensure(space.dim() == 2, || format!("dim = {}", space.dim()))?;
    ensure(space.space == inner, || {
        "inner derivations do not span the solved space".into()
    })?;
    Ok("dim 2, equal to span of ad_t".into())
}

struct Inst {
    name: &'static str,
    t: TriangularAlgebra,
    sigma: LinearEndo,
}

fn sigma_instances() -> Result<Vec<Inst>, String> {
    let e = |x: trialg::algebra::AlgebraError| x.to_string();
    let mut out = Vec::new();
    for (name, t) in [
        ("T2(Q)", upper_triangular(2, q()).map_err(e)?),
        ("T3(Q)", upper_triangular(3, q()).map_err(e)?),
        ("B(2,1)(Q)", block_upper(&[2, 1], 1, q()).map_err(e)?),
    ] {
        out.push(Inst {
            name,
            sigma: identity(&t),
            t,
        });
    }
    for (base, t) in [
        ("T2(Q)", upper_triangular(2, q()).map_err(e)?),
        ("T2(F5)", upper_triangular(2, f5()).map_err(e)?),
    ] {
        let names: [&'static str; 2] = if base == "T2(Q)" {
            ["T2(Q) diag", "T2(Q) inner"]
        } else {
            ["T2(F5) diag", "T2(F5) inner"]
        };
        out.push(Inst {
            name: names[0],
            sigma: diag_sign(&t, &[1, -1]),
            t: t.clone(),
        });
        out.push(Inst {
            name: names[1],
            sigma: shear(&t, &[1]),
            t,
        });
    }
    let p = trunc_poly_triangular(3, q()).map_err(e)?;
    out.push(Inst {
        name: "Trian(Q[x]/x^3) Id",
        sigma: identity(&p),
        t: p.clone(),
    });
    out.push(Inst {
        name: "Trian(Q[x]/x^3) diag",
        sigma: diag_sign(&p, &[1, -1]),
        t: p.clone(),
    });
    out.push(Inst {
        name: "Trian(Q[x]/x^3) inner",
        sigma: shear(&p, &[1, 1, 0]),
        t: p.clone(),
    });
    out.push(Inst {
        name: "Trian(Q[x]/x^3) x->-x",
        sigma: poly_flip(&p, 3),
        t: p,
    });
    Ok(out)
}

fn ac5() -> Outcome {
    let insts = sigma_instances()?;
    for i in &insts {
        let r = verify_posner(&i.t, &i.sigma).map_err(|e| format!("{}: {e}", i.name))?;
        ensure(r.passed && r.dims["intersection"] == 0, || {
            format!("{}: {:?}", i.name, r.notes)
        })?;
    }
    Ok(format!("intersection dim 0 on {} instances", insts.len()))
}

fn ac6() -> Outcome {
    let insts = sigma_instances()?;
    for i in &insts {
        let r = verify_skew_zero(&i.t, &i.sigma).map_err(|e| format!("{}: {e}", i.name))?;
        ensure(r.passed && r.dims["skew_commuting"] == 0, || {
            format!("{}: {:?}", i.name, r.notes)
        })?;
    }
    Ok(format!("skew-commuting dim 0 on {} instances", insts.len()))
}

fn ac7() -> Outcome {
    let algs = [
        ("T2(Q)", upper_triangular(2, q()).unwrap().algebra().clone()),
        ("T3(Q)", upper_triangular(3, q()).unwrap().algebra().clone()),
        ("M2(Q)", full_matrix(2, q()).unwrap()),
    ];
    let mut dims = Vec::new();
    for (name, a) in &algs {
        let r = verify_sharma_dhara(a).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.passed, || format!("{name}: {:?}", r.notes))?;
        dims.push(format!(
            "{name} {}⊆{}",
            r.dims["skew_centralizing"], r.dims["commuting"]
        ));
    }
    Ok(dims.join(", "))
}

fn ac8() -> Outcome {
    let mut out = Vec::new();
    for n in [2, 3] {
        let t = upper_triangular(n, q()).unwrap();
        let r = verify_gd_left_mult(&t).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("T{n}: {:?}", r.notes))?;
        out.push(format!("T{n} restricted dim {}", r.dims["restricted"]));
    }
    Ok(out.join(", "))
}

const DECOMPOSE_TASKS: [&str; 7] = [
    "decompose:automorphism",
    "decompose:derivation",
    "decompose:sigma_derivation",
    "decompose:generalized_pair",
    "decompose:left_multiplier",
    "decompose:commuting",
    "decompose:centralizing",
];

fn ac9() -> Outcome {
    let configs = [
        (r#""family": "T_n", "n": 2"#, r#""identity""#),
        (r#""family": "T_n", "n": 2"#, r#"{"diag_signs": [1, -1]}"#),
        (r#""family": "T_n", "n": 2"#, r#"{"conjugate_by": [1, 1, 1]}"#),
        (
            r#""family": "T_n", "n": 2, "field": {"prime": 5}"#,
            r#"{"diag_signs": [1, -1]}"#,
        ),
        (
            r#""family": "T_n", "n": 2, "field": {"prime": 5}"#,
            r#"{"conjugate_by": [1, 3, 1]}"#,
        ),
        (r#""family": "poly_triangular", "n": 3"#, r#""identity""#),
        (r#""family": "poly_triangular", "n": 3"#, r#"{"diag_signs": [1, -1]}"#),
        (
            r#""family": "poly_triangular", "n": 3"#,
            r#"{"conjugate_by": [1, 0, 0, 1, 1, 0, 1, 0, 0]}"#,
        ),
        (
            r#""family": "poly_triangular", "n": 3"#,
            r#"{"parts": {"f": [[1,0,0],[0,-1,0],[0,0,1]], "g": [[1,0,0],[0,-1,0],[0,0,1]], "m": [0,0,0], "nu": [[1,0,0],[0,-1,0],[0,0,1]]}}"#,
        ),
        (r#""family": "T_n", "n": 3"#, r#""identity""#),
        (r#""family": "block", "dims": [2, 1], "split": 1"#, r#""identity""#),
    ];
    let tasks = serde_json::to_string(&DECOMPOSE_TASKS).unwrap();
    let mut elements = 0;
    for (alg, sigma) in configs {
        let json = format!(r#"{{{alg}, "sigma": {sigma}, "tasks": {tasks}}}"#);
        let cfg = RunConfig::from_json(&json).map_err(|e| e.to_string())?;
        let r = run(&cfg, None).map_err(|e| format!("{alg} σ={sigma}: {e}"))?;
        for t in &r.tasks {
            ensure(t.status == Status::Pass, || {
                format!("{alg} σ={sigma} {}: {:?}", t.task, t)
            })?;
            for e in &t.elements {
                elements += 1;
                if t.task == "decompose:centralizing" || t.task == "decompose:commuting" {
                    for l in CONDITION_LABELS {
                        ensure(e.conditions.iter().any(|c| c.label == l && c.holds), || {
                            format!("{alg} σ={sigma}: condition {l} missing or failing")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{elements} basis elements decomposed and recomposed on {} instances",
        configs.len()
    ))
}

fn ac10() -> Outcome {
    let mut out = Vec::new();
    for (name, t) in [
        ("T2(Q)", upper_triangular(2, q()).unwrap()),
        ("T2(F5)", upper_triangular(2, f5()).unwrap()),
    ] {
        let r = verify_mayne(&t, 50, 2024).map_err(|e| e.to_string())?;
        ensure(r.passed && r.dims["samples"] == 50, || format!("{name}: {:?}", r.notes))?;
        out.push(format!(
            "{name} parts {} conjugation {}",
            r.dims["samples_parts"], r.dims["samples_conjugation"]
        ));
    }
    Ok(out.join(", "))
}

fn ac11() -> Outcome {
    let config = concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/full_suite.json");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("report{k}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_trialg"))
            .args(["run", "--config", config, "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.code() == Some(0), || format!("exit status {status}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || "reports differ between runs".into())?;
    let text = String::from_utf8(outputs[0].clone()).map_err(|e| e.to_string())?;
    let parsed = RunReport::from_json(&text).map_err(|e| e.to_string())?;
    ensure(parsed.to_json() == text, || "report does not round-trip".into())?;
    Ok(format!(
        "{} bytes, {} tasks, identical and round-trip stable",
        text.len(),
        parsed.tasks.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("AC1", "n3 fixture: σ-skew-commuting, Id witness 2e13", ac1),
        ("AC2", "trian_AA0(N=4) fixture checks", ac2),
        ("AC3", "center of T_n, n = 2..4", ac3),
        ("AC4", "derivations of T2 are inner", ac4),
        ("AC5", "σ-centralizing σ-derivations vanish", ac5),
        ("AC6", "σ-skew-commuting maps vanish", ac6),
        ("AC7", "skew-centralizing maps are commuting", ac7),
        ("AC8", "centralizing generalized derivations are left multipliers", ac8),
        ("AC9", "structure round-trips", ac9),
        ("AC10", "no centralizing non-identity automorphism", ac10),
        ("AC11", "byte-identical reports", ac11),
    ];
    let mut failed = 0;
    for (id, title, f) in criteria {
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {title} ({detail}; {secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
