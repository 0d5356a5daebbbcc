//! Command-line front end.
//!
//! Exit codes: 0 when every task passes, 1 when a task fails or errors, 2 for
//! configuration and usage errors.

mod config;
mod report;
mod run;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

pub use config::{
    AlgebraSpec, Built, ConfigError, DecomposeTarget, FieldSpec, FixtureKind, InlineAlgebra, InlineBimodule, Instance,
    PartsSpec, RunConfig, ScalarIn, SigmaSpec, Task, Theorem, SCHEMA_VERSION,
};
pub use report::{ConditionRecord, ElementRecord, RunReport, Status, Summary, TaskRecord};
pub use run::run_instance;

use crate::theorems::list_fixtures;

pub const EXIT_CONFIG: i32 = 2;

/// Validates and runs a configuration. `seed` overrides the configured one.
pub fn run(config: &RunConfig, seed: Option<u64>) -> Result<RunReport, ConfigError> {
    let mut inst = config.validate()?;
    if let Some(s) = seed {
        inst.seed = s;
    }
    Ok(run_instance(&inst))
}

#[derive(Debug, Parser)]
#[command(name = "trialg", version, about = "Structured linear maps on triangular algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the tasks of a JSON configuration and emit a JSON report.
    Run {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List the built-in fixtures.
    Fixtures {
        #[arg(long, default_value = "")]
        filter: String,
    },
    /// Solve for one space of maps with σ = Id.
    Solve {
        /// T_n (alias Tn), poly_triangular, full_matrix or block.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        split: usize,
        /// Block sizes for the block family, e.g. 2,1.
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        prime: Option<u64>,
    },
}

fn solve_config(
    family: &str,
    n: Option<usize>,
    split: usize,
    dims: &[usize],
    kind: &str,
    prime: Option<u64>,
) -> Result<RunConfig, ConfigError> {
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "tasks": [format!("solve:{kind}")],
    });
    if let Some(n) = n {
        v["n"] = json!(n);
    }
    if family == "block" {
        v["dims"] = json!(dims);
    }
    if matches!(family, "block" | "T_n" | "Tn") {
        v["split"] = json!(split);
    }
    if let Some(p) = prime {
        v["field"] = json!({ "prime": p });
    }
    RunConfig::from_json(&v.to_string())
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn finish(report: Result<RunReport, ConfigError>, out: Option<&PathBuf>) -> i32 {
    match report {
        Ok(r) => match emit(&r.to_json(), out) {
            Ok(()) => r.exit_code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_CONFIG
            }
        },
        Err(e) => {
            eprintln!("config error: {e}");
            EXIT_CONFIG
        }
    }
}

/// Entry point; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { 0 };
        }
    };
    match cli.command {
        Command::Run { config, out, seed } => {
            let report = RunConfig::from_path(&config).and_then(|c| run(&c, seed));
            finish(report, out.as_ref())
        }
        Command::Fixtures { filter } => {
            let text = serde_json::to_string_pretty(&list_fixtures(&filter)).expect("catalog serializes");
            match emit(&format!("{text}\n"), None) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_CONFIG
                }
            }
        }
        Command::Solve {
            family,
            n,
            split,
            dims,
            kind,
            prime,
        } => {
            let report = solve_config(&family, n, split, &dims, &kind, prime).and_then(|c| run(&c, None));
            finish(report, None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_json(s: &str) -> RunReport {
        run(&RunConfig::from_json(s).unwrap(), None).unwrap()
    }

    #[test]
    fn center_of_t2() {
        let r = run_json(r#"{"family": "T_n", "n": 2, "field": "rational", "tasks": ["center"]}"#);
        assert_eq!(r.tasks[0].status, Status::Ok);
        assert_eq!(r.tasks[0].dims["center"], 1);
        assert_eq!(r.exit_code, 0);
    }

    #[test]
    fn derivations_of_t2() {
        let r = run_json(r#"{"family": "T_n", "n": 2, "sigma": "identity", "tasks": ["solve:derivation"]}"#);
        assert_eq!(r.tasks[0].dims["space"], 2);
    }

    #[test]
    fn t3_theorem_suite_passes() {
        let r = run_json(
            r#"{"family": "T_n", "n": 3, "tasks": ["verify:posner", "verify:skew_zero", "verify:sharma_dhara", "verify:gd_left_mult"]}"#,
        );
        assert!(r.tasks.iter().all(|t| t.status == Status::Pass), "{r:?}");
        assert_eq!(r.exit_code, 0);
    }

    #[test]
    fn decompositions_pass() {
        let r = run_json(
            r#"{"family": "T_n", "n": 2, "field": {"prime": 5}, "sigma": {"conjugate_by": [1, 2, 1]},
                "tasks": ["decompose:automorphism", "decompose:sigma_derivation", "decompose:generalized_pair",
                          "decompose:centralizing", "decompose:commuting", "decompose:left_multiplier",
                          "decompose:derivation", "sigma_center"]}"#,
        );
        for t in &r.tasks {
            assert_ne!(t.status, Status::Fail, "{t:?}");
            assert_ne!(t.status, Status::Error, "{t:?}");
        }
        let cent = &r.tasks[3];
        assert!(cent.elements.iter().all(|e| e.conditions.len() == 12));
        assert!(r.tasks[2].notes.iter().any(|n| n.contains("differs")));
    }

    #[test]
    fn fixtures_run() {
        let r =
            run_json(r#"{"family": "n3", "sigma": "fixture", "tasks": ["verify:fixture", "solve:skew_commuting"]}"#);
        assert_eq!(r.tasks[0].status, Status::Pass);
        let r = run_json(r#"{"family": "trian_AA0", "n": 4, "sigma": "fixture", "tasks": ["verify:fixture"]}"#);
        assert_eq!(r.tasks[0].status, Status::Pass, "{r:?}");
    }

    #[test]
    fn task_errors_are_isolated() {
        // 3^4 elements of M_2(F_3) exceed the bound
        let r = run_json(
            r#"{"family": "full_matrix", "n": 2, "field": {"prime": 3}, "enumeration_bound": 10,
                "tasks": ["idempotents", "verify:sharma_dhara"]}"#,
        );
        assert_eq!(r.tasks[0].status, Status::Error);
        assert_eq!(r.tasks[1].status, Status::Pass);
        assert_eq!(r.exit_code, 1);
    }

    #[test]
    fn solve_subcommand_config() {
        let c = solve_config("Tn", Some(3), 1, &[], "derivation", None).unwrap();
        let r = run(&c, None).unwrap();
        assert_eq!(r.tasks[0].dims["space"], 5);
        let c = solve_config("block", None, 1, &[2, 1], "left_multiplier", Some(7)).unwrap();
        assert!(run(&c, None).is_ok());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with_args(["trialg", "bogus"]), EXIT_CONFIG);
        assert_eq!(
            main_with_args(["trialg", "run", "--config", "/nonexistent.json"]),
            EXIT_CONFIG
        );
        assert_eq!(
            main_with_args(["trialg", "solve", "--family", "Tn", "--n", "2", "--kind", "nope"]),
            EXIT_CONFIG
        );
    }
}
