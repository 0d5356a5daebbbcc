//! Run configuration: parsing, validation and construction of the instance.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    block_upper, fixture_n3, fixture_trian_aa0, full_matrix, has_only_trivial_idempotents_bruteforce, make_algebra,
    make_bimodule, make_triangular, trunc_poly_triangular, upper_triangular_split, FdAlgebra, TriangularAlgebra,
    DEFAULT_ENUMERATION_BOUND,
};
use crate::exactlin::{Field, Matrix, Scalar, Vector};
use crate::maps::{inner_automorphism, is_automorphism, LinearEndo, MapKind};
use crate::structure::{compose_automorphism, AutParts};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl fmt::Display) -> ConfigError {
    ConfigError::Invalid {
        location: location.into(),
        message: message.to_string(),
    }
}

/// An integer or an `"n/d"` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarIn {
    Int(i64),
    Str(String),
}

impl ScalarIn {
    fn to_scalar(&self, field: Field, loc: &str) -> Result<Scalar, ConfigError> {
        match self {
            ScalarIn::Int(v) => Ok(field.from_i64(*v)),
            ScalarIn::Str(s) => field.parse_scalar(s).map_err(|e| invalid(loc, e)),
        }
    }
}

fn vector_in(field: Field, xs: &[ScalarIn], loc: &str) -> Result<Vector, ConfigError> {
    xs.iter()
        .enumerate()
        .map(|(i, s)| s.to_scalar(field, &format!("{loc}[{i}]")))
        .collect()
}

/// Rows of a square matrix; column `j` is the image of `e_j`.
fn matrix_in(field: Field, rows: &[Vec<ScalarIn>], n: usize, loc: &str) -> Result<LinearEndo, ConfigError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(invalid(loc, format!("expected a {n} x {n} matrix")));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector_in(field, r, &format!("{loc}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearEndo::new(Matrix::from_rows(field, rows)))
}

fn table_in(field: Field, t: &[Vec<Vec<ScalarIn>>], loc: &str) -> Result<Vec<Vec<Vector>>, ConfigError> {
    t.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| vector_in(field, v, &format!("{loc}[{i}][{j}]")))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime(u64),
}

/// Structure constants: `table[i][j]` holds the coordinates of `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InlineAlgebra {
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<Vec<ScalarIn>>>,
    #[serde(default)]
    pub unit: Option<Vec<ScalarIn>>,
    #[serde(default)]
    pub only_trivial_idempotents: bool,
}

/// `left[i][k]` = `e_i^A m_k`, `right[k][j]` = `m_k e_j^B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InlineBimodule {
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub left: Vec<Vec<Vec<ScalarIn>>>,
    pub right: Vec<Vec<Vec<ScalarIn>>>,
}

fn default_split() -> usize {
    1
}

fn default_aa0() -> usize {
    4
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum AlgebraSpec {
    #[serde(rename = "T_n", alias = "Tn")]
    Tn {
        n: usize,
        #[serde(default = "default_split")]
        split: usize,
    },
    #[serde(rename = "block")]
    Block { dims: Vec<usize>, split: usize },
    #[serde(rename = "poly_triangular")]
    PolyTriangular { n: usize },
    #[serde(rename = "full_matrix")]
    FullMatrix { n: usize },
    #[serde(rename = "n3")]
    N3,
    #[serde(rename = "trian_AA0")]
    TrianAa0 {
        #[serde(default = "default_aa0")]
        n: usize,
    },
    #[serde(rename = "inline")]
    Inline { algebra: InlineAlgebra },
    #[serde(rename = "inline_triangular")]
    InlineTriangular {
        a: InlineAlgebra,
        m: InlineBimodule,
        b: InlineAlgebra,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartsSpec {
    pub f: Vec<Vec<ScalarIn>>,
    pub g: Vec<Vec<ScalarIn>>,
    pub m: Vec<ScalarIn>,
    pub nu: Vec<Vec<ScalarIn>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaSpec {
    #[default]
    Identity,
    /// The automorphism carried by a fixture family.
    Fixture,
    DiagSigns(Vec<i64>),
    ConjugateBy(Vec<ScalarIn>),
    Parts(PartsSpec),
    Matrix(Vec<Vec<ScalarIn>>),
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

fn default_bound() -> u64 {
    DEFAULT_ENUMERATION_BOUND as u64
}

fn default_samples() -> usize {
    50
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    #[serde(default)]
    pub field: FieldSpec,
    #[serde(flatten)]
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub sigma: SigmaSpec,
    pub tasks: Vec<String>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_bound")]
    pub enumeration_bound: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<RunConfig, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn from_path(path: &std::path::Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        RunConfig::from_json(&text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    Posner,
    Mayne,
    SkewZero,
    SharmaDhara,
    GdLeftMult,
    Fixture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecomposeTarget {
    Automorphism,
    Map(MapKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Center,
    SigmaCenter,
    Solve(MapKind),
    Decompose(DecomposeTarget),
    Verify(Theorem),
    Idempotents,
}

impl Task {
    pub fn parse(s: &str) -> Result<Task, String> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let kind = |a: Option<&str>| -> Result<MapKind, String> {
            a.ok_or_else(|| format!("'{head}' needs a map kind"))?.parse()
        };
        match (head, arg) {
            ("center", None) => Ok(Task::Center),
            ("sigma_center", None) => Ok(Task::SigmaCenter),
            ("idempotents", None) => Ok(Task::Idempotents),
            ("solve", a) => Ok(Task::Solve(kind(a)?)),
            ("decompose", Some("automorphism")) => Ok(Task::Decompose(DecomposeTarget::Automorphism)),
            ("decompose", a) => match kind(a)? {
                k @ (MapKind::SkewCommuting | MapKind::SkewCentralizing) => {
                    Err(format!("no decomposition for {k} maps"))
                }
                k => Ok(Task::Decompose(DecomposeTarget::Map(k))),
            },
            ("verify", Some(t)) => Ok(Task::Verify(match t {
                "posner" => Theorem::Posner,
                "mayne" => Theorem::Mayne,
                "skew_zero" => Theorem::SkewZero,
                "sharma_dhara" => Theorem::SharmaDhara,
                "gd_left_mult" => Theorem::GdLeftMult,
                "fixture" => Theorem::Fixture,
                _ => return Err(format!("unknown theorem '{t}'")),
            })),
            _ => Err(format!("unknown task '{s}'")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    N3,
    Aa0(usize),
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Built {
    Triangular(TriangularAlgebra),
    Plain(FdAlgebra),
}

impl Built {
    pub fn algebra(&self) -> &FdAlgebra {
        match self {
            Built::Triangular(t) => t.algebra(),
            Built::Plain(a) => a,
        }
    }

    pub fn triangular(&self) -> Option<&TriangularAlgebra> {
        match self {
            Built::Triangular(t) => Some(t),
            Built::Plain(_) => None,
        }
    }
}

/// A validated configuration, ready to run.
#[derive(Debug, Clone)]
pub struct Instance {
    pub field: Field,
    pub built: Built,
    pub sigma: LinearEndo,
    pub fixture: Option<FixtureKind>,
    pub tasks: Vec<(String, Task)>,
    pub seed: u64,
    pub samples: usize,
    pub enumeration_bound: u64,
}

fn build_inline(field: Field, spec: &InlineAlgebra, bound: u64, loc: &str) -> Result<FdAlgebra, ConfigError> {
    let n = spec.table.len();
    let labels = spec
        .labels
        .clone()
        .unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
    let table = table_in(field, &spec.table, &format!("{loc}.table"))?;
    let unit = spec
        .unit
        .as_ref()
        .map(|u| vector_in(field, u, &format!("{loc}.unit")))
        .transpose()?;
    let alg = make_algebra(field, labels, table, unit, spec.only_trivial_idempotents).map_err(|e| invalid(loc, e))?;
    // a declared flag is checked whenever enumeration is feasible
    if spec.only_trivial_idempotents && field.is_finite() {
        if let Ok(actual) = has_only_trivial_idempotents_bruteforce(&alg, bound as u128) {
            if !actual {
                return Err(invalid(
                    format!("{loc}.only_trivial_idempotents"),
                    "the algebra has a nontrivial idempotent",
                ));
            }
        }
    }
    Ok(alg)
}

fn build_algebra(field: Field, spec: &AlgebraSpec, bound: u64) -> Result<(Built, Option<FixtureKind>), ConfigError> {
    let loc = "family";
    let tri = |r: Result<TriangularAlgebra, _>| -> Result<(Built, Option<FixtureKind>), ConfigError> {
        r.map(|t| (Built::Triangular(t), None))
            .map_err(|e: crate::algebra::AlgebraError| invalid(loc, e))
    };
    match spec {
        AlgebraSpec::Tn { n, split } => {
            if *split == 0 || split >= n {
                return Err(invalid("split", format!("split must lie in 1..{n}")));
            }
            tri(upper_triangular_split(*n, *split, field))
        }
        AlgebraSpec::Block { dims, split } => tri(block_upper(dims, *split, field)),
        AlgebraSpec::PolyTriangular { n } => tri(trunc_poly_triangular(*n, field)),
        AlgebraSpec::FullMatrix { n } => full_matrix(*n, field)
            .map(|a| (Built::Plain(a), None))
            .map_err(|e| invalid(loc, e)),
        AlgebraSpec::N3 => fixture_n3(field)
            .map(|f| (Built::Plain(f.algebra), Some(FixtureKind::N3)))
            .map_err(|e| invalid(loc, e)),
        AlgebraSpec::TrianAa0 { n } => {
            if *n < 3 {
                return Err(invalid("n", "trian_AA0 needs N >= 3"));
            }
            fixture_trian_aa0(*n, field)
                .map(|f| (Built::Plain(f.algebra), Some(FixtureKind::Aa0(*n))))
                .map_err(|e| invalid(loc, e))
        }
        AlgebraSpec::Inline { algebra } => Ok((Built::Plain(build_inline(field, algebra, bound, "algebra")?), None)),
        AlgebraSpec::InlineTriangular { a, m, b } => {
            let a = build_inline(field, a, bound, "a")?;
            let b = build_inline(field, b, bound, "b")?;
            let labels = m
                .labels
                .clone()
                .unwrap_or_else(|| (0..m.right.len()).map(|k| format!("m{k}")).collect());
            let left = table_in(field, &m.left, "m.left")?;
            let right = table_in(field, &m.right, "m.right")?;
            let bimod = make_bimodule(&a, &b, labels, left, right).map_err(|e| invalid("m", e))?;
            make_triangular(a, bimod, b)
                .map(|t| (Built::Triangular(t), None))
                .map_err(|e| invalid(loc, e))
        }
    }
}

fn build_sigma(
    field: Field,
    built: &Built,
    fixture: Option<FixtureKind>,
    spec: &SigmaSpec,
) -> Result<LinearEndo, ConfigError> {
    let alg = built.algebra();
    let n = alg.dim();
    let need_tri = |what: &str| invalid("sigma", format!("{what} needs a triangular algebra"));
    let sigma = match spec {
        SigmaSpec::Identity => LinearEndo::identity(field, n),
        SigmaSpec::Fixture => match fixture {
            Some(FixtureKind::N3) => fixture_n3(field).map_err(|e| invalid("sigma", e))?.sigma,
            Some(FixtureKind::Aa0(k)) => fixture_trian_aa0(k, field).map_err(|e| invalid("sigma", e))?.sigma,
            None => return Err(invalid("sigma", "\"fixture\" needs a fixture family")),
        },
        SigmaSpec::DiagSigns(signs) => {
            let t = built.triangular().ok_or_else(|| need_tri("diag_signs"))?;
            let u = t.diag_sign_element(signs).map_err(|e| invalid("sigma.diag_signs", e))?;
            inner_automorphism(alg, &u).ok_or_else(|| invalid("sigma.diag_signs", "element is not invertible"))?
        }
        SigmaSpec::ConjugateBy(u) => {
            if u.len() != n {
                return Err(invalid("sigma.conjugate_by", format!("expected {n} coordinates")));
            }
            let u = vector_in(field, u, "sigma.conjugate_by")?;
            inner_automorphism(alg, &u).ok_or_else(|| invalid("sigma.conjugate_by", "element is not invertible"))?
        }
        SigmaSpec::Parts(p) => {
            let t = built.triangular().ok_or_else(|| need_tri("parts"))?;
            let (da, dm, db) = t.dims();
            if p.m.len() != dm {
                return Err(invalid("sigma.parts.m", format!("expected {dm} coordinates")));
            }
            let parts = AutParts {
                f_sigma: matrix_in(field, &p.f, da, "sigma.parts.f")?,
                g_sigma: matrix_in(field, &p.g, db, "sigma.parts.g")?,
                m_sigma: vector_in(field, &p.m, "sigma.parts.m")?,
                nu_sigma: matrix_in(field, &p.nu, dm, "sigma.parts.nu")?,
            };
            compose_automorphism(t, &parts).map_err(|e| invalid("sigma.parts", e))?
        }
        SigmaSpec::Matrix(rows) => matrix_in(field, rows, n, "sigma.matrix")?,
    };
    is_automorphism(alg, &sigma).map_err(|w| invalid("sigma", format!("not an automorphism: {w}")))?;
    Ok(sigma)
}

/// Rejects tasks whose hypotheses cannot hold for this algebra and σ.
fn check_task(task: Task, inst: &Instance, loc: &str) -> Result<(), ConfigError> {
    let tri = inst.built.triangular();
    let flags = tri.is_some_and(|t| t.flags_hold());
    let sigma_id = inst.sigma.is_identity();
    let fail = |m: &str| Err(invalid(loc, m));
    match task {
        Task::Decompose(target) => {
            if tri.is_none() {
                return fail("decompositions need a triangular algebra");
            }
            let uses_sigma = match target {
                DecomposeTarget::Automorphism => true,
                DecomposeTarget::Map(k) => k.uses_sigma(),
            };
            if uses_sigma && !sigma_id && !flags {
                return fail("σ ≠ Id needs A and B with only trivial idempotents");
            }
        }
        Task::Verify(Theorem::Posner | Theorem::SkewZero) => {
            if tri.is_none() {
                return fail("this theorem needs a triangular algebra");
            }
            if !sigma_id && !flags {
                return fail("σ ≠ Id needs A and B with only trivial idempotents");
            }
        }
        Task::Verify(Theorem::Mayne) => {
            if !flags {
                return fail("needs a triangular algebra with A and B having only trivial idempotents");
            }
        }
        Task::Verify(Theorem::GdLeftMult) => {
            if tri.is_none() {
                return fail("this theorem needs a triangular algebra");
            }
        }
        Task::Verify(Theorem::SharmaDhara) => {
            if inst.built.algebra().left_identity().is_none() {
                return fail("the algebra has no left identity");
            }
        }
        Task::Verify(Theorem::Fixture) => {
            if inst.fixture.is_none() {
                return fail("verify:fixture needs the n3 or trian_AA0 family");
            }
        }
        Task::Idempotents => {
            if !inst.field.is_finite() {
                return fail("enumeration needs a prime field");
            }
        }
        Task::Center | Task::SigmaCenter | Task::Solve(_) => {}
    }
    Ok(())
}

impl RunConfig {
    pub fn validate(&self) -> Result<Instance, ConfigError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(invalid(
                "schema_version",
                format!(
                    "unsupported version {} (expected {SCHEMA_VERSION})",
                    self.schema_version
                ),
            ));
        }
        let field = match self.field {
            FieldSpec::Rational => Field::Rational,
            FieldSpec::Prime(p) => Field::prime(p).map_err(|e| invalid("field.prime", e))?,
        };
        let (built, fixture) = build_algebra(field, &self.algebra, self.enumeration_bound)?;
        let sigma = build_sigma(field, &built, fixture, &self.sigma)?;
        let mut inst = Instance {
            field,
            built,
            sigma,
            fixture,
            tasks: Vec::new(),
            seed: self.seed,
            samples: self.samples,
            enumeration_bound: self.enumeration_bound,
        };
        for (i, s) in self.tasks.iter().enumerate() {
            let loc = format!("tasks[{i}]");
            let task = Task::parse(s).map_err(|m| invalid(&loc, m))?;
            check_task(task, &inst, &loc)?;
            inst.tasks.push((s.clone(), task));
        }
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_family_syntax() {
        let c = RunConfig::from_json(r#"{"family": "T_n", "n": 2, "field": "rational", "tasks": ["center"]}"#).unwrap();
        assert_eq!(c.algebra, AlgebraSpec::Tn { n: 2, split: 1 });
        assert_eq!(c.schema_version, 1);
        let inst = c.validate().unwrap();
        assert_eq!(inst.tasks, vec![("center".to_string(), Task::Center)]);
        assert!(inst.sigma.is_identity());
    }

    #[test]
    fn sigma_forms() {
        let base = |sigma: &str| {
            RunConfig::from_json(&format!(
                r#"{{"family": "T_n", "n": 2, "field": {{"prime": 5}}, "sigma": {sigma}, "tasks": []}}"#
            ))
            .unwrap()
            .validate()
        };
        assert!(!base(r#"{"diag_signs": [1, -1]}"#).unwrap().sigma.is_identity());
        assert!(!base(r#"{"conjugate_by": [1, "1/2", 1]}"#).unwrap().sigma.is_identity());
        let parts = base(r#"{"parts": {"f": [[1]], "g": [[1]], "m": [3], "nu": [[2]]}}"#).unwrap();
        assert!(!parts.sigma.is_identity());
        assert!(base(r#"{"matrix": [[1,0,0],[0,1,0],[0,0,1]]}"#)
            .unwrap()
            .sigma
            .is_identity());
        assert!(matches!(
            base(r#"{"matrix": [[1,0,0],[0,2,0],[0,0,3]]}"#),
            Err(ConfigError::Invalid { .. })
        ));
        assert!(base(r#"{"conjugate_by": [0, 1, 1]}"#).is_err());
        assert!(base(r#""fixture""#).is_err());
    }

    #[test]
    fn task_parsing() {
        assert_eq!(Task::parse("solve:derivation"), Ok(Task::Solve(MapKind::Derivation)));
        assert_eq!(
            Task::parse("decompose:automorphism"),
            Ok(Task::Decompose(DecomposeTarget::Automorphism))
        );
        assert_eq!(Task::parse("verify:posner"), Ok(Task::Verify(Theorem::Posner)));
        assert!(Task::parse("decompose:skew_commuting").is_err());
        assert!(Task::parse("solve").is_err());
        assert!(Task::parse("verify:riemann").is_err());
        assert!(Task::parse("centre").is_err());
    }

    #[test]
    fn invalid_combinations() {
        let run = |s: &str| RunConfig::from_json(s).unwrap().validate().map(|_| ());
        let loc = |r: Result<(), ConfigError>| match r {
            Err(ConfigError::Invalid { location, .. }) => location,
            other => panic!("{other:?}"),
        };
        assert_eq!(
            loc(run(
                r#"{"family": "full_matrix", "n": 2, "tasks": ["center", "decompose:derivation"]}"#
            )),
            "tasks[1]"
        );
        assert_eq!(
            loc(run(
                r#"{"family": "block", "dims": [2, 1], "split": 1, "tasks": ["verify:mayne"]}"#
            )),
            "tasks[0]"
        );
        assert_eq!(
            loc(run(r#"{"family": "T_n", "n": 2, "tasks": ["idempotents"]}"#)),
            "tasks[0]"
        );
        assert_eq!(
            loc(run(r#"{"family": "T_n", "n": 2, "tasks": ["verify:fixture"]}"#)),
            "tasks[0]"
        );
        assert_eq!(
            loc(run(r#"{"schema_version": 2, "family": "T_n", "n": 2, "tasks": []}"#)),
            "schema_version"
        );
        assert_eq!(
            loc(run(r#"{"family": "T_n", "n": 2, "field": {"prime": 9}, "tasks": []}"#)),
            "field.prime"
        );
        assert!(matches!(
            RunConfig::from_json(r#"{"n": 2, "tasks": []}"#),
            Err(ConfigError::Parse { .. })
        ));
    }

    #[test]
    fn inline_triangular_matches_t2() {
        let json = r#"{
            "family": "inline_triangular",
            "a": {"table": [[[1]]], "unit": [1], "only_trivial_idempotents": true},
            "b": {"table": [[[1]]], "unit": [1], "only_trivial_idempotents": true},
            "m": {"left": [[[1]]], "right": [[[1]]]},
            "field": {"prime": 3},
            "tasks": ["solve:derivation", "idempotents"]
        }"#;
        let inst = RunConfig::from_json(json).unwrap().validate().unwrap();
        let t = inst.built.triangular().unwrap();
        assert_eq!(t.dims(), (1, 1, 1));
        assert!(t.flags_hold());
    }

    #[test]
    fn false_flag_rejected_over_finite_field() {
        // K x K has the idempotent (1, 0)
        let json = r#"{
            "family": "inline",
            "algebra": {"table": [[[1,0],[0,0]],[[0,0],[0,1]]], "unit": [1,1], "only_trivial_idempotents": true},
            "field": {"prime": 3},
            "tasks": []
        }"#;
        let err = RunConfig::from_json(json).unwrap().validate().unwrap_err();
        assert!(err.to_string().contains("only_trivial_idempotents"), "{err}");
    }
}
