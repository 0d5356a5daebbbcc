//! Report schema. Serialization goes through `serde_json::Value`, so object
//! keys come out sorted and a parsed report re-serializes byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exactlin::{vector, Matrix, Scalar};
use crate::maps::LinearEndo;
use crate::structure::ConditionCheck;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// A computation with nothing to verify.
    Ok,
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRecord {
    pub label: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<&ConditionCheck> for ConditionRecord {
    fn from(c: &ConditionCheck) -> Self {
        ConditionRecord {
            label: c.label.clone(),
            holds: c.holds,
            witness: c.witness.clone(),
        }
    }
}

/// One decomposed basis element of a solved space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub index: usize,
    pub components: BTreeMap<String, Value>,
    pub conditions: Vec<ConditionRecord>,
    pub recomposed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskRecord {
    pub task: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bases: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub elements: Vec<ElementRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<ConditionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl TaskRecord {
    pub fn new(task: &str, status: Status) -> Self {
        TaskRecord {
            task: task.into(),
            status,
            dims: BTreeMap::new(),
            bases: BTreeMap::new(),
            elements: Vec::new(),
            conditions: Vec::new(),
            witness: None,
            notes: Vec::new(),
            error: None,
        }
    }

    pub fn error(task: &str, message: String) -> Self {
        let mut r = TaskRecord::new(task, Status::Error);
        r.error = Some(message);
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub ok: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub field: String,
    pub algebra: String,
    pub labels: Vec<String>,
    pub sigma: Vec<Vec<String>>,
    pub seed: u64,
    pub tasks: Vec<TaskRecord>,
    pub summary: Summary,
    pub exit_code: i32,
}

impl RunReport {
    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report is plain data");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(text)
    }
}

pub fn summarize(tasks: &[TaskRecord]) -> (Summary, i32) {
    let mut s = Summary::default();
    for t in tasks {
        match t.status {
            Status::Ok => s.ok += 1,
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Error => s.error += 1,
        }
    }
    let code = if s.fail + s.error > 0 { 1 } else { 0 };
    (s, code)
}

pub fn matrix_json(m: &Matrix) -> Value {
    serde_json::to_value(m.to_strings()).expect("strings serialize")
}

pub fn endo_json(e: &LinearEndo) -> Value {
    matrix_json(e.matrix())
}

pub fn vector_json(v: &[Scalar]) -> Value {
    serde_json::to_value(vector::to_strings(v)).expect("strings serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let mut t = TaskRecord::new("solve:derivation", Status::Ok);
        t.dims.insert("space".into(), 2);
        t.bases.insert("space".into(), vec![vec!["1/2".into(), "0".into()]]);
        let mut e = ElementRecord {
            index: 0,
            components: BTreeMap::new(),
            conditions: vec![ConditionRecord {
                label: "(i)".into(),
                holds: true,
                witness: None,
            }],
            recomposed: true,
            error: None,
        };
        e.components.insert("zeta".into(), Value::Bool(false));
        e.components.insert(
            "alpha".into(),
            vector_json(&vector::from_i64(crate::exactlin::Field::Rational, &[1, -2])),
        );
        t.elements.push(e);
        let tasks = vec![t, TaskRecord::error("verify:mayne", "boom".into())];
        let (summary, exit_code) = summarize(&tasks);
        RunReport {
            schema_version: 1,
            field: "Q".into(),
            algebra: "x".into(),
            labels: vec!["a".into()],
            sigma: vec![vec!["1".into()]],
            seed: 3,
            tasks,
            summary,
            exit_code,
        }
    }

    #[test]
    fn roundtrip_is_byte_identical() {
        let r = sample();
        let s = r.to_json();
        let back = RunReport::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), s);
    }

    #[test]
    fn summary_and_exit() {
        let r = sample();
        assert_eq!(
            r.summary,
            Summary {
                ok: 1,
                pass: 0,
                fail: 0,
                error: 1
            }
        );
        assert_eq!(r.exit_code, 1);
        assert_eq!(summarize(&[TaskRecord::new("center", Status::Pass)]).1, 0);
    }
}
