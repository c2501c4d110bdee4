//! Report schema: exact values serialized losslessly (integers as decimal
//! strings, rationals as "num/den"), fitted exponents with fixed formatting.
//! Re-running a scenario reproduces the report bit-for-bit apart from the
//! timing fields.

use crate::scenario::Scenario;
use num::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub scenario: Scenario,
    pub tasks: Vec<TaskReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TaskReport {
    pub id: String,
    pub kind: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tables: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub verdicts: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub ms: u64,
}

pub fn int_str(v: u64) -> Value {
    Value::String(v.to_string())
}

pub fn rat_str(r: &BigRational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn float_str(x: f64) -> Value {
    if x == f64::NEG_INFINITY {
        Value::String("-inf".into())
    } else if x == f64::INFINITY {
        Value::String("inf".into())
    } else {
        Value::String(format!("{x:.6}"))
    }
}

pub fn series_u64(points: &[(u32, u64)]) -> Value {
    Value::Array(
        points
            .iter()
            .map(|(n, v)| Value::Array(vec![int_str(*n as u64), int_str(*v)]))
            .collect(),
    )
}

pub fn series_rat(points: &[(u32, BigRational)]) -> Value {
    Value::Array(
        points
            .iter()
            .map(|(n, v)| Value::Array(vec![int_str(*n as u64), rat_str(v)]))
            .collect(),
    )
}

/// CSV export: one row per scalar/series entry,
/// columns task,section,key,value.
pub fn to_csv(report: &Report) -> String {
    let mut out = String::from("task,section,key,value\n");
    let esc = |s: &str| -> String {
        if s.contains(',') || s.contains('"') {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    };
    for t in &report.tasks {
        out.push_str(&format!("{},status,,{}\n", esc(&t.id), esc(&t.status)));
        for (k, v) in &t.verdicts {
            out.push_str(&format!("{},verdict,{},{}\n", esc(&t.id), esc(k), esc(v)));
        }
        for (name, v) in &t.tables {
            flatten_value(&mut out, &t.id, name, v, &esc);
        }
        if let Some(e) = &t.error {
            out.push_str(&format!("{},error,,{}\n", esc(&t.id), esc(e)));
        }
    }
    out
}

fn flatten_value(out: &mut String, task: &str, name: &str, v: &Value, esc: &dyn Fn(&str) -> String) {
    match v {
        Value::Array(rows) => {
            for (i, row) in rows.iter().enumerate() {
                match row {
                    Value::Array(pair) if pair.len() == 2 => {
                        out.push_str(&format!(
                            "{},{},{},{}\n",
                            esc(task),
                            esc(name),
                            esc(pair[0].as_str().unwrap_or_default()),
                            esc(pair[1].as_str().unwrap_or_default())
                        ));
                    }
                    other => {
                        out.push_str(&format!(
                            "{},{},{},{}\n",
                            esc(task),
                            esc(name),
                            i,
                            esc(&other.to_string())
                        ));
                    }
                }
            }
        }
        Value::String(s) => {
            out.push_str(&format!("{},{},,{}\n", esc(task), esc(name), esc(s)));
        }
        other => {
            out.push_str(&format!("{},{},,{}\n", esc(task), esc(name), esc(&other.to_string())));
        }
    }
}
