//! Report assembly. JSON objects use `serde_json`'s sorted maps, so output
//! is key-sorted; rationals are `"p/q"` strings; the only run-dependent
//! field is the top-level `timing` object.

use std::time::Duration;

use fiberbound::bounds::BoundReport;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::{CliError, Exit};

pub const SCHEMA_VERSION: u64 = 1;

/// `"p/q"` with `q >= 1`, also for integers.
pub fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub lines: Vec<String>,
    pub exit: Exit,
}

fn engine() -> Value {
    json!({ "name": "fiberbound", "version": env!("CARGO_PKG_VERSION") })
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }

    /// Pretty JSON; `elapsed` adds the `timing` object.
    pub fn to_json(&self, elapsed: Option<Duration>) -> String {
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("engine".into(), engine());
        top.insert("exit_code".into(), json!(self.exit.code()));
        top.insert("input".into(), self.input.clone());
        top.insert("result".into(), self.result.clone());
        top.insert("schema_version".into(), json!(SCHEMA_VERSION));
        if let Some(t) = elapsed {
            top.insert(
                "timing".into(),
                json!({ "elapsed_ms": t.as_millis() as u64 }),
            );
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn error_json(command: &str, e: &CliError) -> String {
    let v = json!({
        "command": command,
        "engine": engine(),
        "error": { "message": e.message },
        "exit_code": e.exit.code(),
        "schema_version": SCHEMA_VERSION,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

pub fn bound_json(r: &BoundReport) -> Value {
    json!({
        "kind": r.kind.name(),
        "inputs": r.inputs,
        "lhs": rational(&r.lhs),
        "margin": rational(&r.margin),
        "rhs": rational(&r.rhs),
        "satisfied": r.satisfied,
    })
}

pub fn bound_lines(r: &BoundReport) -> Vec<String> {
    let verdict = if r.satisfied { "satisfied" } else { "violated" };
    let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
    vec![
        format!(
            "bound {}: {} <= {} {} (margin {})",
            r.kind, r.lhs, r.rhs, verdict, r.margin
        ),
        format!("  inputs: {}", inputs.join(" ")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_always_have_a_denominator() {
        assert_eq!(rational(&BigRational::from_integer(37.into())), "37/1");
        assert_eq!(rational(&BigRational::new((-6).into(), 4.into())), "-3/2");
    }

    #[test]
    fn json_keys_are_sorted() {
        let r = Report {
            command: "invariants",
            input: json!({ "zeta": 1, "alpha": 2 }),
            result: json!({}),
            lines: vec![],
            exit: Exit::Success,
        };
        let s = r.to_json(None);
        assert!(s.find("\"alpha\"").unwrap() < s.find("\"zeta\"").unwrap());
        assert!(s.find("\"command\"").unwrap() < s.find("\"engine\"").unwrap());
        assert!(!s.contains("timing"));
    }
}
