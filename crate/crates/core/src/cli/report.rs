use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::{rational_to_string, QuadExt, Rational};

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Item {
    pub name: String,
    pub status: Status,
    /// A message string or a structured value.
    pub detail: Value,
    pub micros: u64,
    /// Exit code this item forces when it does not pass.
    #[serde(skip)]
    pub code: i32,
}

impl Item {
    pub fn pass(name: impl Into<String>, detail: Value) -> Self {
        Item {
            name: name.into(),
            status: Status::Pass,
            detail,
            micros: 0,
            code: EXIT_OK,
        }
    }

    pub fn fail(name: impl Into<String>, detail: Value) -> Self {
        Item {
            name: name.into(),
            status: Status::Fail,
            detail,
            micros: 0,
            code: EXIT_FAIL,
        }
    }

    pub fn error(name: impl Into<String>, detail: Value, code: i32) -> Self {
        Item {
            name: name.into(),
            status: Status::Error,
            detail,
            micros: 0,
            code,
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: Value) -> Self {
        if ok {
            Item::pass(name, detail)
        } else {
            Item::fail(name, detail)
        }
    }

    pub fn timed(mut self, micros: u64) -> Self {
        self.micros = micros;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunMeta {
    pub command: String,
    pub order: usize,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub run: RunMeta,
    pub passed: bool,
    pub items: Vec<Item>,
}

impl Report {
    pub fn new(run: RunMeta, items: Vec<Item>) -> Self {
        let passed = items.iter().all(Item::passed);
        Report { run, passed, items }
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    /// Internal faults beat input errors, which beat verification failures.
    pub fn exit_code(&self) -> i32 {
        self.items
            .iter()
            .filter(|i| !i.passed())
            .map(|i| i.code)
            .max_by_key(|&c| match c {
                EXIT_INTERNAL => 3,
                EXIT_INPUT => 2,
                EXIT_FAIL => 1,
                _ => 0,
            })
            .unwrap_or(EXIT_OK)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per item and a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            let _ = writeln!(
                out,
                "{:<5} {}: {}",
                item.status.as_str(),
                item.name,
                detail_text(&item.detail)
            );
        }
        let failed = self.items.iter().filter(|i| !i.passed()).count();
        let _ = writeln!(
            out,
            "{} of {} checks passed{}",
            self.items.len() - failed,
            self.items.len(),
            if failed == 0 {
                String::new()
            } else {
                format!(", {failed} did not")
            }
        );
        out
    }
}

/// Compact text for a detail value: strings as they are, objects as
/// `key=value` pairs.
pub fn detail_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", detail_text(v)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(xs) => xs.iter().map(detail_text).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(rational_to_string(r))
}

pub fn quad_json(q: &QuadExt) -> Value {
    json!({ "a": rational_to_string(q.a()), "b": rational_to_string(q.b()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn meta() -> RunMeta {
        RunMeta {
            command: "test".into(),
            order: 32,
            seed: 1,
            samples: 100,
            tolerance: 1e-9,
        }
    }

    #[test]
    fn exit_code_precedence() {
        let ok = Item::pass("a", Value::Null);
        let fail = Item::fail("b", Value::Null);
        let input = Item::error("c", Value::Null, EXIT_INPUT);
        let internal = Item::error("d", Value::Null, EXIT_INTERNAL);
        assert_eq!(Report::new(meta(), vec![ok.clone()]).exit_code(), 0);
        assert_eq!(
            Report::new(meta(), vec![ok.clone(), fail.clone()]).exit_code(),
            1
        );
        assert_eq!(
            Report::new(meta(), vec![fail.clone(), input.clone()]).exit_code(),
            2
        );
        assert_eq!(
            Report::new(meta(), vec![internal, input, fail]).exit_code(),
            3
        );
        assert!(Report::new(meta(), vec![]).passed());
    }

    #[test]
    fn machine_shape() {
        let item = Item::pass("cell", quad_json(&QuadExt::new(rat(0, 1), rat(11, 5))));
        let report = Report::new(meta(), vec![item.timed(7)]);
        let v: Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["run"]["order"], 32);
        assert_eq!(v["run"]["seed"], 1);
        assert_eq!(v["items"][0]["status"], "pass");
        assert_eq!(v["items"][0]["detail"]["b"], "11/5");
        assert_eq!(v["items"][0]["micros"], 7);
        assert!(v["items"][0].get("code").is_none());
    }
}
