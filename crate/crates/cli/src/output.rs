//! Command reports: a fixed JSON shape and a plain-text rendering of it.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};
use superpair::Report;

use crate::format::canonical_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => crate::EXIT_PASS,
            Status::Fail => crate::EXIT_FAIL,
            Status::InputError => crate::EXIT_INPUT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessJson {
    pub indices: Vec<(String, usize)>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyJson {
    pub name: String,
    pub passed: bool,
    /// Reported but not counted towards the status.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub diagnostic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportJson {
    pub subject: String,
    pub properties: Vec<PropertyJson>,
}

impl ReportJson {
    /// Converts a rendered report; properties named by `diagnostic` do not
    /// affect the status.
    pub fn new(r: &Report<String>, diagnostic: impl Fn(&str) -> bool) -> ReportJson {
        ReportJson {
            subject: r.subject.clone(),
            properties: r
                .properties
                .iter()
                .map(|p| PropertyJson {
                    name: p.name.clone(),
                    passed: p.passed,
                    diagnostic: diagnostic(&p.name),
                    note: p.note.clone(),
                    witnesses: p
                        .witnesses
                        .iter()
                        .map(|w| WitnessJson { indices: w.indices.clone(), lhs: w.lhs.clone(), rhs: w.rhs.clone() })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_report(r: &Report<String>) -> ReportJson {
        ReportJson::new(r, |_| false)
    }

    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed || p.diagnostic)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub status: Status,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub reports: Vec<ReportJson>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub metadata: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl CommandReport {
    pub fn to_json(&self) -> String {
        canonical_json(&serde_json::to_value(self).expect("reports serialize"))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::InputError => "INPUT ERROR",
        };
        let _ = writeln!(s, "{}: {status} (field {})", self.command, self.field);
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        for r in &self.reports {
            let _ = writeln!(s, "{}", r.subject);
            for p in &r.properties {
                let mark = match (p.passed, p.diagnostic) {
                    (true, _) => "ok",
                    (false, false) => "FAILED",
                    (false, true) => "failed (diagnostic)",
                };
                let _ = writeln!(s, "  {:<40} {mark}", p.name);
                if let Some(n) = &p.note {
                    let _ = writeln!(s, "    {n}");
                }
                for w in &p.witnesses {
                    let idx: Vec<String> = w.indices.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(s, "    at {}: lhs [{}] rhs [{}]", idx.join(" "), w.lhs.join(", "), w.rhs.join(", "));
                }
            }
        }
        for (k, v) in &self.metadata {
            match v {
                Value::Array(items) => {
                    let _ = writeln!(s, "{k}:");
                    for item in items {
                        let _ = writeln!(s, "  - {}", item.as_str().map(str::to_string).unwrap_or_else(|| item.to_string()));
                    }
                }
                _ => {
                    let _ = writeln!(s, "{k}: {v}");
                }
            }
        }
        if let Some(path) = &self.output_file {
            let _ = writeln!(s, "output written to {path}");
        } else if let Some(o) = &self.output {
            let _ = write!(s, "output:\n{}", canonical_json(o));
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(s, "elapsed: {} ms", t.elapsed_ms);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use superpair::{PropertyOutcome, Witness};

    fn sample() -> Report<String> {
        let mut r = Report::new("things");
        r.push(PropertyOutcome::pass("a"));
        r.push(PropertyOutcome {
            name: "b".into(),
            passed: false,
            witnesses: vec![Witness { indices: vec![("x".into(), 1)], lhs: vec!["1".into()], rhs: vec!["0".into()] }],
            note: None,
        });
        r
    }

    #[test]
    fn diagnostics_do_not_fail() {
        assert!(!ReportJson::from_report(&sample()).passed());
        assert!(ReportJson::new(&sample(), |n| n == "b").passed());
    }

    #[test]
    fn text_shows_witnesses() {
        let c = CommandReport {
            command: "check lie".into(),
            status: Status::Fail,
            field: "Q".into(),
            error: None,
            reports: vec![ReportJson::from_report(&sample())],
            metadata: Map::new(),
            output: None,
            output_file: None,
            timing: None,
        };
        let t = c.to_text();
        assert!(t.contains("check lie: FAIL"));
        assert!(t.contains("at x=1: lhs [1] rhs [0]"));
        let j = c.to_json();
        assert!(j.contains("\"status\": \"fail\""));
        assert!(!j.contains("diagnostic"));
    }
}
