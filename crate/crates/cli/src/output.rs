use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

use coxeter_shuffle::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Everything a command prints.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: Value,
    pub results: Value,
    /// Check name to `"pass"` or `"fail"`.
    pub checks: Map<String, Value>,
    pub version: String,
}

impl OutputRecord {
    pub fn new(command: &str, parameters: Value) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters,
            results: Value::Object(Map::new()),
            checks: Map::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.insert(name.into(), Value::from(if passed { "pass" } else { "fail" }));
    }

    pub fn checks_from(&mut self, report: &VerificationReport) {
        for c in &report.checks {
            self.check(c.name.clone(), c.passed);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|v| v == "pass")
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["section", "key", "value"])?;
                let mut rows = vec![
                    ("command".to_string(), String::new(), self.command.clone()),
                    ("version".to_string(), String::new(), self.version.clone()),
                ];
                flatten("parameters", "", &self.parameters, &mut rows);
                flatten("results", "", &self.results, &mut rows);
                for (k, v) in &self.checks {
                    rows.push(("checks".to_string(), k.clone(), scalar(v)));
                }
                for (section, key, value) in rows {
                    w.write_record([section, key, value])?;
                }
                w.flush()
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn flatten(section: &str, prefix: &str, v: &Value, rows: &mut Vec<(String, String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(section, &join(k), child, rows);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                flatten(section, &join(&i.to_string()), child, rows);
            }
        }
        other => rows.push((section.to_string(), prefix.to_string(), scalar(other))),
    }
}
