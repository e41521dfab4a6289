use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;
use twistclass::claims::ClaimResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimRow {
    pub anchor: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl From<&ClaimResult> for ClaimRow {
    fn from(c: &ClaimResult) -> Self {
        ClaimRow {
            anchor: c.anchor.clone(),
            expected: c.expected.clone(),
            actual: c.actual.clone(),
            pass: c.pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub result: Value,
    pub claims: Vec<ClaimRow>,
    /// Human-readable rendering.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            result: Value::Null,
            claims: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = self.text.join("\n");
                out.push('\n');
                out
            }
            Format::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("report serializes");
                out.push('\n');
                out
            }
            Format::Csv => self.csv(),
        }
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.claims.is_empty() {
            w.write_record(["key", "value"]).expect("in-memory write");
            let mut rows = Vec::new();
            flatten("", &self.result, &mut rows);
            for (k, v) in rows {
                w.write_record([k, v]).expect("in-memory write");
            }
        } else {
            w.write_record(["anchor", "expected", "actual", "pass"])
                .expect("in-memory write");
            for c in &self.claims {
                w.write_record([&c.anchor, &c.expected, &c.actual, &c.pass.to_string()])
                    .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 input")
    }
}

/// Dotted paths to scalar leaves, arrays of scalars joined by spaces.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), joined.join(" ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
