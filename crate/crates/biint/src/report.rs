//! The common output envelope every CLI verb emits.
//!
//! A [`Document`] records what was run (`command`), content digests of
//! every file consumed (`inputs`), a free-form `findings` map, and a
//! single `pass` verdict that the binary turns into its exit code.  The
//! envelope is deliberately boring: no timestamps, no hostnames, no
//! version strings — repeated runs over the same inputs must produce
//! byte-identical documents, because the reproduction suite diffs them
//! in CI.
//!
//! Two renderings exist.  [`Document::to_json`] is the machine format
//! (pretty-printed JSON with alphabetically sorted keys, courtesy of the
//! `BTreeMap`-backed [`serde_json::Map`]).  [`Document::to_text`] is an
//! indented human format whose last line is always `result: PASS` or
//! `result: FAIL`, so shell scripts can `tail -1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// One report: command, input digests, findings, verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Document {
    /// The verb path that produced this document, e.g. `model check`.
    pub command: String,
    /// Input name → SHA-256 of the consumed bytes, hex-encoded.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub inputs: BTreeMap<String, String>,
    /// Verb-specific results; keys serialize in sorted order.
    pub findings: serde_json::Map<String, Value>,
    pub pass: bool,
}

/// Hex-encoded SHA-256 of `bytes`.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Document {
    pub fn new(command: impl Into<String>) -> Document {
        Document {
            command: command.into(),
            inputs: BTreeMap::new(),
            findings: serde_json::Map::new(),
            pass: true,
        }
    }

    /// Records an input under `name`, digesting its raw bytes.
    pub fn input(&mut self, name: impl Into<String>, bytes: &[u8]) -> &mut Self {
        self.inputs.insert(name.into(), digest(bytes));
        self
    }

    /// Inserts (or replaces) one finding.
    pub fn finding(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.findings.insert(key.into(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document encoding cannot fail")
    }

    /// Indented plain-text rendering; the final line carries the verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (name, hash) in &self.inputs {
            let _ = writeln!(out, "input {name}: sha256 {hash}");
        }
        if !self.findings.is_empty() {
            out.push_str("findings:\n");
            for (key, value) in &self.findings {
                push_entry(&mut out, 1, &format!("{key}:"), value);
            }
        }
        let _ = writeln!(out, "result: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Writes `lead value` (or `lead` plus a nested block) at `indent`
/// levels of two-space indentation.  Scalar-only arrays stay inline as
/// `[a, b, c]`; arrays of objects get YAML-style dashed items.
fn push_entry(out: &mut String, indent: usize, lead: &str, value: &Value) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Array(items) if items.is_empty() => {
            let _ = writeln!(out, "{pad}{lead} []");
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let inner: Vec<String> = items.iter().map(scalar).collect();
            let joined = inner.join(", ");
            // Short scalar lists stay inline; long ones get one line each.
            if pad.len() + lead.len() + joined.len() <= 76 {
                let _ = writeln!(out, "{pad}{lead} [{joined}]");
            } else {
                let _ = writeln!(out, "{pad}{lead}");
                for item in inner {
                    let _ = writeln!(out, "{pad}  - {item}");
                }
            }
        }
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}{lead}");
            for item in items {
                match item {
                    Value::Object(map) if !map.is_empty() => {
                        let mut entries = map.iter();
                        let (k, v) = entries.next().expect("nonempty");
                        push_entry(out, indent + 1, &format!("- {k}:"), v);
                        for (k, v) in entries {
                            push_entry(out, indent + 2, &format!("{k}:"), v);
                        }
                    }
                    other => push_entry(out, indent + 1, "-", other),
                }
            }
        }
        Value::Object(map) if map.is_empty() => {
            let _ = writeln!(out, "{pad}{lead} {{}}");
        }
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{lead}");
            for (k, v) in map {
                push_entry(out, indent + 1, &format!("{k}:"), v);
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{lead} {}", scalar(other));
        }
    }
}
