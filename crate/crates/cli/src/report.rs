use std::collections::BTreeMap;
use std::fmt::Write as _;

use lanke_core::lanke::Multiplicities;
use lanke_core::Partition;
use serde::{Deserialize, Serialize};

/// The deterministic part of a run: everything except timings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub clauses: BTreeMap<String, Clause>,
    pub values: BTreeMap<String, u128>,
    pub tables: BTreeMap<String, BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub passed: bool,
    /// Whether passing was the expected outcome.
    pub expected_pass: bool,
    pub checked: usize,
    pub witnesses: Vec<String>,
}

impl Clause {
    pub fn new(passed: bool, checked: usize, witnesses: Vec<String>) -> Self {
        Clause {
            passed,
            expected_pass: true,
            checked,
            witnesses,
        }
    }

    pub fn as_expected(&self) -> bool {
        self.passed == self.expected_pass
    }
}

/// What gets printed: the report plus how it was obtained.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub report: Report,
    pub cached: bool,
    pub timings_ms: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn clause(&mut self, name: &str, clause: Clause) {
        self.clauses.insert(name.to_string(), clause);
    }

    pub fn value(&mut self, name: &str, v: u128) {
        self.values.insert(name.to_string(), v);
    }

    pub fn table(&mut self, name: &str, m: &Multiplicities) {
        let t = m.iter().map(|(p, &c)| (p.to_string(), c)).collect();
        self.tables.insert(name.to_string(), t);
    }

    pub fn all_as_expected(&self) -> bool {
        self.clauses.values().all(Clause::as_expected)
    }

    /// Stable identifier for caching.
    pub fn cache_key(command: &str, parameters: &BTreeMap<String, String>) -> String {
        let mut key = command.to_string();
        for (k, v) in parameters {
            let _ = write!(key, "_{k}-{v}");
        }
        key.chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '.' })
            .collect()
    }
}

/// Sorted-key JSON: `serde_json::Value` objects keep keys ordered.
pub fn to_json(envelope: &Envelope) -> String {
    let value = serde_json::to_value(envelope).expect("reports serialize");
    serde_json::to_string_pretty(&value).expect("values serialize")
}

fn by_partition(table: &BTreeMap<String, u64>) -> Vec<(String, u64)> {
    let mut rows: Vec<(Option<Partition>, String, u64)> =
        table.iter().map(|(k, &v)| (k.parse().ok(), k.clone(), v)).collect();
    rows.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    rows.into_iter().map(|(_, k, v)| (k, v)).collect()
}

pub fn to_text(envelope: &Envelope) -> String {
    let r = &envelope.report;
    let mut out = String::new();
    let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let _ = writeln!(out, "{} {}", r.command, params.join(" "));
    for (name, table) in &r.tables {
        let _ = writeln!(out, "{name}:");
        if table.is_empty() {
            let _ = writeln!(out, "  (none)");
        }
        for (p, c) in by_partition(table) {
            let _ = writeln!(out, "  ({p}): {c}");
        }
    }
    for (name, v) in &r.values {
        let _ = writeln!(out, "{name}: {v}");
    }
    for (name, c) in &r.clauses {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let note = if c.expected_pass { "" } else { " (failure expected)" };
        let _ = write!(out, "{status} {name}{note} [{} checked]", c.checked);
        if !c.witnesses.is_empty() {
            let _ = write!(out, ": {}", c.witnesses.join("; "));
        }
        out.push('\n');
    }
    let timings: Vec<String> = envelope.timings_ms.iter().map(|(k, v)| format!("{k} {v:.1} ms")).collect();
    let source = if envelope.cached { "cached" } else { "computed" };
    let _ = writeln!(out, "{source}; {}", timings.join(", "));
    out
}
