//! The pipeline's result: one entry per requested query, rendered as
//! line-oriented `key=value` text or as JSON.

use clap::ValueEnum;
use garnish_core::{Error, Value};
use serde_json::json;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryError {
    pub message: String,
    pub unsupported: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryEntry {
    /// The name as the caller asked for it, aliases unresolved.
    pub name: String,
    pub result: Result<Value, QueryError>,
}

impl QueryEntry {
    pub fn new(name: &str, outcome: Result<Value, Error>) -> Self {
        let result = outcome.map_err(|error| QueryError {
            unsupported: error.is_unsupported(),
            message: error.to_string(),
        });
        QueryEntry {
            name: name.to_string(),
            result,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    /// Decoration layer kinds, outermost first; the concrete source at the
    /// end of the chain is not a layer and is not listed.
    pub chain: Vec<String>,
    pub entries: Vec<QueryEntry>,
    pub runtime_ms: u128,
}

impl StatsReport {
    pub fn any_unsupported(&self) -> bool {
        self.entries
            .iter()
            .any(|entry| matches!(&entry.result, Err(error) if error.unsupported))
    }

    pub fn any_error(&self) -> bool {
        self.entries.iter().any(|entry| entry.result.is_err())
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("chain={}\n", self.chain.join("|"));
        for entry in &self.entries {
            match &entry.result {
                Ok(value) => out.push_str(&format!("query.{}={}\n", entry.name, value)),
                Err(error) => {
                    out.push_str(&format!("query.{}=error: {}\n", entry.name, error.message))
                }
            }
        }
        out.push_str(&format!("runtime_ms={}\n", self.runtime_ms));
        out
    }

    pub fn render_json(&self) -> String {
        let queries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|entry| match &entry.result {
                Ok(value) => json!({"name": entry.name, "value": value_json(value)}),
                Err(error) => json!({"name": entry.name, "error": error.message}),
            })
            .collect();
        let report = json!({
            "chain": self.chain,
            "queries": queries,
            "runtime_ms": self.runtime_ms as u64,
        });
        format!("{report}\n")
    }
}

fn value_json(value: &Value) -> serde_json::Value {
    match value {
        Value::Unit => json!("ok"),
        Value::Absent => serde_json::Value::Null,
        Value::Bool(b) => json!(b),
        Value::Count(n) => json!(n),
        Value::Char(c) => json!(c.to_string()),
        Value::Text(s) => json!(s),
    }
}
