//! Reports: a text rendering and a versioned JSON document.

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InputEcho {
    pub source: String,
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

/// One cross-verification verdict.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub agree: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub result: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new(command: &str, result: Value, text: String) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: None,
            field: None,
            result,
            checks: Vec::new(),
            timing_ms: None,
            text,
        }
    }

    pub fn check(&mut self, name: &str, agree: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), agree, detail: detail.into() });
    }

    pub fn mismatched(&self) -> bool {
        self.checks.iter().any(|c| !c.agree)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(input) = &self.input {
            out.push_str(&format!("input: {} (n = {})\n", input.source, input.n));
        }
        if let Some(field) = &self.field {
            out.push_str(&format!("field: {field}\n"));
        }
        out.push_str(&self.text);
        if !out.ends_with('\n') {
            out.push('\n');
        }
        for c in &self.checks {
            let verdict = if c.agree { "agree" } else { "MISMATCH" };
            if c.detail.is_empty() {
                out.push_str(&format!("check {}: {verdict}\n", c.name));
            } else {
                out.push_str(&format!("check {}: {verdict} ({})\n", c.name, c.detail));
            }
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("time: {ms} ms\n"));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
