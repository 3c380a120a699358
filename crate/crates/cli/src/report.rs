//! Machine-readable run reports.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "orbistack-report/1";

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub verdict: String,
    pub exit_code: i32,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// A finished command: verdict, exit code, both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    pub verdict: String,
    pub code: i32,
    pub human: String,
    pub details: Value,
}

impl Finding {
    pub fn new(verdict: impl Into<String>, code: i32, human: String, details: Value) -> Self {
        Finding {
            verdict: verdict.into(),
            code,
            human,
            details,
        }
    }
}

/// A failed command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
    /// Offending input and byte offset, for parse errors.
    pub location: Option<(String, String, usize)>,
}

impl Failure {
    pub fn new(code: i32, kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            kind,
            message: message.into(),
            location: None,
        }
    }

    pub fn details(&self) -> Value {
        let mut d = serde_json::json!({ "kind": self.kind, "message": self.message });
        if let Some((flag, _, offset)) = &self.location {
            d["argument"] = Value::from(flag.clone());
            d["offset"] = Value::from(*offset);
        }
        d
    }

    pub fn human(&self) -> String {
        let mut s = format!("error: {}\n", self.message);
        if let Some((flag, text, offset)) = &self.location {
            let prefix = format!("  {flag} ");
            let col = text.get(..*offset).map_or(*offset, |t| t.chars().count());
            s.push_str(&format!(
                "{prefix}{text}\n{}^\n",
                " ".repeat(prefix.chars().count() + col)
            ));
        }
        s
    }
}
