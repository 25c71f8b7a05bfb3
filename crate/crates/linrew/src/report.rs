//! Verdicts, exit codes, and the report object every command returns.

use serde_json::{json, Value};

/// Outcome class of a check; the process exit code follows it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The property holds or the computation succeeded (exit 0).
    Holds,
    /// A concrete witness against the property was found (exit 1).
    Witness,
    /// Fuel or budget ran out before a verdict (exit 2).
    Unknown,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Holds => 0,
            Verdict::Witness => 1,
            Verdict::Unknown => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Witness => "witness",
            Verdict::Unknown => "unknown",
        }
    }
}

/// What a command prints: deterministic human text and a schema-stable JSON
/// mirror.
pub struct Report {
    pub verdict: Verdict,
    pub human: Vec<String>,
    pub json: Value,
}

impl Report {
    pub fn new(command: &str, verdict: Verdict, payload: Value, human: Vec<String>) -> Self {
        Report {
            verdict,
            human,
            json: json!({
                "schema": 1,
                "command": command,
                "verdict": verdict.label(),
                "payload": payload,
            }),
        }
    }
}
