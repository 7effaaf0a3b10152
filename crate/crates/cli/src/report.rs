use std::time::Duration;

use rbx_core::{Document, Error, Witness};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub label: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        let show = |v: &[rbx_core::Scalar]| v.iter().map(|s| s.to_canonical_string()).collect();
        WitnessJson { label: w.label.clone(), indices: w.indices.clone(), lhs: show(&w.lhs), rhs: show(&w.rhs) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorJson {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

/// The machine-readable outcome of one command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorJson>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    pub digest: String,
    pub timing: Timing,
}

/// What a command hands back before it is rendered.
#[derive(Debug, Default)]
pub struct Outcome {
    pub pass: bool,
    pub failures: Vec<Witness>,
    pub result: Value,
    pub lines: Vec<String>,
    /// An instance file to print in place of the text report.
    pub document: Option<Document>,
}

impl Outcome {
    pub fn from_verdict(verdict: rbx_core::Verdict) -> Self {
        Outcome { pass: verdict.holds(), failures: verdict.failures, ..Outcome::default() }
    }

    pub fn passed() -> Self {
        Outcome { pass: true, ..Outcome::default() }
    }

    pub fn line(mut self, line: impl Into<String>) -> Self {
        self.lines.push(line.into());
        self
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::Characteristic { .. } => "characteristic",
        Error::Capacity(_) => "capacity",
        Error::Precondition(_) => "precondition",
    }
}

/// Exit status: 0 pass, 1 fail, 2 any error.
pub fn exit_code(result: &Result<Outcome, Error>) -> i32 {
    match result {
        Ok(o) if o.pass => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

pub fn digest(input: &[u8]) -> String {
    hex::encode(Sha256::digest(input))
}

pub fn build(command: &str, result: &Result<Outcome, Error>, digest: String, elapsed: Duration) -> Report {
    let timing = Timing { elapsed_ms: elapsed.as_millis() as u64 };
    match result {
        Ok(o) => {
            let failures: Vec<WitnessJson> = o.failures.iter().map(WitnessJson::from).collect();
            let mut value = o.result.clone();
            if let Some(doc) = &o.document {
                let doc = serde_json::to_value(doc).expect("documents serialize");
                match &mut value {
                    Value::Object(map) => {
                        map.insert("document".into(), doc);
                    }
                    _ => value = serde_json::json!({ "document": doc }),
                }
            }
            Report {
                command: command.to_string(),
                verdict: if o.pass { Status::Pass } else { Status::Fail },
                witness: failures.first().cloned(),
                failures,
                error: None,
                result: value,
                digest,
                timing,
            }
        }
        Err(e) => Report {
            command: command.to_string(),
            verdict: Status::Error,
            witness: None,
            failures: vec![],
            error: Some(ErrorJson { kind: error_kind(e), message: e.to_string() }),
            result: Value::Null,
            digest,
            timing,
        },
    }
}
