//! JSON run reports and exit codes.

use imtw::Error;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub status: &'static str,
    pub exit_code: i32,
    pub result: Option<Value>,
    pub verification: Option<Value>,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport { command, inputs: Vec::new(), status: "ok", exit_code: EXIT_OK, result: None, verification: None, error: None, wall_ms: None }
    }

    pub fn fail(&mut self, e: &Error) {
        let (status, code) = classify(e);
        self.status = status;
        self.exit_code = code;
        self.error = Some(e.to_string());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn classify(e: &Error) -> (&'static str, i32) {
    match e {
        Error::Infeasible(_) => ("infeasible", EXIT_INFEASIBLE),
        Error::Input { .. } => ("input_error", EXIT_INPUT),
        Error::Invariant(_) => ("invariant_violation", EXIT_INVARIANT),
        Error::Resource { .. } => ("resource_limit", EXIT_RESOURCE),
    }
}

pub fn digest(path: &Path, bytes: &[u8]) -> InputDigest {
    InputDigest { path: path.display().to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
}
