use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::input::Resolved;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub payload: Value,
}

impl Claim {
    pub fn new(id: impl Into<String>, status: Status, detail: impl Into<String>, payload: Value) -> Self {
        Self { id: id.into(), status, detail: detail.into(), payload }
    }

    /// `Pass` when `ok`, `Fail` otherwise.
    pub fn check(id: impl Into<String>, ok: bool, detail: impl Into<String>, payload: Value) -> Self {
        Self::new(id, if ok { Status::Pass } else { Status::Fail }, detail, payload)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub token: String,
    pub label: String,
    pub sha256: String,
}

impl From<&Resolved> for InputDigest {
    fn from(r: &Resolved) -> Self {
        Self { token: r.token.clone(), label: r.label.clone(), sha256: r.sha256.clone() }
    }
}

/// The outcome of one command. Serializes with fields in declaration order
/// and payload objects with sorted keys.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub claims: Vec<Claim>,
    pub exit_status: i32,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self { command, inputs: Vec::new(), claims: Vec::new(), exit_status: 0 }
    }

    pub fn input(&mut self, r: &Resolved) {
        self.inputs.push(r.into());
    }

    pub fn push(&mut self, claim: Claim) {
        if claim.status == Status::Fail {
            self.exit_status = 1;
        }
        self.claims.push(claim);
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn failed(&self) -> usize {
        self.claims.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for input in &self.inputs {
            writeln!(out, "input {} ({}) sha256 {}", input.token, input.label, input.sha256).unwrap();
        }
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.claims {
            writeln!(out, "{:<12} {:<width$}  {}", c.status.as_str(), c.id, c.detail).unwrap();
        }
        out
    }
}
