use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub data: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub input_digest: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: &str, input_digest: String, seed: Option<u64>) -> Self {
        Self {
            schema: super::input::SCHEMA_VERSION,
            command: command.to_string(),
            input_digest,
            seed,
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(
        &mut self,
        name: &str,
        status: Status,
        detail: impl Into<String>,
        data: impl Serialize,
    ) {
        self.checks.push(Check {
            name: name.to_string(),
            status,
            detail: detail.into(),
            data: serde_json::to_value(data).expect("report data serializes"),
        });
    }

    /// True iff no check failed; inconclusive checks do not count.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let seed = self.seed.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            s,
            "ncq {}  input {}  seed {seed}",
            self.command, self.input_digest
        );
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Inconclusive => "inconclusive",
            };
            let _ = writeln!(s, "  {tag:<12} {:<22} {}", c.name, c.detail);
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "  {t} ms");
        }
        s
    }
}
