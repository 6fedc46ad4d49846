use std::fmt::{self, Display, Write as _};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub citation: String,
}

impl Check {
    pub fn new(label: impl Into<String>, expected: impl Display, computed: impl Display, citation: &str) -> Check {
        Check {
            label: label.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            citation: citation.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing: Timing,
}

impl ScenarioReport {
    /// A report whose status follows from its checks: pass iff every check
    /// matches exactly.
    pub fn from_checks(scenario: &str, checks: Vec<Check>, witnesses: Vec<Witness>, elapsed_ms: u64) -> ScenarioReport {
        let status = if checks.iter().all(Check::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        ScenarioReport {
            scenario: scenario.to_string(),
            status,
            checks,
            witnesses,
            error: None,
            timing: Timing { elapsed_ms },
        }
    }

    pub fn errored(scenario: &str, error: String, elapsed_ms: u64) -> ScenarioReport {
        ScenarioReport {
            scenario: scenario.to_string(),
            status: Status::Error,
            checks: Vec::new(),
            witnesses: Vec::new(),
            error: Some(error),
            timing: Timing { elapsed_ms },
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail | Status::Error => 1,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario: {}", self.scenario);
        let _ = writeln!(out, "status:   {}", self.status);
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error:    {e}");
        }
        for c in &self.checks {
            let mark = if c.passed() { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {}", c.label);
            if c.passed() {
                let _ = writeln!(out, "         = {}", c.expected);
            } else {
                let _ = writeln!(out, "         expected {}", c.expected);
                let _ = writeln!(out, "         computed {}", c.computed);
            }
            let _ = writeln!(out, "         claim: {}", c.citation);
        }
        if !self.witnesses.is_empty() {
            let _ = writeln!(out, "witnesses:");
            for w in &self.witnesses {
                let _ = writeln!(out, "  {}: {}", w.label, w.value);
            }
        }
        let _ = writeln!(out, "elapsed: {} ms", self.timing.elapsed_ms);
        out
    }
}
