use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::Format;

pub const REPORT_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub paper_tag: String,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
    /// The offending basis element or triple, for failures.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub suite: String,
    pub fingerprint: String,
    pub checks: Vec<Check>,
    pub totals: Totals,
}

impl Report {
    pub fn new(suite: &str, fingerprint: &str, checks: Vec<Check>) -> Self {
        let mut totals = Totals::default();
        for c in &checks {
            match c.status {
                Status::Pass => totals.pass += 1,
                Status::Fail => totals.fail += 1,
                Status::Skip => totals.skip += 1,
            }
        }
        Report {
            version: REPORT_VERSION.into(),
            suite: suite.into(),
            fingerprint: fingerprint.into(),
            checks,
            totals,
        }
    }

    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    /// `0` if no check failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

fn short(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            let width = report.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
            let _ = writeln!(out, "suite {} (conventions {})", report.suite, &report.fingerprint[..report.fingerprint.len().min(16)]);
            for c in &report.checks {
                let status = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                let _ = write!(
                    out,
                    "{status}  {:width$}  expected {}  actual {}",
                    c.id,
                    short(&c.expected),
                    short(&c.actual)
                );
                if let Some(ms) = c.millis {
                    let _ = write!(out, "  {ms} ms");
                }
                let _ = writeln!(out, "  [{}]", c.paper_tag);
                if let Some(d) = &c.detail {
                    let _ = writeln!(out, "      {d}");
                }
            }
            let t = report.totals;
            let _ = writeln!(out, "{} passed, {} failed, {} skipped", t.pass, t.fail, t.skip);
            out
        }
    }
}
