//! Check records and the report they are assembled into.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckRecord {
    pub check_id: String,
    pub citation: String,
    pub expected: Value,
    pub actual: Value,
    pub status: Status,
    /// Seconds.
    pub elapsed: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub version: String,
    pub seed: u64,
    pub config: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub header: ReportHeader,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    /// Sorts the records by id.
    pub fn new(header: ReportHeader, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        Report { header, checks }
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.binary_search_by(|c| c.check_id.as_str().cmp(id)).ok().map(|i| &self.checks[i])
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn render_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.check_id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{}  {:width$}  {:>8.3}s  expected {}  actual {}  [{}]",
                c.status.label(),
                c.check_id,
                c.elapsed,
                compact(&c.expected),
                compact(&c.actual),
                c.citation,
            );
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
