//! Small pass/fail report shared by the verification entry points.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// First counterexample or a short summary; empty when passing silently.
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn merge(&mut self, prefix: &str, other: VerifyReport) {
        for c in other.checks {
            self.checks.push(CheckResult {
                name: format!("{prefix}.{}", c.name),
                pass: c.pass,
                detail: c.detail,
            });
        }
    }
}
