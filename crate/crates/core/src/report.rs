use std::fmt;

use serde::Serialize;

/// Outcome of one exact or numeric check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    /// Human-readable statement of what was checked.
    pub anchor: String,
    pub passed: bool,
    /// Empty on success; a residual or the offending values on failure.
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", self.status(), self.id, self.anchor)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Ordered list of checks plus free-form observations that do not affect
/// the pass/fail status.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Keeps only checks whose id starts with `prefix`.
    pub fn filtered(mut self, prefix: &str) -> Self {
        self.checks.retain(|c| c.id.starts_with(prefix));
        self
    }
}
