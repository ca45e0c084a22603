//! Line-oriented check reports.

use std::fmt;
use std::time::Duration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub witness: String,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        passed: bool,
        witness: impl Into<String>,
    ) -> Check {
        Check { id: id.into(), description: description.into(), passed, witness: witness.into() }
    }
}

/// `CHECK <id> <PASS|FAIL> <description>[: <witness>]`
impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "CHECK {} {} {}", self.id, verdict, self.description)?;
        if !self.witness.is_empty() {
            write!(f, ": {}", self.witness)?;
        }
        Ok(())
    }
}

/// An ordered list of checks. Passes iff every check passes.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn check(
        &mut self,
        id: impl Into<String>,
        description: impl Into<String>,
        passed: bool,
        witness: impl Into<String>,
    ) {
        self.push(Check::new(id, description, passed, witness));
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// A named suite run. The duration is kept out of [`fmt::Display`] so that
/// printed reports are byte-identical across runs.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub report: Report,
    pub duration: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.report.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.report.failures().count();
        writeln!(
            f,
            "SUITE {} {} checks={} failed={}",
            self.suite,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.report.len(),
            failed
        )
    }
}
