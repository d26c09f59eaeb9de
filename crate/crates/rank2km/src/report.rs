//! Pass/fail bookkeeping shared by the verification routines.

use std::fmt;

/// Failures kept verbatim per check; later ones are only counted.
const KEPT_FAILURES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    pub examples: Vec<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>) -> Self {
        CheckResult { name: name.into(), checks: 0, failures: 0, examples: Vec::new() }
    }

    /// Records one check; `detail` is evaluated only on failure.
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_FAILURES {
                self.examples.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn total_checks(&self) -> u64 {
        self.checks.iter().map(|c| c.checks).sum()
    }

    pub fn total_failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed() { "ok  " } else { "FAIL" };
            writeln!(f, "{tag} {:<40} {:>8} checks, {} failures", c.name, c.checks, c.failures)?;
            for e in &c.examples {
                writeln!(f, "       {e}")?;
            }
        }
        Ok(())
    }
}
