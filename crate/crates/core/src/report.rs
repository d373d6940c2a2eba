//! Validation reports shared by every axiom checker.
//!
//! Reports are total: each named check runs over all of its basis instances
//! regardless of earlier failures.

use serde::{Deserialize, Serialize};

const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub violations: usize,
    /// First few violating instances, rendered.
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Accumulates instances of one named check.
pub struct CheckBuilder {
    check: Check,
}

impl CheckBuilder {
    pub fn new(name: impl Into<String>) -> CheckBuilder {
        CheckBuilder { check: Check { name: name.into(), instances: 0, violations: 0, witnesses: Vec::new() } }
    }

    pub fn test(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.check.instances += 1;
        if !ok {
            self.check.violations += 1;
            if self.check.witnesses.len() < MAX_WITNESSES {
                self.check.witnesses.push(witness());
            }
        }
    }

    pub fn finish(self) -> Check {
        self.check
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> ValidationReport {
        ValidationReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Folds another report in, prefixing its check names.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.failed().iter().map(|c| c.name.clone()).collect()
    }

    pub fn witness_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}: {}\n", self.subject, if self.is_valid() { "valid" } else { "INVALID" });
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {} ({} instances, {} violations)\n",
                if c.passed() { "ok" } else { "FAIL" },
                c.name,
                c.instances,
                c.violations
            ));
            for w in &c.witnesses {
                out.push_str(&format!("      witness: {w}\n"));
            }
        }
        out
    }
}
