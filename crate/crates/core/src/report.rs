//! Structured verification results shared by the oracle, the series checks
//! and the identity suite.

use std::fmt;

use serde::Serialize;

/// Theorem checks fail the run; conjecture checks only report evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Theorem,
    Conjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub kind: CheckKind,
    pub range: String,
    pub status: Status,
    pub mismatches: Vec<Mismatch>,
    /// Human-readable evidence lines, e.g. one per verified equality.
    pub details: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, range: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            kind: CheckKind::Theorem,
            range: range.into(),
            status: Status::Pass,
            mismatches: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn conjecture(mut self) -> Self {
        self.kind = CheckKind::Conjecture;
        self
    }

    pub fn mismatch(&mut self, location: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.mismatches.push(Mismatch {
            location: location.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
        self.status = Status::Fail;
    }

    /// Records a mismatch unless `expected == actual`.
    pub fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        location: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> bool {
        if expected == actual {
            true
        } else {
            self.mismatch(location, expected, actual);
            false
        }
    }

    pub fn detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Does this report make the whole run fail?
    pub fn is_blocking(&self) -> bool {
        self.kind == CheckKind::Theorem && !self.passed()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match (self.status, self.kind) {
            (Status::Pass, _) => "PASS",
            (Status::Fail, CheckKind::Theorem) => "FAIL",
            (Status::Fail, CheckKind::Conjecture) => "FINDING",
        };
        writeln!(f, "[{tag}] {} ({})", self.name, self.range)?;
        for d in &self.details {
            writeln!(f, "  {d}")?;
        }
        for m in &self.mismatches {
            writeln!(
                f,
                "  mismatch at {}: expected {}, got {}",
                m.location, m.expected, m.actual
            )?;
        }
        Ok(())
    }
}

/// Several reports rolled into one verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub status: Status,
    /// Conjecture checks that turned up counterexamples.
    pub findings: usize,
    pub checks: Vec<CheckReport>,
}

impl Aggregate {
    pub fn new(checks: Vec<CheckReport>) -> Self {
        let status = if checks.iter().any(CheckReport::is_blocking) {
            Status::Fail
        } else {
            Status::Pass
        };
        let findings = checks
            .iter()
            .filter(|c| c.kind == CheckKind::Conjecture && !c.passed())
            .count();
        Aggregate {
            status,
            findings,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Names of the theorem checks that failed.
    pub fn failing(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.is_blocking())
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Aggregate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{c}")?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let theorems = self.checks.iter().filter(|c| c.kind == CheckKind::Theorem).count();
        write!(
            f,
            "{verdict}: {} of {theorems} theorem checks passed",
            theorems - self.failing().len()
        )?;
        if self.findings > 0 {
            write!(f, "; {} conjecture finding(s)", self.findings)?;
        }
        writeln!(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_mismatches() {
        let mut r = CheckReport::new("demo", "n=1..3");
        assert!(r.expect_eq("n=1", &1, &1));
        assert!(r.passed());
        assert!(!r.expect_eq("n=2", &1, &2));
        assert!(!r.passed());
        assert_eq!(r.mismatches.len(), 1);
    }

    #[test]
    fn conjecture_failures_do_not_block() {
        let mut c = CheckReport::new("guess", "n=1").conjecture();
        c.mismatch("n=1", "x", "y");
        let agg = Aggregate::new(vec![c, CheckReport::new("ok", "n=1")]);
        assert!(agg.passed());
        assert_eq!(agg.findings, 1);
        assert!(agg.to_string().contains("[FINDING] guess"));

        let mut t = CheckReport::new("thm", "n=1");
        t.mismatch("n=1", 0, 1);
        let agg = Aggregate::new(vec![t]);
        assert!(!agg.passed());
        assert_eq!(agg.failing(), vec!["thm"]);
    }
}
