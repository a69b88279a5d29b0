//! Verification results: one record per axiom, with a counterexample when
//! a check fails, rendered deterministically as text or JSON.

use std::fmt::Display;

use serde::Serialize;

/// Outcome of one axiom over one universe.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AxiomRecord {
    /// Stable kebab-case identifier of the law.
    pub name: String,
    /// What the check quantified over.
    pub universe: String,
    /// Individual comparisons performed (checking stops after a failure).
    pub checks: u64,
    pub status: AxiomStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomStatus {
    Pass,
    Fail,
}

/// The first failing instance of an axiom.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

/// A full run of the axiom suite.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationReport {
    pub axioms: Vec<AxiomRecord>,
    pub summary: Summary,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
    pub checks: u64,
}

impl VerificationReport {
    /// Builds a report; records are sorted by axiom name, so the rendering
    /// is independent of the order checks ran in.
    pub fn new(mut axioms: Vec<AxiomRecord>) -> Self {
        axioms.sort_by(|a, b| a.name.cmp(&b.name));
        let summary = Summary {
            total: axioms.len(),
            failed: axioms
                .iter()
                .filter(|r| r.status == AxiomStatus::Fail)
                .count(),
            checks: axioms.iter().map(|r| r.checks).sum(),
        };
        VerificationReport { axioms, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// One line per axiom plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for record in &self.axioms {
            match record.status {
                AxiomStatus::Pass => {
                    out.push_str(&format!(
                        "pass  {}  checks={}  universe: {}\n",
                        record.name, record.checks, record.universe
                    ));
                }
                AxiomStatus::Fail => {
                    out.push_str(&format!(
                        "FAIL  {}  checks={}  universe: {}\n",
                        record.name, record.checks, record.universe
                    ));
                    if let Some(ce) = &record.counterexample {
                        out.push_str(&format!(
                            "      input: {}\n      lhs:   {}\n      rhs:   {}\n",
                            ce.input, ce.lhs, ce.rhs
                        ));
                    }
                }
            }
        }
        out.push_str(&format!(
            "{}: {}/{} axioms passed, {} checks\n",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.summary.total - self.summary.failed,
            self.summary.total,
            self.summary.checks
        ));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }
}

/// Accumulates comparisons for one axiom; keeps the first counterexample.
pub struct Checker {
    name: String,
    universe: String,
    checks: u64,
    counterexample: Option<Counterexample>,
}

impl Checker {
    pub fn new(name: &str, universe: &str) -> Self {
        Checker {
            name: name.to_owned(),
            universe: universe.to_owned(),
            checks: 0,
            counterexample: None,
        }
    }

    /// Records one equality comparison.
    pub fn eq<T: PartialEq + Display>(&mut self, input: impl Display, lhs: T, rhs: T) {
        self.confirm(input, &lhs, &rhs, lhs == rhs);
    }

    /// Records one check of an arbitrary condition, with both sides already
    /// rendered for the potential counterexample.
    pub fn confirm(
        &mut self,
        input: impl Display,
        lhs: impl Display,
        rhs: impl Display,
        ok: bool,
    ) {
        self.checks += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                input: input.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }

    /// True once a counterexample is recorded; callers use it to stop early.
    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn finish(self) -> AxiomRecord {
        AxiomRecord {
            name: self.name,
            universe: self.universe,
            checks: self.checks,
            status: if self.counterexample.is_none() {
                AxiomStatus::Pass
            } else {
                AxiomStatus::Fail
            },
            counterexample: self.counterexample,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pass_record(name: &str) -> AxiomRecord {
        let mut c = Checker::new(name, "two numbers");
        c.eq(1, 2 + 2, 4);
        c.eq(2, 3 + 3, 6);
        c.finish()
    }

    #[test]
    fn checker_counts_and_passes() {
        let record = pass_record("arith");
        assert_eq!(record.checks, 2);
        assert_eq!(record.status, AxiomStatus::Pass);
        assert!(record.counterexample.is_none());
    }

    #[test]
    fn checker_keeps_the_first_counterexample() {
        let mut c = Checker::new("broken", "numbers");
        c.eq("two", 2 + 2, 5);
        c.eq("three", 3 + 3, 7);
        assert!(c.failed());
        let record = c.finish();
        assert_eq!(record.status, AxiomStatus::Fail);
        let ce = record.counterexample.unwrap();
        assert_eq!(ce.input, "two");
        assert_eq!(ce.lhs, "4");
        assert_eq!(ce.rhs, "5");
    }

    #[test]
    fn report_sorts_and_summarizes() {
        let mut fail = Checker::new("z-last", "numbers");
        fail.eq(0, 1, 2);
        let report = VerificationReport::new(vec![fail.finish(), pass_record("a-first")]);
        assert_eq!(report.axioms[0].name, "a-first");
        assert_eq!(report.summary.total, 2);
        assert_eq!(report.summary.failed, 1);
        assert!(!report.all_passed());

        let text = report.to_text();
        assert!(text.contains("pass  a-first"));
        assert!(text.contains("FAIL  z-last"));
        assert!(text.ends_with("FAIL: 1/2 axioms passed, 3 checks\n"));
    }

    #[test]
    fn report_renders_deterministic_json() {
        let report = VerificationReport::new(vec![pass_record("arith")]);
        let a = report.to_json();
        let b = report.to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"status\": \"pass\""));
        let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed["summary"]["total"], 1);
    }
}
