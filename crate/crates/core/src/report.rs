use serde::{Deserialize, Serialize};

/// Outcome of one exhaustive law check.
///
/// `Fail` keeps the first lexicographic counterexample plus the total count,
/// which is enough for reproducible diagnostics without flooding reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { witness: String, count: usize },
    Undetermined { bound: usize },
    Cap { cap: usize },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub law: String,
    pub verdict: Verdict,
}

/// A named bundle of law checks plus informational notes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, law: impl Into<String>, verdict: Verdict) {
        self.checks.push(Check {
            law: law.into(),
            verdict,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.is_pass())
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.verdict.is_pass())
    }
}

/// Folds a stream of witnesses into a `Verdict`, keeping only the first
/// (iteration order is the caller's lexicographic order) and the count.
pub struct LawScan {
    first: Option<String>,
    count: usize,
}

impl LawScan {
    pub fn new() -> Self {
        LawScan {
            first: None,
            count: 0,
        }
    }

    pub fn violation(&mut self, witness: impl FnOnce() -> String) {
        if self.first.is_none() {
            self.first = Some(witness());
        }
        self.count += 1;
    }

    pub fn verdict(self) -> Verdict {
        match self.first {
            None => Verdict::Pass,
            Some(witness) => Verdict::Fail {
                witness,
                count: self.count,
            },
        }
    }
}

impl Default for LawScan {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_keeps_first_witness_and_counts_all() {
        let mut scan = LawScan::new();
        scan.violation(|| "first".into());
        scan.violation(|| "second".into());
        assert_eq!(
            scan.verdict(),
            Verdict::Fail {
                witness: "first".into(),
                count: 2
            }
        );
    }

    #[test]
    fn empty_scan_passes() {
        assert_eq!(LawScan::new().verdict(), Verdict::Pass);
    }
}
