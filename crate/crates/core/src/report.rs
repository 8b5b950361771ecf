//! Claim-by-claim outcomes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Not evaluated; the reason says which hypothesis was missing.
    Skipped(String),
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Skipped(reason) => write!(f, "skipped: {reason}"),
            v => f.write_str(v.label()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub id: String,
    pub statement: String,
    pub verdict: Verdict,
    /// Supporting data: the first counterexample on failure, computed values otherwise.
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub instance: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(instance: impl Into<String>) -> Report {
        Report {
            instance: instance.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, id: &str, statement: &str, verdict: Verdict, witness: impl Into<String>) {
        self.entries.push(Entry {
            id: id.into(),
            statement: statement.into(),
            verdict,
            witness: witness.into(),
        });
    }

    /// Records a check whose outcome is `Ok(witness)` for pass or `Err(witness)` for fail.
    pub fn record(&mut self, id: &str, statement: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(w) => self.push(id, statement, Verdict::Pass, w),
            Err(w) => self.push(id, statement, Verdict::Fail, w),
        }
    }

    pub fn get(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail)
    }

    /// No entry failed (skips are fine).
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }
}
