//! Clause tallies plus the first few failure descriptions.

use serde::{Deserialize, Serialize};

use crate::alcove::{ClauseReport, Tally};

const MAX_FAILURES: usize = 40;

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub clauses: ClauseReport,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record one instance of `clause`; `detail` is only built on failure.
    pub fn check(&mut self, clause: &str, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.clauses.entry(clause.to_string()).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(format!("{clause}: {}", detail()));
            }
        }
    }

    /// Fold in a plain tally table.
    pub fn absorb_clauses(&mut self, rep: &ClauseReport) {
        for (k, t) in rep {
            let e = self.clauses.entry(k.clone()).or_default();
            e.checked += t.checked;
            e.failed += t.failed;
        }
    }

    pub fn merge(&mut self, o: Report) {
        self.absorb_clauses(&o.clauses);
        for f in o.failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
    }

    pub fn checked(&self) -> u64 {
        self.clauses.values().map(|t| t.checked).sum()
    }

    pub fn failed(&self) -> u64 {
        self.clauses.values().map(|t| t.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn tally(&self, clause: &str) -> Tally {
        self.clauses.get(clause).cloned().unwrap_or_default()
    }
}
