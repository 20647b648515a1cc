//! Three-valued search results and node budgets.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Duration;

use serde::{Deserialize, Serialize};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Proved,
    Refuted,
    BudgetExhausted,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// Wall time; excluded from serialized reports so they stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Outcome of a search, carrying a certificate for whichever side of the
/// verdict the producing operation certifies.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome<C> {
    pub verdict: Verdict,
    pub certificate: Option<C>,
    pub stats: SearchStats,
}

impl<C> SearchOutcome<C> {
    pub fn proved(certificate: Option<C>, stats: SearchStats) -> Self {
        Self {
            verdict: Verdict::Proved,
            certificate,
            stats,
        }
    }

    pub fn refuted(certificate: Option<C>, stats: SearchStats) -> Self {
        Self {
            verdict: Verdict::Refuted,
            certificate,
            stats,
        }
    }

    pub fn exhausted(certificate: Option<C>, stats: SearchStats) -> Self {
        Self {
            verdict: Verdict::BudgetExhausted,
            certificate,
            stats,
        }
    }

    pub fn is_proved(&self) -> bool {
        self.verdict == Verdict::Proved
    }

    pub fn is_refuted(&self) -> bool {
        self.verdict == Verdict::Refuted
    }

    pub fn is_exhausted(&self) -> bool {
        self.verdict == Verdict::BudgetExhausted
    }

    pub fn map<D>(self, f: impl FnOnce(C) -> D) -> SearchOutcome<D> {
        SearchOutcome {
            verdict: self.verdict,
            certificate: self.certificate.map(f),
            stats: self.stats,
        }
    }
}

/// Node-count budget shared by the subtrees of one search.
///
/// Counting nodes instead of time keeps runs reproducible.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
    abort: AtomicBool,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
            abort: AtomicBool::new(false),
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Charge one node; returns `false` once the budget is spent or aborted.
    #[inline]
    pub fn tick(&self) -> bool {
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.limit {
            self.abort.store(true, Ordering::Relaxed);
        }
        !self.abort.load(Ordering::Relaxed)
    }

    pub fn exhausted(&self) -> bool {
        self.abort.load(Ordering::Relaxed)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_BUDGET)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_trips_after_limit() {
        let b = Budget::new(3);
        assert!(b.tick() && b.tick() && b.tick());
        assert!(!b.tick());
        assert!(b.exhausted());
    }

    #[test]
    fn verdict_serializes_upper_case() {
        let s = serde_json::to_string(&Verdict::BudgetExhausted).unwrap();
        assert_eq!(s, "\"BUDGET_EXHAUSTED\"");
    }
}
