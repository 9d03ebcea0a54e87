//! Counted, order-independent warning log.
//!
//! Tolerant ingestion skips data it cannot use instead of failing; every skip
//! is recorded here so reports can surface it. Messages are keyed in a
//! `BTreeMap`, which keeps the log identical across runs and across input
//! permutations.

use std::collections::BTreeMap;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WarningLog {
    counts: BTreeMap<String, u64>,
}

impl WarningLog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one occurrence of `message`.
    pub fn warn(&mut self, message: impl Into<String>) {
        *self.counts.entry(message.into()).or_insert(0) += 1;
    }

    /// Folds another log into this one, adding up counts.
    pub fn merge(&mut self, other: &WarningLog) {
        for (message, count) in &other.counts {
            *self.counts.entry(message.clone()).or_insert(0) += count;
        }
    }

    /// Total occurrences across all messages.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of distinct messages.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn contains(&self, message: &str) -> bool {
        self.counts.contains_key(message)
    }

    /// Distinct messages with their counts, sorted by message.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(m, c)| (m.as_str(), *c))
    }
}
