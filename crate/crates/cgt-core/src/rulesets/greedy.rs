//! Greedy Nim: ordinary nim moves, but only on a heap of maximum size.

use super::{format_heap_list, parse_heap_list, ParseError};
use crate::engine::ImpartialPosition;
use crate::types::OutcomeClass;
use std::fmt;
use std::str::FromStr;

/// Multiset of positive heaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyNimPosition {
    heaps: Vec<u32>,
}

impl GreedyNimPosition {
    pub fn new(heaps: Vec<u32>) -> Result<Self, ParseError> {
        if heaps.contains(&0) {
            return Err(ParseError("greedy nim heaps must be positive".into()));
        }
        Ok(GreedyNimPosition { heaps })
    }

    pub fn heaps(&self) -> &[u32] {
        &self.heaps
    }
}

/// Remove a maximum heap, or lower it to any smaller positive size. All
/// maximum heaps are interchangeable, so moves are generated from the first
/// one only — the option list is already free of multiset duplicates.
pub fn greedy_options(p: &GreedyNimPosition) -> Vec<GreedyNimPosition> {
    let Some(&max) = p.heaps.iter().max() else {
        return Vec::new();
    };
    let i = p.heaps.iter().position(|&h| h == max).expect("present");
    let mut removed = p.heaps.clone();
    removed.remove(i);
    let mut out = vec![GreedyNimPosition { heaps: removed }];
    for b in 1..max {
        let mut next = p.heaps.clone();
        next[i] = b;
        out.push(GreedyNimPosition { heaps: next });
    }
    out
}

/// P exactly when the number of maximum heaps is even (the empty position
/// has zero maximum heaps and is P).
pub fn greedy_outcome_closed(p: &GreedyNimPosition) -> OutcomeClass {
    let Some(&max) = p.heaps.iter().max() else {
        return OutcomeClass::P;
    };
    let count = p.heaps.iter().filter(|&&h| h == max).count();
    if count % 2 == 0 {
        OutcomeClass::P
    } else {
        OutcomeClass::N
    }
}

impl ImpartialPosition for GreedyNimPosition {
    fn options(&self) -> Vec<Self> {
        greedy_options(self)
    }

    /// Heap order is irrelevant: the key sorts the multiset.
    fn normalized_key(&self) -> Vec<u8> {
        let mut sorted = self.heaps.clone();
        sorted.sort_unstable();
        let mut key = vec![b'G'];
        for &h in &sorted {
            key.extend_from_slice(&h.to_le_bytes());
        }
        key
    }
}

impl FromStr for GreedyNimPosition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        GreedyNimPosition::new(parse_heap_list(s)?)
    }
}

impl fmt::Display for GreedyNimPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_heap_list(&self.heaps))
    }
}
