//! Rotisserie Nim: heaps in a queue; each move serves the front heap
//! (remove it, or lower it and send it to the back).

use super::{format_heap_list, parse_heap_list, ParseError};
use crate::engine::ImpartialPosition;
use crate::types::OutcomeClass;
use std::fmt;
use std::str::FromStr;

/// Queue of positive heaps, front first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotisseriePosition {
    queue: Vec<u32>,
}

impl RotisseriePosition {
    pub fn new(queue: Vec<u32>) -> Result<Self, ParseError> {
        if queue.contains(&0) {
            return Err(ParseError("rotisserie heaps must be positive".into()));
        }
        Ok(RotisseriePosition { queue })
    }

    pub fn queue(&self) -> &[u32] {
        &self.queue
    }
}

/// Remove the front heap, or lower it to any smaller positive size and
/// requeue it at the back.
pub fn rotisserie_options(p: &RotisseriePosition) -> Vec<RotisseriePosition> {
    let Some((&front, rest)) = p.queue.split_first() else {
        return Vec::new();
    };
    let mut out = vec![RotisseriePosition {
        queue: rest.to_vec(),
    }];
    for b in 1..front {
        let mut next = rest.to_vec();
        next.push(b);
        out.push(RotisseriePosition { queue: next });
    }
    out
}

/// How the all-heaps-≥-2 rule counts positions of the minimum heap.
///
/// `OneBased` numbers the queue h1..hm and is the reading under which the
/// rule matches exhaustive search; `ZeroBased` numbers it h0..h(m-1) and is
/// kept so the verifier can demonstrate that reading fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjnimIndexing {
    OneBased,
    ZeroBased,
}

/// Queues whose heaps are all ≥ 2: N exactly when the length is odd or the
/// first occurrence of the minimum heap sits at an even index.
fn all_big_outcome(queue: &[u32], indexing: AdjnimIndexing) -> OutcomeClass {
    let min = *queue.iter().min().expect("nonempty");
    let first_min = queue.iter().position(|&h| h == min).expect("present");
    let (odd_length, even_min_index) = match indexing {
        AdjnimIndexing::OneBased => (queue.len() % 2 == 1, (first_min + 1) % 2 == 0),
        AdjnimIndexing::ZeroBased => ((queue.len() - 1) % 2 == 1, first_min % 2 == 0),
    };
    if odd_length || even_min_index {
        OutcomeClass::N
    } else {
        OutcomeClass::P
    }
}

pub fn rotisserie_outcome_closed(p: &RotisseriePosition) -> Option<OutcomeClass> {
    rotisserie_outcome_closed_with(p, AdjnimIndexing::OneBased)
}

/// The characterized queue families:
///
/// - empty: P; single heap: N;
/// - every heap ≥ 2: decided by the minimum-index rule above;
/// - two heaps (a0, a1) with a0 the front: N exactly when a0 > a1;
/// - three heaps with front 1: P exactly when a1 > a2;
/// - three heaps with front ≥ 2 and a 1 present: P exactly when a1 > 1 and
///   a2 = 1.
///
/// Longer queues that mix 1s with bigger heaps return `None`.
pub fn rotisserie_outcome_closed_with(
    p: &RotisseriePosition,
    indexing: AdjnimIndexing,
) -> Option<OutcomeClass> {
    let q = &p.queue;
    match q.len() {
        0 => Some(OutcomeClass::P),
        1 => Some(OutcomeClass::N),
        _ if q.iter().all(|&h| h >= 2) => Some(all_big_outcome(q, indexing)),
        2 => Some(if q[0] > q[1] {
            OutcomeClass::N
        } else {
            OutcomeClass::P
        }),
        3 if q[0] == 1 => Some(if q[1] > q[2] {
            OutcomeClass::P
        } else {
            OutcomeClass::N
        }),
        3 => Some(if q[1] > 1 && q[2] == 1 {
            OutcomeClass::P
        } else {
            OutcomeClass::N
        }),
        _ => None,
    }
}

impl ImpartialPosition for RotisseriePosition {
    fn options(&self) -> Vec<Self> {
        rotisserie_options(self)
    }

    /// Order matters in a queue: the key is the verbatim sequence.
    fn normalized_key(&self) -> Vec<u8> {
        let mut key = vec![b'R'];
        for &h in &self.queue {
            key.extend_from_slice(&h.to_le_bytes());
        }
        key
    }
}

impl FromStr for RotisseriePosition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        RotisseriePosition::new(parse_heap_list(s)?)
    }
}

impl fmt::Display for RotisseriePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_heap_list(&self.queue))
    }
}
