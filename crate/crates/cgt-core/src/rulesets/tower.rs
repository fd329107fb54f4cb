//! Tower Nim: heaps in a stack, only the top heap may be lowered or removed.

use super::{format_heap_list, parse_heap_list, ParseError};
use crate::engine::ImpartialPosition;
use crate::types::{Nimber, OutcomeClass};
use std::fmt;
use std::str::FromStr;

/// Stack of positive heaps, bottom first, top last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerNimPosition {
    stack: Vec<u32>,
}

impl TowerNimPosition {
    pub fn new(stack: Vec<u32>) -> Result<Self, ParseError> {
        if stack.contains(&0) {
            return Err(ParseError("tower heaps must be positive".into()));
        }
        Ok(TowerNimPosition { stack })
    }

    pub fn stack(&self) -> &[u32] {
        &self.stack
    }

    /// Ones strictly above the topmost non-one heap, or the whole length
    /// when every heap is 1.
    fn ones_on_top(&self) -> usize {
        self.stack.iter().rev().take_while(|&&h| h == 1).count()
    }
}

/// Remove the top heap, or lower it to any smaller positive size.
pub fn tower_options(p: &TowerNimPosition) -> Vec<TowerNimPosition> {
    let Some((&top, below)) = p.stack.split_last() else {
        return Vec::new();
    };
    let mut out = vec![TowerNimPosition {
        stack: below.to_vec(),
    }];
    for b in 1..top {
        let mut next = below.to_vec();
        next.push(b);
        out.push(TowerNimPosition { stack: next });
    }
    out
}

/// All-ones stacks are P exactly at even length; otherwise, with k the
/// number of 1-heaps above the topmost non-one heap, the position is N
/// exactly when k is even.
pub fn tower_outcome_closed(p: &TowerNimPosition) -> OutcomeClass {
    let k = p.ones_on_top();
    if k == p.stack.len() {
        if k % 2 == 0 {
            OutcomeClass::P
        } else {
            OutcomeClass::N
        }
    } else if k % 2 == 0 {
        OutcomeClass::N
    } else {
        OutcomeClass::P
    }
}

/// The grundy value for the characterized stack families:
///
/// - all ones: the parity of the length;
/// - top heap x ≥ 2 resting on a 1-heap or alone: *x;
/// - k ≥ 1 ones above the topmost non-one heap: 0 when k is odd, * when k
///   is even (note the k = 0 family carries the top heap's size instead —
///   the two families meet only in outcome, not in grundy value).
///
/// Returns `None` for a top heap ≥ 2 resting directly on another heap ≥ 2:
/// such positions are N, but no grundy formula covers them.
pub fn tower_nimber_closed(p: &TowerNimPosition) -> Option<Nimber> {
    let k = p.ones_on_top();
    let n = p.stack.len();
    if k == n {
        return Some(Nimber((n % 2) as u32));
    }
    if k == 0 {
        let top = *p.stack.last().expect("nonempty");
        return if n == 1 || p.stack[n - 2] == 1 {
            Some(Nimber(top))
        } else {
            None
        };
    }
    Some(Nimber(if k % 2 == 1 { 0 } else { 1 }))
}

impl ImpartialPosition for TowerNimPosition {
    fn options(&self) -> Vec<Self> {
        tower_options(self)
    }

    /// Order matters on a stack: the key is the verbatim sequence.
    fn normalized_key(&self) -> Vec<u8> {
        let mut key = vec![b'T'];
        for &h in &self.stack {
            key.extend_from_slice(&h.to_le_bytes());
        }
        key
    }
}

impl FromStr for TowerNimPosition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        TowerNimPosition::new(parse_heap_list(s)?)
    }
}

impl fmt::Display for TowerNimPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_heap_list(&self.stack))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(stack: &[u32]) -> TowerNimPosition {
        TowerNimPosition::new(stack.to_vec()).unwrap()
    }

    #[test]
    fn options_touch_only_the_top() {
        assert_eq!(
            tower_options(&p(&[5, 2, 4])),
            vec![p(&[5, 2]), p(&[5, 2, 1]), p(&[5, 2, 2]), p(&[5, 2, 3])]
        );
        assert_eq!(tower_options(&p(&[1])), vec![p(&[])]);
        assert_eq!(tower_options(&p(&[2, 1])), vec![p(&[2])]);
        assert!(tower_options(&p(&[])).is_empty());
    }

    #[test]
    fn outcome_classifier() {
        assert_eq!(tower_outcome_closed(&p(&[1, 1])), OutcomeClass::P);
        assert_eq!(tower_outcome_closed(&p(&[1, 1, 5])), OutcomeClass::N);
        assert_eq!(tower_outcome_closed(&p(&[2, 1])), OutcomeClass::P);
        assert_eq!(tower_outcome_closed(&p(&[])), OutcomeClass::P);
        assert_eq!(tower_outcome_closed(&p(&[3, 2])), OutcomeClass::N);
        assert_eq!(tower_outcome_closed(&p(&[3, 2, 1, 1])), OutcomeClass::N);
    }

    #[test]
    fn nimber_families() {
        assert_eq!(tower_nimber_closed(&p(&[1, 1, 1])), Some(Nimber(1)));
        assert_eq!(tower_nimber_closed(&p(&[1, 1])), Some(Nimber(0)));
        assert_eq!(tower_nimber_closed(&p(&[3, 1, 2])), Some(Nimber(2)));
        assert_eq!(tower_nimber_closed(&p(&[7])), Some(Nimber(7)));
        // k ones above the topmost non-one heap: parity decides.
        assert_eq!(tower_nimber_closed(&p(&[3, 2, 1])), Some(Nimber(0)));
        assert_eq!(tower_nimber_closed(&p(&[5, 3, 1, 1])), Some(Nimber(1)));
        // Top ≥ 2 directly on a heap ≥ 2: outcome is N but no grundy formula.
        assert_eq!(tower_nimber_closed(&p(&[2, 2])), None);
        assert_eq!(tower_nimber_closed(&p(&[5, 3, 2])), None);
    }

    #[test]
    fn text_round_trip() {
        let pos: TowerNimPosition = "2,1,4".parse().unwrap();
        assert_eq!(pos, p(&[2, 1, 4]));
        assert_eq!(pos.to_string(), "2,1,4");
        assert!("2,0,4".parse::<TowerNimPosition>().is_err());
    }
}
