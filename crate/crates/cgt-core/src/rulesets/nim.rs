//! Nim over a plain array: any heap may be lowered or emptied.

use super::{format_heap_list, parse_heap_list, ParseError};
use crate::engine::ImpartialPosition;
use crate::types::Nimber;
use std::fmt;
use std::str::FromStr;

/// A list of heap sizes. Zero heaps are allowed; they just offer no moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NimPosition {
    heaps: Vec<u32>,
}

impl NimPosition {
    pub fn new(heaps: Vec<u32>) -> Self {
        NimPosition { heaps }
    }

    pub fn heaps(&self) -> &[u32] {
        &self.heaps
    }
}

/// All positions reachable by lowering exactly one heap.
pub fn nim_options(p: &NimPosition) -> Vec<NimPosition> {
    let mut out = Vec::new();
    for (i, &h) in p.heaps.iter().enumerate() {
        for k in 0..h {
            let mut next = p.heaps.clone();
            next[i] = k;
            out.push(NimPosition::new(next));
        }
    }
    out
}

/// The xor rule: the grundy value is the xor of the heap sizes.
pub fn nim_grundy_closed(p: &NimPosition) -> Nimber {
    Nimber(p.heaps.iter().fold(0, |acc, &h| acc ^ h))
}

impl ImpartialPosition for NimPosition {
    fn options(&self) -> Vec<Self> {
        nim_options(self)
    }

    /// Moves touch one heap independently of order, so the key sorts.
    fn normalized_key(&self) -> Vec<u8> {
        let mut sorted = self.heaps.clone();
        sorted.sort_unstable();
        let mut key = vec![b'N'];
        for h in sorted {
            key.extend_from_slice(&h.to_le_bytes());
        }
        key
    }
}

impl FromStr for NimPosition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(NimPosition::new(parse_heap_list(s)?))
    }
}

impl fmt::Display for NimPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_heap_list(&self.heaps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(heaps: &[u32]) -> NimPosition {
        NimPosition::new(heaps.to_vec())
    }

    #[test]
    fn options_lower_exactly_one_heap() {
        assert!(nim_options(&p(&[0])).is_empty());
        let opts = nim_options(&p(&[1, 2]));
        assert_eq!(opts, vec![p(&[0, 2]), p(&[1, 0]), p(&[1, 1])]);
        assert_eq!(nim_options(&p(&[2])), vec![p(&[0]), p(&[1])]);
    }

    #[test]
    fn xor_rule() {
        assert_eq!(nim_grundy_closed(&p(&[3, 5])), Nimber(6));
        assert_eq!(nim_grundy_closed(&p(&[])), Nimber(0));
        assert_eq!(nim_grundy_closed(&p(&[1, 2, 3])), Nimber(0));
    }

    #[test]
    fn key_ignores_heap_order() {
        assert_eq!(p(&[3, 5]).normalized_key(), p(&[5, 3]).normalized_key());
        assert_ne!(p(&[3, 5]).normalized_key(), p(&[3, 4]).normalized_key());
    }

    #[test]
    fn text_round_trip() {
        let pos: NimPosition = "3,5,7".parse().unwrap();
        assert_eq!(pos, p(&[3, 5, 7]));
        assert_eq!(pos.to_string(), "3,5,7");
        let empty: NimPosition = "".parse().unwrap();
        assert_eq!(empty, p(&[]));
        assert_eq!(
            "(1,1)".parse::<NimPosition>().unwrap(),
            p(&[1, 1]),
        );
        assert!("1,,2".parse::<NimPosition>().is_err());
    }
}
