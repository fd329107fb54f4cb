//! Antonim: Nim on a set of distinct heap sizes. Reducing a heap to a size
//! already present collapses into it (the duplicate is forgotten), so a move
//! either deletes a heap or moves it to an absent smaller size.

use super::ParseError;
use crate::engine::ImpartialPosition;
use crate::types::OutcomeClass;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntonimPosition {
    heaps: BTreeSet<u32>,
}

impl AntonimPosition {
    pub fn new(heaps: impl IntoIterator<Item = u32>) -> Result<Self, ParseError> {
        let mut set = BTreeSet::new();
        for h in heaps {
            if h == 0 {
                return Err(ParseError("antonim heaps must be positive".into()));
            }
            if !set.insert(h) {
                return Err(ParseError(format!("duplicate heap size {h}")));
            }
        }
        Ok(AntonimPosition { heaps: set })
    }

    pub fn heaps(&self) -> impl Iterator<Item = u32> + '_ {
        self.heaps.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.heaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heaps.is_empty()
    }
}

/// Take a heap entirely, or reduce it to a smaller size not already present.
pub fn antonim_options(p: &AntonimPosition) -> Vec<AntonimPosition> {
    let mut out = Vec::new();
    for &x in &p.heaps {
        let mut without = p.heaps.clone();
        without.remove(&x);
        out.push(AntonimPosition {
            heaps: without.clone(),
        });
        for y in 1..x {
            if !p.heaps.contains(&y) {
                let mut next = without.clone();
                next.insert(y);
                out.push(AntonimPosition { heaps: next });
            }
        }
    }
    out
}

/// No closed form is known beyond three piles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no known closed form for antonim with {0} piles")]
pub struct NoClosedForm(pub usize);

/// Outcomes for at most three piles: the empty set is P; one pile is N; two
/// piles are P exactly for {2k+1, 2k+2}; three piles are P exactly when
/// (a+1) xor (b+1) xor (c+1) = 0.
pub fn antonim_outcome_closed(p: &AntonimPosition) -> Result<OutcomeClass, NoClosedForm> {
    let piles: Vec<u32> = p.heaps.iter().copied().collect();
    match piles.as_slice() {
        [] => Ok(OutcomeClass::P),
        [_] => Ok(OutcomeClass::N),
        [a, b] => Ok(if a % 2 == 1 && *b == a + 1 {
            OutcomeClass::P
        } else {
            OutcomeClass::N
        }),
        [a, b, c] => Ok(if (a + 1) ^ (b + 1) ^ (c + 1) == 0 {
            OutcomeClass::P
        } else {
            OutcomeClass::N
        }),
        more => Err(NoClosedForm(more.len())),
    }
}

impl ImpartialPosition for AntonimPosition {
    fn options(&self) -> Vec<Self> {
        antonim_options(self)
    }

    fn normalized_key(&self) -> Vec<u8> {
        let mut key = vec![b'A'];
        for &h in &self.heaps {
            key.extend_from_slice(&h.to_le_bytes());
        }
        key
    }
}

impl FromStr for AntonimPosition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| ParseError("antonim positions are written {1,3,5}".into()))?
            .trim();
        if inner.is_empty() {
            return AntonimPosition::new([]);
        }
        let mut heaps = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            heaps.push(
                part.parse::<u32>()
                    .map_err(|_| ParseError(format!("bad heap size {part:?}")))?,
            );
        }
        AntonimPosition::new(heaps)
    }
}

impl fmt::Display for AntonimPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self
            .heaps
            .iter()
            .map(|h| h.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{{{inner}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(heaps: &[u32]) -> AntonimPosition {
        AntonimPosition::new(heaps.iter().copied()).unwrap()
    }

    #[test]
    fn options_follow_the_collapse_rule() {
        assert_eq!(antonim_options(&p(&[1])), vec![p(&[])]);
        assert_eq!(antonim_options(&p(&[2])), vec![p(&[]), p(&[1])]);
        // Reducing 2 → 1 collapses into the existing 1-heap.
        assert_eq!(antonim_options(&p(&[1, 2])), vec![p(&[2]), p(&[1])]);
        assert_eq!(
            antonim_options(&p(&[1, 3])),
            vec![p(&[3]), p(&[1]), p(&[1, 2])]
        );
    }

    #[test]
    fn closed_outcomes() {
        assert_eq!(antonim_outcome_closed(&p(&[])).unwrap(), OutcomeClass::P);
        assert_eq!(antonim_outcome_closed(&p(&[7])).unwrap(), OutcomeClass::N);
        assert_eq!(antonim_outcome_closed(&p(&[1, 2])).unwrap(), OutcomeClass::P);
        assert_eq!(antonim_outcome_closed(&p(&[2, 3])).unwrap(), OutcomeClass::N);
        assert_eq!(antonim_outcome_closed(&p(&[3, 4])).unwrap(), OutcomeClass::P);
        assert_eq!(
            antonim_outcome_closed(&p(&[1, 3, 5])).unwrap(),
            OutcomeClass::P
        );
        assert_eq!(
            antonim_outcome_closed(&p(&[1, 2, 3])).unwrap(),
            OutcomeClass::N
        );
        assert_eq!(
            antonim_outcome_closed(&p(&[1, 2, 3, 4])),
            Err(NoClosedForm(4))
        );
    }

    #[test]
    fn rejects_zeros_and_duplicates() {
        assert!(AntonimPosition::new([0]).is_err());
        assert!(AntonimPosition::new([2, 2]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let pos: AntonimPosition = "{1,3,5}".parse().unwrap();
        assert_eq!(pos, p(&[1, 3, 5]));
        assert_eq!(pos.to_string(), "{1,3,5}");
        assert_eq!("{}".parse::<AntonimPosition>().unwrap(), p(&[]));
        assert_eq!(" { 5 , 1 } ".parse::<AntonimPosition>().unwrap(), p(&[1, 5]));
        assert!("1,3".parse::<AntonimPosition>().is_err());
        assert!("{1,1}".parse::<AntonimPosition>().is_err());
    }
}
