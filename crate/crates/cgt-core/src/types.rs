//! Shared domain primitives: nimbers, players, outcome classes.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A Grundy value. Impartial positions are worth exactly one of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Nimber(pub u32);

impl Nimber {
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Nimber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "0"),
            1 => write!(f, "*"),
            n => write!(f, "*{n}"),
        }
    }
}

/// Least natural number absent from `values`.
pub fn mex(values: &[Nimber]) -> Nimber {
    let mut seen = vec![false; values.len() + 1];
    for v in values {
        let v = v.0 as usize;
        if v < seen.len() {
            seen[v] = true;
        }
    }
    let k = seen.iter().position(|&s| !s).expect("mex bound");
    Nimber(k as u32)
}

/// The two players of a partizan game. Blue moves are Left moves in
/// Myopic Col, Red moves are Right moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

/// Who wins under normal play. Impartial games only use `P` and `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OutcomeClass {
    /// Previous player wins: the player to move loses.
    P,
    /// Next player wins: the player to move wins.
    N,
    /// Left wins no matter who starts.
    L,
    /// Right wins no matter who starts.
    R,
}

impl OutcomeClass {
    /// The winning class for `player` when it is not the mover.
    pub fn win_class(player: Player) -> OutcomeClass {
        match player {
            Player::Left => OutcomeClass::L,
            Player::Right => OutcomeClass::R,
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OutcomeClass::P => "P",
            OutcomeClass::N => "N",
            OutcomeClass::L => "L",
            OutcomeClass::R => "R",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mex_of_empty_set_is_zero() {
        assert_eq!(mex(&[]), Nimber(0));
    }

    #[test]
    fn mex_of_prefix_is_next() {
        assert_eq!(mex(&[Nimber(0), Nimber(1), Nimber(2)]), Nimber(3));
    }

    #[test]
    fn mex_skips_to_first_gap() {
        assert_eq!(mex(&[Nimber(1), Nimber(2)]), Nimber(0));
        assert_eq!(mex(&[Nimber(0), Nimber(2), Nimber(2), Nimber(5)]), Nimber(1));
    }

    #[test]
    fn nimber_display() {
        assert_eq!(Nimber(0).to_string(), "0");
        assert_eq!(Nimber(1).to_string(), "*");
        assert_eq!(Nimber(7).to_string(), "*7");
    }
}
