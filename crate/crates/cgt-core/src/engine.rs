//! Exhaustive game-tree solvers with memoization.
//!
//! Positions plug in through [`ImpartialPosition`] / [`PartizanPosition`]:
//! enumerate options, provide a canonical byte key. Every supported ruleset
//! strictly decreases a finite measure per move (total sticks, uncolored
//! vertices), so plain recursion terminates and no cycle detection is done.
//!
//! Solvers are plain values: share one across many root positions to share
//! the memo table, or give each worker thread its own — results are
//! deterministic and identical either way.

use crate::types::{mex, Nimber, OutcomeClass, Player};
use crate::values::{GameId, GameStore, ValueError};
use std::collections::HashMap;
use thiserror::Error;

/// Default cap on memo-table entries. Exceeding the cap is a hard error
/// rather than an eviction, so verification sweeps are never probabilistic.
pub const DEFAULT_MEMO_CAP: usize = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("memo table exceeded the configured cap of {cap} entries (bounds too large)")]
    MemoCapExceeded { cap: usize },
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// An impartial position: both players share one option set.
pub trait ImpartialPosition: Sized {
    fn options(&self) -> Vec<Self>;
    /// Canonical encoding for memoization; positions with equal keys must
    /// be game-equivalent.
    fn normalized_key(&self) -> Vec<u8>;
}

/// A partizan position: options depend on the mover.
pub trait PartizanPosition: Sized {
    fn options(&self, player: Player) -> Vec<Self>;
    fn normalized_key(&self) -> Vec<u8>;
}

pub struct ImpartialSolver {
    memo: HashMap<Vec<u8>, Nimber>,
    cap: usize,
}

impl Default for ImpartialSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl ImpartialSolver {
    pub fn new() -> Self {
        Self::with_cap(DEFAULT_MEMO_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        ImpartialSolver {
            memo: HashMap::new(),
            cap,
        }
    }

    pub fn memo_entries(&self) -> usize {
        self.memo.len()
    }

    pub fn grundy_value<P: ImpartialPosition>(&mut self, p: &P) -> Result<Nimber, EngineError> {
        let key = p.normalized_key();
        if let Some(&g) = self.memo.get(&key) {
            return Ok(g);
        }
        let opts = p.options();
        let mut seen = Vec::with_capacity(opts.len());
        for o in &opts {
            seen.push(self.grundy_value(o)?);
        }
        let g = mex(&seen);
        if self.memo.len() >= self.cap {
            return Err(EngineError::MemoCapExceeded { cap: self.cap });
        }
        self.memo.insert(key, g);
        Ok(g)
    }

    pub fn outcome<P: ImpartialPosition>(&mut self, p: &P) -> Result<OutcomeClass, EngineError> {
        Ok(if self.grundy_value(p)?.is_zero() {
            OutcomeClass::P
        } else {
            OutcomeClass::N
        })
    }

    /// Options the mover can win by taking, i.e. the P-options, in the
    /// ruleset's enumeration order.
    pub fn winning_moves<P: ImpartialPosition>(&mut self, p: &P) -> Result<Vec<P>, EngineError> {
        let mut wins = Vec::new();
        for o in p.options() {
            if self.grundy_value(&o)?.is_zero() {
                wins.push(o);
            }
        }
        Ok(wins)
    }
}

pub struct PartizanSolver {
    store: GameStore,
    value_memo: HashMap<Vec<u8>, GameId>,
    win_memo: HashMap<(Vec<u8>, Player), bool>,
    cap: usize,
}

impl Default for PartizanSolver {
    fn default() -> Self {
        Self::new()
    }
}

impl PartizanSolver {
    pub fn new() -> Self {
        Self::with_cap(DEFAULT_MEMO_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        PartizanSolver {
            store: GameStore::new(),
            value_memo: HashMap::new(),
            win_memo: HashMap::new(),
            cap,
        }
    }

    /// The store holding every value this solver has produced.
    pub fn store(&self) -> &GameStore {
        &self.store
    }

    pub fn store_mut(&mut self) -> &mut GameStore {
        &mut self.store
    }

    pub fn memo_entries(&self) -> usize {
        self.value_memo.len() + self.win_memo.len()
    }

    /// Canonical game value of p.
    pub fn canonical_value<P: PartizanPosition>(&mut self, p: &P) -> Result<GameId, EngineError> {
        let key = p.normalized_key();
        if let Some(&v) = self.value_memo.get(&key) {
            return Ok(v);
        }
        let mut left = Vec::new();
        for o in p.options(Player::Left) {
            left.push(self.canonical_value(&o)?);
        }
        let mut right = Vec::new();
        for o in p.options(Player::Right) {
            right.push(self.canonical_value(&o)?);
        }
        let v = self.store.make_game(&left, &right)?;
        if self.value_memo.len() >= self.cap {
            return Err(EngineError::MemoCapExceeded { cap: self.cap });
        }
        self.value_memo.insert(key, v);
        Ok(v)
    }

    /// Does `mover` win moving first from p?
    fn mover_wins<P: PartizanPosition>(
        &mut self,
        p: &P,
        mover: Player,
    ) -> Result<bool, EngineError> {
        let key = (p.normalized_key(), mover);
        if let Some(&w) = self.win_memo.get(&key) {
            return Ok(w);
        }
        let mut wins = false;
        for o in p.options(mover) {
            if !self.mover_wins(&o, mover.opponent())? {
                wins = true;
                break;
            }
        }
        if self.win_memo.len() >= self.cap {
            return Err(EngineError::MemoCapExceeded { cap: self.cap });
        }
        self.win_memo.insert(key, wins);
        Ok(wins)
    }

    /// Outcome by two who-wins searches (Left first, Right first).
    pub fn outcome<P: PartizanPosition>(&mut self, p: &P) -> Result<OutcomeClass, EngineError> {
        let left_first = self.mover_wins(p, Player::Left)?;
        let right_first = self.mover_wins(p, Player::Right)?;
        Ok(match (left_first, right_first) {
            (true, true) => OutcomeClass::N,
            (false, false) => OutcomeClass::P,
            (true, false) => OutcomeClass::L,
            (false, true) => OutcomeClass::R,
        })
    }

    /// Options after which the opponent, moving next, cannot win: outcomes
    /// in {P, mover's win class}.
    pub fn winning_moves<P: PartizanPosition>(
        &mut self,
        p: &P,
        mover: Player,
    ) -> Result<Vec<P>, EngineError> {
        let good = [OutcomeClass::P, OutcomeClass::win_class(mover)];
        let mut wins = Vec::new();
        for o in p.options(mover) {
            if good.contains(&self.outcome(&o)?) {
                wins.push(o);
            }
        }
        Ok(wins)
    }
}
