//! Canonical forms of short partizan games.
//!
//! Every game lives in a [`GameStore`] as an immutable node holding sorted
//! left/right option lists. The store interns nodes content-addressed, and
//! [`GameStore::make_game`] always simplifies (deleting dominated options,
//! bypassing reversible ones) before interning — so two equal game values
//! always share one [`GameId`], and value equality is id equality.
//!
//! Numbers, nimbers, and number-plus-star sums are recognized structurally
//! at intern time and carried as a `(number, star multiple)` tag, which
//! gives O(1) comparisons and arithmetic on the value shapes that dominate
//! actual play.

mod dyadic;
mod notation;

pub use dyadic::DyadicRational;

use crate::types::{Nimber, OutcomeClass};
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use thiserror::Error;

/// Largest integer the store will materialize as a game (an integer's
/// canonical form is a chain of that many nodes).
pub const MAX_INTEGER: u64 = 65_536;

/// Largest star multiple the store will materialize (canonical *k carries
/// k options per side).
pub const MAX_NIMBER: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValueError {
    #[error("dyadic arithmetic overflow")]
    Overflow,
    #[error("no number lies strictly between the given bounds")]
    EmptyInterval,
    #[error("integer {0} exceeds the construction cap of {MAX_INTEGER}")]
    IntegerTooLarge(i64),
    #[error("nimber *{0} exceeds the construction cap of *{MAX_NIMBER}")]
    NimberTooLarge(u32),
    #[error("value parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
}

/// Handle to a canonical game in one [`GameStore`]. Ids are only meaningful
/// for the store that issued them; two ids from the same store are equal iff
/// the game values are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GameId(u32);

#[derive(Debug, Clone)]
struct Node {
    left: Vec<GameId>,
    right: Vec<GameId>,
    /// `Some((x, k))` iff the value is the number x plus *k (k = 0: plain
    /// number; x = 0, k > 0: plain nimber).
    nus: Option<(DyadicRational, u32)>,
}

/// Reference to a game during simplification: either an interned id or a
/// raw `{left | right}` whose options are interned but which itself is not.
#[derive(Clone, Copy)]
enum Ref<'a> {
    Id(GameId),
    Parts {
        left: &'a [GameId],
        right: &'a [GameId],
    },
}

pub struct GameStore {
    nodes: Vec<Node>,
    index: HashMap<(Vec<GameId>, Vec<GameId>), GameId>,
    nus_index: HashMap<(DyadicRational, u32), GameId>,
    leq_memo: HashMap<(GameId, GameId), bool>,
    add_memo: HashMap<(GameId, GameId), GameId>,
    neg_memo: HashMap<GameId, GameId>,
}

impl Default for GameStore {
    fn default() -> Self {
        Self::new()
    }
}

impl GameStore {
    pub fn new() -> Self {
        let mut store = GameStore {
            nodes: Vec::new(),
            index: HashMap::new(),
            nus_index: HashMap::new(),
            leq_memo: HashMap::new(),
            add_memo: HashMap::new(),
            neg_memo: HashMap::new(),
        };
        store.intern(Vec::new(), Vec::new()); // id 0 = the zero game
        store
    }

    /// The empty game `{ | }`.
    pub fn zero(&self) -> GameId {
        GameId(0)
    }

    /// The game `* = {0|0}`.
    pub fn star(&mut self) -> GameId {
        self.make_nus(DyadicRational::zero(), 1)
            .expect("star is within caps")
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    fn node(&self, g: GameId) -> &Node {
        &self.nodes[g.0 as usize]
    }

    pub fn left_options(&self, g: GameId) -> &[GameId] {
        &self.node(g).left
    }

    pub fn right_options(&self, g: GameId) -> &[GameId] {
        &self.node(g).right
    }

    /// The `(number, star multiple)` decomposition, when the value is of
    /// that shape.
    pub fn nus_parts(&self, g: GameId) -> Option<(DyadicRational, u32)> {
        self.node(g).nus
    }

    pub fn number_part(&self, g: GameId) -> Option<DyadicRational> {
        self.node(g).nus.and_then(|(x, k)| (k == 0).then_some(x))
    }

    pub fn is_number(&self, g: GameId) -> bool {
        self.number_part(g).is_some()
    }

    /// Canonical form of the number d.
    pub fn number(&mut self, d: DyadicRational) -> Result<GameId, ValueError> {
        if let Some(&id) = self.nus_index.get(&(d, 0)) {
            return Ok(id);
        }
        if let Some(n) = d.as_integer() {
            if n.unsigned_abs() > MAX_INTEGER {
                return Err(ValueError::IntegerTooLarge(n));
            }
            // Build the chain iteratively; each step is {prev|} or {|prev}.
            let mut cur = self.zero();
            for i in 1..=n.unsigned_abs() {
                let step = DyadicRational::integer(if n > 0 { i as i64 } else { -(i as i64) });
                cur = match self.nus_index.get(&(step, 0)) {
                    Some(&id) => id,
                    None if n > 0 => self.intern(vec![cur], Vec::new()),
                    None => self.intern(Vec::new(), vec![cur]),
                };
            }
            Ok(cur)
        } else {
            let p = d.numerator();
            let e = d.exponent();
            let lo = DyadicRational::new(p.checked_sub(1).ok_or(ValueError::Overflow)?, e)?;
            let hi = DyadicRational::new(p.checked_add(1).ok_or(ValueError::Overflow)?, e)?;
            let l = self.number(lo)?;
            let r = self.number(hi)?;
            Ok(self.intern(vec![l], vec![r]))
        }
    }

    /// Canonical form of *k; *0 = 0.
    pub fn nimber_value(&mut self, k: Nimber) -> Result<GameId, ValueError> {
        self.make_nus(DyadicRational::zero(), k.value())
    }

    /// Canonical form of x + *k.
    pub fn make_nus(&mut self, x: DyadicRational, k: u32) -> Result<GameId, ValueError> {
        if k > MAX_NIMBER {
            return Err(ValueError::NimberTooLarge(k));
        }
        if let Some(&id) = self.nus_index.get(&(x, k)) {
            return Ok(id);
        }
        if k == 0 {
            return self.number(x);
        }
        // Canonical x + *k is {x, x+*, …, x+*(k−1) | same}.
        let mut opts = Vec::with_capacity(k as usize);
        for j in 0..k {
            opts.push(self.make_nus(x, j)?);
        }
        opts.sort_unstable();
        Ok(self.intern(opts.clone(), opts))
    }

    /// n copies of * plus a number offset: offset when n is even, offset + *
    /// when n is odd (star is its own inverse).
    pub fn star_multiple(&mut self, n: u64, offset: DyadicRational) -> Result<GameId, ValueError> {
        self.make_nus(offset, (n % 2) as u32)
    }

    /// Canonical form of `{left | right}`: sorts and dedups the inputs, then
    /// deletes dominated options and bypasses reversible ones to a fixpoint.
    pub fn make_game(&mut self, left: &[GameId], right: &[GameId]) -> Result<GameId, ValueError> {
        let mut l = left.to_vec();
        let mut r = right.to_vec();
        l.sort_unstable();
        l.dedup();
        r.sort_unstable();
        r.dedup();
        loop {
            self.remove_dominated(&mut l, true);
            self.remove_dominated(&mut r, false);
            if let Some((i, repl)) = self.find_left_reversal(&l, &r) {
                l.swap_remove(i);
                l.extend(repl);
                l.sort_unstable();
                l.dedup();
                continue;
            }
            if let Some((i, repl)) = self.find_right_reversal(&l, &r) {
                r.swap_remove(i);
                r.extend(repl);
                r.sort_unstable();
                r.dedup();
                continue;
            }
            break;
        }
        Ok(self.intern(l, r))
    }

    /// Drop options dominated by a sibling: on the left keep maximal
    /// options, on the right keep minimal ones. Inputs are deduped ids, so
    /// domination is strict and removal order cannot matter.
    fn remove_dominated(&mut self, opts: &mut Vec<GameId>, keep_maximal: bool) {
        let mut i = 0;
        while i < opts.len() {
            let mut dominated = false;
            for j in 0..opts.len() {
                if i == j {
                    continue;
                }
                let (a, b) = if keep_maximal {
                    (opts[i], opts[j])
                } else {
                    (opts[j], opts[i])
                };
                if self.leq(a, b) {
                    dominated = true;
                    break;
                }
            }
            if dominated {
                opts.remove(i);
            } else {
                i += 1;
            }
        }
    }

    /// A left option L is reversible when some right option LR of L has
    /// LR ≤ G; it is then replaced by LR's left options.
    fn find_left_reversal(&mut self, l: &[GameId], r: &[GameId]) -> Option<(usize, Vec<GameId>)> {
        for (i, &opt) in l.iter().enumerate() {
            let through = self.node(opt).right.clone();
            for lr in through {
                if self.leq_ref(Ref::Id(lr), Ref::Parts { left: l, right: r }) {
                    return Some((i, self.node(lr).left.clone()));
                }
            }
        }
        None
    }

    /// Mirror image: a right option R reverses through a left option RL
    /// with RL ≥ G, and is replaced by RL's right options.
    fn find_right_reversal(&mut self, l: &[GameId], r: &[GameId]) -> Option<(usize, Vec<GameId>)> {
        for (i, &opt) in r.iter().enumerate() {
            let through = self.node(opt).left.clone();
            for rl in through {
                if self.leq_ref(Ref::Parts { left: l, right: r }, Ref::Id(rl)) {
                    return Some((i, self.node(rl).right.clone()));
                }
            }
        }
        None
    }

    /// g ≤ h in the partial order of game values.
    pub fn leq(&mut self, g: GameId, h: GameId) -> bool {
        if g == h {
            return true;
        }
        if let (Some((x1, k1)), Some((x2, k2))) = (self.node(g).nus, self.node(h).nus) {
            // Stars are infinitesimal: the number parts decide unless equal,
            // and distinct star multiples over the same number are confused.
            return if x1 != x2 { x1 < x2 } else { k1 == k2 };
        }
        if let Some(&v) = self.leq_memo.get(&(g, h)) {
            return v;
        }
        let v = self.leq_compute(Ref::Id(g), Ref::Id(h));
        self.leq_memo.insert((g, h), v);
        v
    }

    fn leq_ref(&mut self, g: Ref<'_>, h: Ref<'_>) -> bool {
        if let (Ref::Id(a), Ref::Id(b)) = (g, h) {
            return self.leq(a, b);
        }
        self.leq_compute(g, h)
    }

    /// g ≤ h fails exactly when some left option of g is ≥ h or some right
    /// option of h is ≤ g.
    fn leq_compute(&mut self, g: Ref<'_>, h: Ref<'_>) -> bool {
        let gl = match g {
            Ref::Id(a) => self.node(a).left.clone(),
            Ref::Parts { left, .. } => left.to_vec(),
        };
        for a in gl {
            if self.leq_ref(h, Ref::Id(a)) {
                return false;
            }
        }
        let hr = match h {
            Ref::Id(b) => self.node(b).right.clone(),
            Ref::Parts { right, .. } => right.to_vec(),
        };
        for b in hr {
            if self.leq_ref(Ref::Id(b), g) {
                return false;
            }
        }
        true
    }

    /// Disjunctive sum, canonicalized.
    pub fn add(&mut self, g: GameId, h: GameId) -> Result<GameId, ValueError> {
        if g == self.zero() {
            return Ok(h);
        }
        if h == self.zero() {
            return Ok(g);
        }
        if let (Some((x1, k1)), Some((x2, k2))) = (self.node(g).nus, self.node(h).nus) {
            return self.make_nus(x1.checked_add(x2)?, k1 ^ k2);
        }
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.add_memo.get(&key) {
            return Ok(s);
        }
        let (gl, gr) = (self.node(g).left.clone(), self.node(g).right.clone());
        let (hl, hr) = (self.node(h).left.clone(), self.node(h).right.clone());
        let mut left = Vec::with_capacity(gl.len() + hl.len());
        for o in gl {
            left.push(self.add(o, h)?);
        }
        for o in hl {
            left.push(self.add(g, o)?);
        }
        let mut right = Vec::with_capacity(gr.len() + hr.len());
        for o in gr {
            right.push(self.add(o, h)?);
        }
        for o in hr {
            right.push(self.add(g, o)?);
        }
        let s = self.make_game(&left, &right)?;
        self.add_memo.insert(key, s);
        Ok(s)
    }

    /// Negation: swap sides, negating recursively. Maps canonical forms to
    /// canonical forms, so the result is interned directly.
    pub fn negate(&mut self, g: GameId) -> Result<GameId, ValueError> {
        if let Some((x, k)) = self.node(g).nus {
            return self.make_nus(x.checked_neg()?, k);
        }
        if let Some(&n) = self.neg_memo.get(&g) {
            return Ok(n);
        }
        let (l, r) = (self.node(g).left.clone(), self.node(g).right.clone());
        let mut nl = Vec::with_capacity(r.len());
        for o in r {
            nl.push(self.negate(o)?);
        }
        let mut nr = Vec::with_capacity(l.len());
        for o in l {
            nr.push(self.negate(o)?);
        }
        nl.sort_unstable();
        nr.sort_unstable();
        let id = self.intern(nl, nr);
        self.neg_memo.insert(g, id);
        self.neg_memo.insert(id, g);
        Ok(id)
    }

    pub fn sub(&mut self, g: GameId, h: GameId) -> Result<GameId, ValueError> {
        let nh = self.negate(h)?;
        self.add(g, nh)
    }

    /// P if g = 0, L if g > 0, R if g < 0, N if g is confused with 0.
    pub fn outcome_of_value(&mut self, g: GameId) -> OutcomeClass {
        let zero = DyadicRational::zero();
        if let Some((x, k)) = self.node(g).nus {
            return if x > zero {
                OutcomeClass::L
            } else if x < zero {
                OutcomeClass::R
            } else if k == 0 {
                OutcomeClass::P
            } else {
                OutcomeClass::N
            };
        }
        let z = self.zero();
        match (self.leq(g, z), self.leq(z, g)) {
            (true, true) => OutcomeClass::P,
            (true, false) => OutcomeClass::R,
            (false, true) => OutcomeClass::L,
            (false, false) => OutcomeClass::N,
        }
    }

    /// Intern an already-canonical node. Option lists must be sorted and
    /// deduped.
    fn intern(&mut self, left: Vec<GameId>, right: Vec<GameId>) -> GameId {
        debug_assert!(left.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(right.windows(2).all(|w| w[0] < w[1]));
        let nus = self.recognize_nus(&left, &right);
        match self.index.entry((left, right)) {
            Entry::Occupied(e) => *e.get(),
            Entry::Vacant(e) => {
                let id = GameId(self.nodes.len() as u32);
                let (left, right) = e.key().clone();
                self.nodes.push(Node { left, right, nus });
                e.insert(id);
                if let Some(parts) = nus {
                    self.nus_index.entry(parts).or_insert(id);
                }
                id
            }
        }
    }

    /// Structural number/nimber/number-plus-star recognition. Sound only on
    /// canonical inputs, which is all `intern` ever sees: canonical forms
    /// are unique per value, so matching the known shape of x + *k (or of a
    /// number) identifies the value exactly.
    fn recognize_nus(
        &self,
        left: &[GameId],
        right: &[GameId],
    ) -> Option<(DyadicRational, u32)> {
        if left.is_empty() && right.is_empty() {
            return Some((DyadicRational::zero(), 0));
        }
        if left == right {
            // x + *k is {x+*0, …, x+*(k−1) | same}.
            let mut x: Option<DyadicRational> = None;
            let mut stars: Vec<u32> = Vec::with_capacity(left.len());
            for &o in left {
                let (ox, ok) = self.node(o).nus?;
                if *x.get_or_insert(ox) != ox {
                    return None;
                }
                stars.push(ok);
            }
            stars.sort_unstable();
            if stars.iter().enumerate().all(|(i, &k)| k == i as u32) {
                return Some((x?, left.len() as u32));
            }
            return None;
        }
        // Number shapes have at most one option per side, every option a
        // number, and left < right; the value is the simplest number in the
        // gap.
        let lo = match left {
            [] => None,
            [a] => Some(self.number_part(*a)?),
            _ => return None,
        };
        let hi = match right {
            [] => None,
            [b] => Some(self.number_part(*b)?),
            _ => return None,
        };
        if let (Some(l), Some(h)) = (lo, hi) {
            if l >= h {
                return None; // a switch, not a number
            }
        }
        let x = DyadicRational::simplest_between(lo, hi).ok()?;
        Some((x, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> DyadicRational {
        DyadicRational::integer(n)
    }

    fn dy(n: i64, e: u32) -> DyadicRational {
        DyadicRational::new(n, e).unwrap()
    }

    #[test]
    fn empty_game_is_zero() {
        let mut s = GameStore::new();
        let z = s.make_game(&[], &[]).unwrap();
        assert_eq!(z, s.zero());
        assert_eq!(s.nus_parts(z), Some((int(0), 0)));
    }

    #[test]
    fn zero_bar_zero_is_star() {
        let mut s = GameStore::new();
        let z = s.zero();
        let g = s.make_game(&[z], &[z]).unwrap();
        assert_eq!(g, s.star());
        assert_eq!(s.nus_parts(g), Some((int(0), 1)));
    }

    #[test]
    fn star_bar_star_collapses_to_zero() {
        let mut s = GameStore::new();
        let star = s.star();
        let g = s.make_game(&[star], &[star]).unwrap();
        assert_eq!(g, s.zero());
    }

    #[test]
    fn number_shapes() {
        let mut s = GameStore::new();
        let two = s.number(int(2)).unwrap();
        let one = s.number(int(1)).unwrap();
        let zero = s.zero();
        assert_eq!(s.left_options(two), &[one]);
        assert!(s.right_options(two).is_empty());
        assert_eq!(s.left_options(one), &[zero]);
        let half = s.number(dy(1, 1)).unwrap();
        assert_eq!(s.left_options(half), &[zero]);
        assert_eq!(s.right_options(half), &[one]);
        let neg = s.number(int(-2)).unwrap();
        assert_eq!(s.nus_parts(neg), Some((int(-2), 0)));
        assert!(s.left_options(neg).is_empty());
    }

    #[test]
    fn make_game_discovers_numbers() {
        let mut s = GameStore::new();
        let zero = s.zero();
        let one = s.number(int(1)).unwrap();
        let two = s.number(int(2)).unwrap();
        // {0|1} = 1/2 stays put; {0|2} simplifies to 1; {-1|1} to 0.
        let half = s.make_game(&[zero], &[one]).unwrap();
        assert_eq!(s.nus_parts(half), Some((dy(1, 1), 0)));
        let g = s.make_game(&[zero], &[two]).unwrap();
        assert_eq!(g, one);
        let m1 = s.number(int(-1)).unwrap();
        let h = s.make_game(&[m1], &[one]).unwrap();
        assert_eq!(h, zero);
    }

    #[test]
    fn nimber_values() {
        let mut s = GameStore::new();
        let z = s.nimber_value(Nimber(0)).unwrap();
        assert_eq!(z, s.zero());
        let star = s.nimber_value(Nimber(1)).unwrap();
        assert_eq!(s.left_options(star), &[s.zero()]);
        assert_eq!(s.right_options(star), &[s.zero()]);
        let star2 = s.nimber_value(Nimber(2)).unwrap();
        assert_eq!(s.left_options(star2), &[s.zero(), star]);
        assert_eq!(s.nus_parts(star2), Some((int(0), 2)));
        assert!(matches!(
            s.nimber_value(Nimber(MAX_NIMBER + 1)),
            Err(ValueError::NimberTooLarge(_))
        ));
    }

    #[test]
    fn integer_cap_enforced() {
        let mut s = GameStore::new();
        assert!(s.number(int(MAX_INTEGER as i64)).is_ok());
        assert!(matches!(
            s.number(int(MAX_INTEGER as i64 + 1)),
            Err(ValueError::IntegerTooLarge(_))
        ));
    }

    #[test]
    fn add_examples() {
        let mut s = GameStore::new();
        let star = s.star();
        let sum = s.add(star, star).unwrap();
        assert_eq!(sum, s.zero());
        let half = s.number(dy(1, 1)).unwrap();
        let one = s.number(int(1)).unwrap();
        assert_eq!(s.add(half, half).unwrap(), one);
        // (−1) + * = {−1|−1}
        let m1 = s.number(int(-1)).unwrap();
        let v = s.add(m1, star).unwrap();
        assert_eq!(s.left_options(v), &[m1]);
        assert_eq!(s.right_options(v), &[m1]);
        assert_eq!(s.nus_parts(v), Some((int(-1), 1)));
    }

    #[test]
    fn nimber_addition_is_xor() {
        let mut s = GameStore::new();
        for j in 0..6u32 {
            for k in 0..6u32 {
                let a = s.nimber_value(Nimber(j)).unwrap();
                let b = s.nimber_value(Nimber(k)).unwrap();
                let expect = s.nimber_value(Nimber(j ^ k)).unwrap();
                assert_eq!(s.add(a, b).unwrap(), expect, "*{j} + *{k}");
            }
        }
    }

    #[test]
    fn negate_examples() {
        let mut s = GameStore::new();
        let z = s.zero();
        assert_eq!(s.negate(z).unwrap(), z);
        let star = s.star();
        assert_eq!(s.negate(star).unwrap(), star);
        let one = s.number(int(1)).unwrap();
        let m1 = s.number(int(-1)).unwrap();
        assert_eq!(s.negate(one).unwrap(), m1);
        let switch = s.make_game(&[one], &[m1]).unwrap();
        assert_eq!(s.negate(switch).unwrap(), switch);
        // The symmetric switch is its own negative, so g + g = g + (−g) = 0.
        assert_eq!(s.add(switch, switch).unwrap(), z);
        // An asymmetric switch is not: {2|−1} + {2|−1} ≠ 0.
        let two = s.number(int(2)).unwrap();
        let lop = s.make_game(&[two], &[m1]).unwrap();
        let sum = s.add(lop, lop).unwrap();
        assert_ne!(sum, z);
        let nlop = s.negate(lop).unwrap();
        assert_eq!(s.add(lop, nlop).unwrap(), z);
    }

    #[test]
    fn leq_examples() {
        let mut s = GameStore::new();
        let z = s.zero();
        let star = s.star();
        assert!(!s.leq(z, star));
        assert!(!s.leq(star, z));
        let one = s.number(int(1)).unwrap();
        assert!(s.leq(z, one));
        assert!(!s.leq(one, z));
        // −1 + * ≤ 0: a negative number plus star is still negative.
        let m1 = s.number(int(-1)).unwrap();
        let v = s.add(m1, star).unwrap();
        assert!(s.leq(v, z));
        assert!(!s.leq(z, v));
    }

    #[test]
    fn outcome_examples() {
        let mut s = GameStore::new();
        let z = s.zero();
        assert_eq!(s.outcome_of_value(z), OutcomeClass::P);
        let star = s.star();
        assert_eq!(s.outcome_of_value(star), OutcomeClass::N);
        let m1 = s.number(int(-1)).unwrap();
        let v = s.add(m1, star).unwrap();
        assert_eq!(s.outcome_of_value(v), OutcomeClass::R);
        let one = s.number(int(1)).unwrap();
        assert_eq!(s.outcome_of_value(one), OutcomeClass::L);
        let switch = s.make_game(&[one], &[m1]).unwrap();
        assert_eq!(s.outcome_of_value(switch), OutcomeClass::N);
    }

    #[test]
    fn star_multiple_examples() {
        let mut s = GameStore::new();
        let even = s.star_multiple(2, int(0)).unwrap();
        assert_eq!(even, s.zero());
        let odd = s.star_multiple(3, int(0)).unwrap();
        assert_eq!(odd, s.star());
        let v = s.star_multiple(1, int(-1)).unwrap();
        let m1 = s.number(int(-1)).unwrap();
        assert_eq!(s.left_options(v), &[m1]);
        assert_eq!(s.right_options(v), &[m1]);
    }

    #[test]
    fn star_translation_lemma_over_small_dyadics() {
        // x + * = {x|x} and x = {x+* | x+*} for |numerator| ≤ 32, exp ≤ 3.
        let mut s = GameStore::new();
        for e in 0..=3u32 {
            for p in -32i64..=32 {
                let x = DyadicRational::new(p, e).unwrap();
                let xg = s.number(x).unwrap();
                let star = s.star();
                let lhs = s.add(xg, star).unwrap();
                let rhs = s.make_game(&[xg], &[xg]).unwrap();
                assert_eq!(lhs, rhs, "x + * = {{x|x}} at x = {x}");
                let back = s.make_game(&[lhs], &[lhs]).unwrap();
                assert_eq!(back, xg, "x = {{x+*|x+*}} at x = {x}");
            }
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let mut s = GameStore::new();
        let z = s.zero();
        let one = s.number(int(1)).unwrap();
        let m1 = s.number(int(-1)).unwrap();
        let star = s.star();
        let mut sample = vec![z, one, m1, star];
        let switch = s.make_game(&[one], &[m1]).unwrap();
        let up = s.make_game(&[z], &[star]).unwrap();
        sample.push(switch);
        sample.push(up);
        let s2 = s.nimber_value(Nimber(2)).unwrap();
        sample.push(s2);
        for g in sample {
            let (l, r) = (s.left_options(g).to_vec(), s.right_options(g).to_vec());
            let again = s.make_game(&l, &r).unwrap();
            assert_eq!(again, g);
        }
    }

    #[test]
    fn dominated_options_are_deleted() {
        let mut s = GameStore::new();
        let z = s.zero();
        let one = s.number(int(1)).unwrap();
        let two = s.number(int(2)).unwrap();
        // {0, 1, 2 | } = {2 | } = 3 (0 and 1 dominated on the left).
        let g = s.make_game(&[z, one, two], &[]).unwrap();
        let three = s.number(int(3)).unwrap();
        assert_eq!(g, three);
    }
}
