//! Point-by-point checks of the lemma-level identities: the number-plus-star
//! brace form, head optimality on uncolored paths, and the two queue-game
//! lemmas about replies and heap-size comparisons.

use super::enumerate::sequences;
use super::{Bounds, Mismatch, VerificationReport};
use crate::engine::{EngineError, ImpartialSolver, PartizanSolver};
use crate::rulesets::col::{ColPosition, VertexColor};
use crate::rulesets::rotisserie::RotisseriePosition;
use crate::types::{OutcomeClass, Player};
use crate::values::{DyadicRational, GameStore, ValueError};

/// Both directions of the identity x + * = {x|x}: canonicalizing `{x|x}`
/// must yield x + *, and `{x* | x*}` must yield x, for every dyadic x with
/// |x| ≤ `abs_max` and denominator dividing `denominator_max` (a power of
/// two).
pub fn check_star_lemma(
    store: &mut GameStore,
    abs_max: u32,
    denominator_max: u32,
) -> Result<VerificationReport, ValueError> {
    debug_assert!(denominator_max.is_power_of_two());
    let exponent = denominator_max.trailing_zeros();
    let span = i64::from(abs_max) * i64::from(denominator_max);
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for p in -span..=span {
        let x = DyadicRational::new(p, exponent)?;
        checked += 1;
        let number = store.number(x)?;
        let number_star = store.make_nus(x, 1)?;
        let braced = store.make_game(&[number], &[number])?;
        if braced != number_star {
            mismatches.push(Mismatch {
                position: x.to_string(),
                closed: format!("{{x|x}} = {}", store.format_value(number_star)),
                oracle: format!("{{x|x}} = {}", store.format_value(braced)),
            });
        }
        let braced_star = store.make_game(&[number_star], &[number_star])?;
        if braced_star != number {
            mismatches.push(Mismatch {
                position: x.to_string(),
                closed: format!("{{x*|x*}} = {}", store.format_value(number)),
                oracle: format!("{{x*|x*}} = {}", store.format_value(braced_star)),
            });
        }
    }
    Ok(VerificationReport::theorem(
        "star-lemma",
        serde_json::json!({"abs_max": abs_max, "denominator_max": denominator_max}),
        checked,
        mismatches,
    ))
}

/// On an uncolored path, coloring the head is at least as good as coloring
/// any other vertex — ≥ in the value order for blue, ≤ for red — for every
/// path length up to `max_vertices`.
pub fn check_head_optimality(
    solver: &mut PartizanSolver,
    max_vertices: usize,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for n in 1..=max_vertices {
        let arcs = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        let path = ColPosition::new(vec![VertexColor::Uncolored; n], arcs).expect("valid path");
        for player in [Player::Left, Player::Right] {
            checked += 1;
            let head = solver.canonical_value(&path.apply(0, player).expect("legal"))?;
            for v in 1..n as u32 {
                let alt = solver.canonical_value(&path.apply(v, player).expect("legal"))?;
                let head_is_best = match player {
                    Player::Left => solver.store_mut().leq(alt, head),
                    Player::Right => solver.store_mut().leq(head, alt),
                };
                if !head_is_best {
                    mismatches.push(Mismatch {
                        position: format!(
                            "{n} uncolored vertices, {} colors vertex {v}",
                            VertexColor::of_player(player)
                        ),
                        closed: format!("head move {}", solver.store().format_value(head)),
                        oracle: format!("vertex {v} move {}", solver.store().format_value(alt)),
                    });
                }
            }
        }
    }
    Ok(VerificationReport::theorem(
        "head-optimality",
        serde_json::json!({"max_vertices": max_vertices}),
        checked,
        mismatches,
    ))
}

/// The reply lemma for the queue game: whenever a queue and its tail are
/// both in N, lowering the front heap to 1 (odd heap count) or to one less
/// than itself (even heap count) lands in P. The hypotheses are checked as
/// a conjunction and any counterexample candidate is reported without
/// failing the run.
pub fn check_adj_strategy(
    solver: &mut ImpartialSolver,
    b: Bounds,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for queue in sequences(b.max_heaps, 1, b.max_heap_size) {
        let Some((&front, tail)) = queue.split_first() else {
            continue;
        };
        let l = RotisseriePosition::new(queue.clone()).expect("positive heaps");
        let tail_pos = RotisseriePosition::new(tail.to_vec()).expect("positive heaps");
        if solver.outcome(&tail_pos)? != OutcomeClass::N
            || solver.outcome(&l)? != OutcomeClass::N
        {
            continue;
        }
        // A front 1-heap cannot satisfy the hypotheses: its only move is to
        // the tail, which being in N would put the queue in P.
        if front < 2 {
            continue;
        }
        checked += 1;
        let mut reply = tail.to_vec();
        reply.push(if queue.len() % 2 == 1 { 1 } else { front - 1 });
        let reply_pos = RotisseriePosition::new(reply).expect("positive heaps");
        let outcome = solver.outcome(&reply_pos)?;
        if outcome != OutcomeClass::P {
            mismatches.push(Mismatch {
                position: l.to_string(),
                closed: format!("reply {reply_pos} in P"),
                oracle: format!("reply {reply_pos} in {outcome}"),
            });
        }
    }
    Ok(VerificationReport::informational(
        "adj-strategy",
        serde_json::to_value(b).expect("bounds serialize"),
        checked,
        mismatches,
    ))
}

/// Every weakening of a P queue stays in P: even-indexed heaps (front
/// first) weakly lowered but kept positive, odd-indexed heaps weakly raised
/// up to the bound.
pub fn check_adj_compare(
    solver: &mut ImpartialSolver,
    b: Bounds,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for queue in sequences(b.max_heaps, 1, b.max_heap_size) {
        let l = RotisseriePosition::new(queue.clone()).expect("positive heaps");
        if solver.outcome(&l)? != OutcomeClass::P {
            continue;
        }
        checked += 1;
        for transformed in transforms(&queue, b.max_heap_size) {
            let t = RotisseriePosition::new(transformed).expect("positive heaps");
            let outcome = solver.outcome(&t)?;
            if outcome != OutcomeClass::P {
                mismatches.push(Mismatch {
                    position: t.to_string(),
                    closed: OutcomeClass::P.to_string(),
                    oracle: outcome.to_string(),
                });
            }
        }
    }
    Ok(VerificationReport::theorem(
        "adj-compare",
        serde_json::to_value(b).expect("bounds serialize"),
        checked,
        mismatches,
    ))
}

/// Cartesian product of the per-heap comparison ranges; includes the
/// identity transform.
fn transforms(queue: &[u32], max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(queue.len())];
    for (i, &a) in queue.iter().enumerate() {
        let choices: Vec<u32> = if i % 2 == 0 {
            (1..=a).collect()
        } else {
            (a..=max).collect()
        };
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for &v in &choices {
                let mut q = prefix.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}
