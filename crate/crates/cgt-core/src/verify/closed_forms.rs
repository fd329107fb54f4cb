//! Sweeps that replay each ruleset's closed-form solver against the engine
//! oracle over every position within bounds.

use super::enumerate::{multisets, sequences, sequences_exact, subsets};
use super::{Bounds, Mismatch, VerificationReport};
use crate::engine::{EngineError, ImpartialSolver, PartizanSolver};
use crate::rulesets::antonim::{antonim_outcome_closed, AntonimPosition};
use crate::rulesets::col::{
    col_decompose_paths, col_path_value, ColError, ColPosition, PathEnd, VertexColor,
};
use crate::rulesets::greedy::{greedy_outcome_closed, GreedyNimPosition};
use crate::rulesets::nim::{nim_grundy_closed, NimPosition};
use crate::rulesets::rotisserie::{
    rotisserie_outcome_closed_with, AdjnimIndexing, RotisseriePosition,
};
use crate::rulesets::tower::{tower_nimber_closed, tower_outcome_closed, TowerNimPosition};

fn bounds_json(b: Bounds) -> serde_json::Value {
    serde_json::to_value(b).expect("bounds serialize")
}

/// Grundy value = xor of heap sizes, over all heap multisets within bounds.
pub fn verify_nim(
    solver: &mut ImpartialSolver,
    b: Bounds,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let positions = multisets(b.max_heaps, 1, b.max_heap_size);
    let checked = positions.len() as u64;
    for heaps in positions {
        let p = NimPosition::new(heaps);
        let closed = nim_grundy_closed(&p);
        let oracle = solver.grundy_value(&p)?;
        if closed != oracle {
            mismatches.push(Mismatch {
                position: p.to_string(),
                closed: format!("grundy {}", closed.0),
                oracle: format!("grundy {}", oracle.0),
            });
        }
    }
    Ok(VerificationReport::theorem(
        "nim",
        bounds_json(b),
        checked,
        mismatches,
    ))
}

/// The 0/1/2/3-pile outcome rules over all pile sets within bounds; sets
/// too large for the rules are enumerated but not counted as checked.
pub fn verify_antonim(
    solver: &mut ImpartialSolver,
    b: Bounds,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for piles in subsets(b.max_heaps, b.max_heap_size) {
        let p = AntonimPosition::new(piles).expect("distinct positive piles");
        let Ok(closed) = antonim_outcome_closed(&p) else {
            continue;
        };
        checked += 1;
        let oracle = solver.outcome(&p)?;
        if closed != oracle {
            mismatches.push(Mismatch {
                position: p.to_string(),
                closed: closed.to_string(),
                oracle: oracle.to_string(),
            });
        }
    }
    Ok(VerificationReport::theorem(
        "antonim",
        bounds_json(b),
        checked,
        mismatches,
    ))
}

/// Tower outcome classifier on every stack within bounds, plus the grundy
/// families wherever they apply.
pub fn verify_tower(
    solver: &mut ImpartialSolver,
    b: Bounds,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let positions = sequences(b.max_heaps, 1, b.max_heap_size);
    let checked = positions.len() as u64;
    for stack in positions {
        let p = TowerNimPosition::new(stack).expect("positive heaps");
        let closed = tower_outcome_closed(&p);
        let oracle = solver.outcome(&p)?;
        if closed != oracle {
            mismatches.push(Mismatch {
                position: p.to_string(),
                closed: closed.to_string(),
                oracle: oracle.to_string(),
            });
        }
        if let Some(closed) = tower_nimber_closed(&p) {
            let oracle = solver.grundy_value(&p)?;
            if closed != oracle {
                mismatches.push(Mismatch {
                    position: p.to_string(),
                    closed: format!("grundy {}", closed.0),
                    oracle: format!("grundy {}", oracle.0),
                });
            }
        }
    }
    Ok(VerificationReport::theorem(
        "tower",
        bounds_json(b),
        checked,
        mismatches,
    ))
}

/// The queue outcome theorems wherever they apply: every queue within
/// bounds, plus the all-heaps-≥-2 family pushed one length further (heaps
/// capped at 4 there to keep the sweep small). The indexing argument picks
/// the reading of the minimum-index rule, so the rejected reading's failure
/// stays reproducible.
pub fn verify_rotisserie(
    solver: &mut ImpartialSolver,
    b: Bounds,
    indexing: AdjnimIndexing,
) -> Result<VerificationReport, EngineError> {
    let ext_len = b.max_heaps + 1;
    let ext_size = b.max_heap_size.min(4);
    let mut positions = sequences(b.max_heaps, 1, b.max_heap_size);
    positions.extend(sequences_exact(ext_len, 2, ext_size));
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for queue in positions {
        let p = RotisseriePosition::new(queue).expect("positive heaps");
        let Some(closed) = rotisserie_outcome_closed_with(&p, indexing) else {
            continue;
        };
        checked += 1;
        let oracle = solver.outcome(&p)?;
        if closed != oracle {
            mismatches.push(Mismatch {
                position: p.to_string(),
                closed: closed.to_string(),
                oracle: oracle.to_string(),
            });
        }
    }
    let bounds = serde_json::json!({
        "max_heaps": b.max_heaps,
        "max_heap_size": b.max_heap_size,
        "all_big_extension": {"length": ext_len, "max_heap_size": ext_size},
        "adjnim_indexing": match indexing {
            AdjnimIndexing::OneBased => "one-based",
            AdjnimIndexing::ZeroBased => "zero-based",
        },
    });
    Ok(VerificationReport::theorem(
        "rotisserie",
        bounds,
        checked,
        mismatches,
    ))
}

/// P exactly at an even number of maximum heaps, over all multisets within
/// bounds.
pub fn verify_greedy(
    solver: &mut ImpartialSolver,
    b: Bounds,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let positions = multisets(b.max_heaps, 1, b.max_heap_size);
    let checked = positions.len() as u64;
    for heaps in positions {
        let p = GreedyNimPosition::new(heaps).expect("positive heaps");
        let closed = greedy_outcome_closed(&p);
        let oracle = solver.outcome(&p)?;
        if closed != oracle {
            mismatches.push(Mismatch {
                position: p.to_string(),
                closed: closed.to_string(),
                oracle: oracle.to_string(),
            });
        }
    }
    Ok(VerificationReport::theorem(
        "greedy",
        bounds_json(b),
        checked,
        mismatches,
    ))
}

fn colorings(n: usize) -> Vec<Vec<VertexColor>> {
    let palette = [VertexColor::Uncolored, VertexColor::Blue, VertexColor::Red];
    let mut out = Vec::with_capacity(3usize.pow(n as u32));
    let mut digits = vec![0usize; n];
    loop {
        out.push(digits.iter().map(|&d| palette[d]).collect());
        let Some(i) = (0..n).rev().find(|&i| digits[i] < 2) else {
            return out;
        };
        digits[i] += 1;
        digits[i + 1..].fill(0);
    }
}

/// The stretch of uncolored vertices the path-value formula covers: all of
/// the path, or all but one trailing colored vertex.
fn lemma_family(colors: &[VertexColor]) -> Option<(u64, PathEnd)> {
    let k = colors
        .iter()
        .take_while(|&&c| c == VertexColor::Uncolored)
        .count();
    match colors[k..] {
        [] => Some((k as u64, PathEnd::None)),
        [VertexColor::Blue] => Some((k as u64, PathEnd::Blue)),
        [VertexColor::Red] => Some((k as u64, PathEnd::Red)),
        _ => None,
    }
}

/// Both path formulas against the engine: the a × * + b − c decomposition
/// on every coloring of every directed path within bounds, and the
/// uncolored-stretch formula on the colorings it covers.
pub fn verify_col_paths(
    solver: &mut PartizanSolver,
    max_vertices: usize,
) -> Result<VerificationReport, EngineError> {
    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    for n in 0..=max_vertices {
        for colors in colorings(n) {
            let arcs = (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1)).collect();
            let p = ColPosition::new(colors.clone(), arcs).expect("valid path");
            checked += 1;
            let oracle = solver.canonical_value(&p)?;
            let (_, decomposed) =
                col_decompose_paths(solver.store_mut(), &p).map_err(|e| match e {
                    ColError::Value(v) => EngineError::from(v),
                    ColError::Shape(s) => unreachable!("a path is a path collection: {s}"),
                })?;
            if decomposed != oracle {
                mismatches.push(Mismatch {
                    position: p.path_text(),
                    closed: format!(
                        "{} (decomposition)",
                        solver.store().format_value(decomposed)
                    ),
                    oracle: solver.store().format_value(oracle),
                });
            }
            if let Some((stretch, end)) = lemma_family(&colors) {
                let formula = col_path_value(solver.store_mut(), stretch, end)
                    .map_err(EngineError::from)?;
                if formula != oracle {
                    mismatches.push(Mismatch {
                        position: p.path_text(),
                        closed: format!(
                            "{} (path formula)",
                            solver.store().format_value(formula)
                        ),
                        oracle: solver.store().format_value(oracle),
                    });
                }
            }
        }
    }
    Ok(VerificationReport::theorem(
        "col-paths",
        serde_json::json!({"max_vertices": max_vertices}),
        checked,
        mismatches,
    ))
}
