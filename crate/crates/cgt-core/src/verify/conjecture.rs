//! Sweep of the tree identity G(T) = * + G(T1) + G(T2) over every
//! shape-distinct rooted binary tree. The identity is unproven, so the
//! sweep documents per-tree results and never asserts; it also records
//! every tree whose value falls outside numbers, numbers plus star, and
//! nimbers.

use super::{Mismatch, Status, VerificationReport};
use crate::engine::{EngineError, PartizanSolver};
use crate::rulesets::col::{col_tree_conjecture_check, ColPosition, TreeCheckError, VertexColor};
use crate::values::{DyadicRational, GameId, GameStore};
use serde::Serialize;

/// Unordered rooted tree, every vertex with at most two children; children
/// are kept sorted by encoding so each shape has one representation.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Shape {
    children: Vec<Shape>,
}

impl Shape {
    /// Nested-parens text: a leaf is `()`, children appear inside their
    /// parent in sorted order — `(()(()))` is a root holding a leaf and a
    /// two-vertex chain.
    fn encode(&self) -> String {
        let mut text = String::from("(");
        for child in &self.children {
            text.push_str(&child.encode());
        }
        text.push(')');
        text
    }

    fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(Shape::vertex_count).sum::<usize>()
    }
}

/// All shapes of each vertex count up to `max`, indexed by count.
fn shapes_by_size(max: usize) -> Vec<Vec<Shape>> {
    let mut by_size: Vec<Vec<Shape>> = vec![Vec::new(); max + 1];
    if max == 0 {
        return by_size;
    }
    by_size[1].push(Shape {
        children: Vec::new(),
    });
    for n in 2..=max {
        let mut shapes = Vec::new();
        for child in &by_size[n - 1] {
            shapes.push(Shape {
                children: vec![child.clone()],
            });
        }
        for a in 1..=(n - 1) / 2 {
            shapes.extend(paired(&by_size[a], &by_size[n - 1 - a], a == n - 1 - a));
        }
        by_size[n] = shapes;
    }
    by_size
}

/// Two-children shapes from unordered pairs drawn across the two pools.
fn paired(smaller: &[Shape], larger: &[Shape], same_pool: bool) -> Vec<Shape> {
    let mut out = Vec::new();
    for (i, s) in smaller.iter().enumerate() {
        let start = if same_pool { i } else { 0 };
        for l in &larger[start..] {
            let mut children = vec![s.clone(), l.clone()];
            children.sort_by_key(Shape::encode);
            out.push(Shape { children });
        }
    }
    out
}

/// Every shape whose root has exactly two children, smallest first.
fn two_branch_shapes(max_vertices: usize) -> Vec<Shape> {
    let pools = shapes_by_size(max_vertices.saturating_sub(1));
    let mut out = Vec::new();
    for n in 3..=max_vertices {
        for a in 1..=(n - 1) / 2 {
            out.extend(paired(&pools[a], &pools[n - 1 - a], a == n - 1 - a));
        }
    }
    out
}

fn to_position(shape: &Shape) -> ColPosition {
    fn assign(shape: &Shape, next: &mut u32, arcs: &mut Vec<(u32, u32)>) -> u32 {
        let id = *next;
        *next += 1;
        for child in &shape.children {
            let child_id = assign(child, next, arcs);
            arcs.push((id, child_id));
        }
        id
    }
    let mut arcs = Vec::new();
    let mut next = 0;
    assign(shape, &mut next, &mut arcs);
    ColPosition::new(vec![VertexColor::Uncolored; next as usize], arcs).expect("valid tree")
}

fn is_exotic(store: &GameStore, id: GameId) -> bool {
    match store.nus_parts(id) {
        None => true,
        Some((number, stars)) => stars >= 2 && number != DyadicRational::zero(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeSweepEntry {
    pub tree: String,
    pub vertices: usize,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExoticValue {
    pub tree: String,
    pub value: String,
}

/// Full record of one sweep: the per-tree identity results, the trees where
/// it failed, and every value outside numbers, numbers plus star, and
/// nimbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeConjectureSweep {
    pub max_vertices: usize,
    pub trees_checked: usize,
    pub counterexamples: Vec<String>,
    pub exotic_values: Vec<ExoticValue>,
    pub trees: Vec<TreeSweepEntry>,
}

/// Run the identity on every two-branch tree with up to `max_vertices`
/// vertices (at least 3 — the smallest such tree).
pub fn tree_conjecture_sweep(
    solver: &mut PartizanSolver,
    max_vertices: usize,
) -> Result<TreeConjectureSweep, EngineError> {
    assert!(max_vertices >= 3, "the smallest two-branch tree has 3 vertices");
    let mut sweep = TreeConjectureSweep {
        max_vertices,
        trees_checked: 0,
        counterexamples: Vec::new(),
        exotic_values: Vec::new(),
        trees: Vec::new(),
    };
    for shape in two_branch_shapes(max_vertices) {
        let tree = shape.encode();
        let position = to_position(&shape);
        let report = col_tree_conjecture_check(solver, &position).map_err(|e| match e {
            TreeCheckError::Engine(e) => e,
            TreeCheckError::Shape(s) => unreachable!("enumerated tree is well-shaped: {s}"),
        })?;
        sweep.trees_checked += 1;
        if !report.holds {
            sweep.counterexamples.push(tree.clone());
        }
        if is_exotic(solver.store(), report.lhs) {
            sweep.exotic_values.push(ExoticValue {
                tree: tree.clone(),
                value: solver.store().format_value(report.lhs),
            });
        }
        sweep.trees.push(TreeSweepEntry {
            tree,
            vertices: shape.vertex_count(),
            holds: report.holds,
            lhs: solver.store().format_value(report.lhs),
            rhs: solver.store().format_value(report.rhs),
        });
    }
    Ok(sweep)
}

/// The sweep in the standard report schema. Always informational: the
/// identity is documented, never asserted.
pub fn check_tree_conjecture(
    solver: &mut PartizanSolver,
    max_vertices: usize,
) -> Result<VerificationReport, EngineError> {
    let sweep = tree_conjecture_sweep(solver, max_vertices)?;
    let mismatches = sweep
        .trees
        .iter()
        .filter(|entry| !entry.holds)
        .map(|entry| Mismatch {
            position: entry.tree.clone(),
            closed: format!("* + G(T1) + G(T2) = {}", entry.rhs),
            oracle: entry.lhs.clone(),
        })
        .collect();
    Ok(VerificationReport {
        check: "tree-conjecture".to_string(),
        bounds: serde_json::json!({"max_vertices": max_vertices}),
        positions_checked: sweep.trees_checked as u64,
        status: Status::Informational,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts_match_the_unordered_recurrence() {
        let pools = shapes_by_size(6);
        let counts: Vec<usize> = pools.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![0, 1, 1, 2, 3, 6, 11]);
        let by_total: Vec<usize> = (3..=7)
            .map(|n| {
                two_branch_shapes(n).len()
                    - if n > 3 { two_branch_shapes(n - 1).len() } else { 0 }
            })
            .collect();
        assert_eq!(by_total, vec![1, 1, 3, 5, 12]);
        assert_eq!(two_branch_shapes(7).len(), 22);
    }

    #[test]
    fn encodings_are_canonical_and_distinct() {
        let shapes = two_branch_shapes(7);
        let mut codes: Vec<String> = shapes.iter().map(Shape::encode).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), shapes.len());
    }

    #[test]
    fn positions_are_trees() {
        for shape in two_branch_shapes(6) {
            let p = to_position(&shape);
            assert_eq!(p.arcs().len(), p.vertex_count() - 1);
        }
    }

    #[test]
    fn smallest_sweep_reports_star() {
        let mut solver = PartizanSolver::new();
        let sweep = tree_conjecture_sweep(&mut solver, 3).unwrap();
        assert_eq!(sweep.trees_checked, 1);
        assert_eq!(sweep.trees[0].tree, "(()())");
        assert!(sweep.trees[0].holds);
        assert_eq!(sweep.trees[0].lhs, "*");
        assert!(sweep.counterexamples.is_empty());
        assert!(sweep.exotic_values.is_empty());
        let report = check_tree_conjecture(&mut solver, 3).unwrap();
        assert_eq!(report.status, crate::verify::Status::Informational);
        assert_eq!(report.positions_checked, 1);
    }

    #[test]
    fn sweep_is_deterministic() {
        let run = || {
            let mut solver = PartizanSolver::new();
            serde_json::to_string(&tree_conjecture_sweep(&mut solver, 5).unwrap()).unwrap()
        };
        assert_eq!(run(), run());
    }
}
