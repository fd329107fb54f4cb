//! Myopic Col: players alternately color vertices of a digraph. A vertex is
//! legal for a player exactly when it is uncolored and has no outgoing arc
//! to a vertex of that player's own color. Blue moves are Left's, red are
//! Right's.

use super::{ParseError, ShapeError};
use crate::engine::{EngineError, PartizanPosition, PartizanSolver};
use crate::types::Player;
use crate::values::{DyadicRational, GameId, GameStore, ValueError};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexColor {
    Uncolored,
    Blue,
    Red,
}

impl VertexColor {
    pub fn of_player(player: Player) -> Self {
        match player {
            Player::Left => VertexColor::Blue,
            Player::Right => VertexColor::Red,
        }
    }

    fn letter(self) -> char {
        match self {
            VertexColor::Uncolored => 'U',
            VertexColor::Blue => 'B',
            VertexColor::Red => 'R',
        }
    }

    fn from_letter(letter: &str) -> Result<Self, ParseError> {
        match letter {
            "U" => Ok(VertexColor::Uncolored),
            "B" => Ok(VertexColor::Blue),
            "R" => Ok(VertexColor::Red),
            other => Err(ParseError(format!("bad vertex color {other:?}"))),
        }
    }
}

impl fmt::Display for VertexColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexColor::Uncolored => "uncolored",
            VertexColor::Blue => "blue",
            VertexColor::Red => "red",
        })
    }
}

/// Directed graph with colored vertices. Vertex ids are dense from 0; arcs
/// are kept sorted, with self-loops and duplicates rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColPosition {
    colors: Vec<VertexColor>,
    arcs: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    id: u32,
    color: VertexColor,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    arcs: Vec<(u32, u32)>,
}

impl ColPosition {
    pub fn new(colors: Vec<VertexColor>, mut arcs: Vec<(u32, u32)>) -> Result<Self, ParseError> {
        let n = colors.len() as u32;
        for &(from, to) in &arcs {
            if from >= n || to >= n {
                return Err(ParseError(format!("arc ({from},{to}) leaves vertex range")));
            }
            if from == to {
                return Err(ParseError(format!("self-loop on vertex {from}")));
            }
        }
        arcs.sort_unstable();
        if arcs.windows(2).any(|w| w[0] == w[1]) {
            return Err(ParseError("duplicate arc".into()));
        }
        Ok(ColPosition { colors, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[VertexColor] {
        &self.colors
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors
            .iter()
            .filter(|&&c| c == VertexColor::Uncolored)
            .count()
    }

    /// Parse the path grammar `U,B,R`: one letter per vertex, arcs running
    /// left to right. Empty input is the empty graph.
    pub fn from_path_text(text: &str) -> Result<Self, ParseError> {
        let t = text.trim();
        if t.is_empty() {
            return Ok(ColPosition {
                colors: Vec::new(),
                arcs: Vec::new(),
            });
        }
        let colors = t
            .split(',')
            .map(|part| VertexColor::from_letter(part.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        let arcs = (0..colors.len() as u32 - 1).map(|i| (i, i + 1)).collect();
        Ok(ColPosition { colors, arcs })
    }

    /// The vertex letters in id order, joined by commas (ignores arcs; only
    /// meaningful for positions built from the path grammar).
    pub fn path_text(&self) -> String {
        let letters: Vec<String> = self.colors.iter().map(|c| c.letter().to_string()).collect();
        letters.join(",")
    }

    /// Parse the general-graph grammar, a JSON document like
    /// `{"vertices":[{"id":0,"color":"uncolored"}],"arcs":[[0,1]]}`.
    /// Vertex ids may appear in any order but must be dense from 0.
    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| ParseError(format!("bad graph JSON: {e}")))?;
        let n = doc.vertices.len();
        let mut colors = vec![None; n];
        for v in &doc.vertices {
            let slot = colors
                .get_mut(v.id as usize)
                .ok_or_else(|| ParseError(format!("vertex id {} is not dense from 0", v.id)))?;
            if slot.replace(v.color).is_some() {
                return Err(ParseError(format!("duplicate vertex id {}", v.id)));
            }
        }
        let colors = colors.into_iter().map(|c| c.expect("dense")).collect();
        ColPosition::new(colors, doc.arcs)
    }

    fn is_legal(&self, v: u32, player: Player) -> bool {
        let own = VertexColor::of_player(player);
        (v as usize) < self.colors.len()
            && self.colors[v as usize] == VertexColor::Uncolored
            && !self
                .arcs
                .iter()
                .any(|&(from, to)| from == v && self.colors[to as usize] == own)
    }

    /// Vertices the player may color, in ascending id order.
    pub fn legal_moves(&self, player: Player) -> Vec<u32> {
        (0..self.colors.len() as u32)
            .filter(|&v| self.is_legal(v, player))
            .collect()
    }

    /// Color vertex `v` for `player`, or fail if the move is illegal.
    pub fn apply(&self, v: u32, player: Player) -> Result<Self, ShapeError> {
        if !self.is_legal(v, player) {
            return Err(ShapeError::IllegalMove {
                vertex: v,
                color: VertexColor::of_player(player),
            });
        }
        let mut next = self.clone();
        next.colors[v as usize] = VertexColor::of_player(player);
        Ok(next)
    }
}

impl PartizanPosition for ColPosition {
    fn options(&self, player: Player) -> Vec<Self> {
        self.legal_moves(player)
            .into_iter()
            .map(|v| self.apply(v, player).expect("legal"))
            .collect()
    }

    fn normalized_key(&self) -> Vec<u8> {
        let mut key = vec![b'C'];
        key.extend_from_slice(&(self.colors.len() as u32).to_le_bytes());
        for &c in &self.colors {
            key.push(c.letter() as u8);
        }
        for &(from, to) in &self.arcs {
            key.extend_from_slice(&from.to_le_bytes());
            key.extend_from_slice(&to.to_le_bytes());
        }
        key
    }
}

/// What follows the uncolored stretch of a path: nothing, or one colored
/// vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathEnd {
    None,
    Blue,
    Red,
}

/// The value of a directed path of `n` uncolored vertices, possibly
/// followed by one colored vertex: bare paths are worth n × *, a blue end
/// shifts to (n−1) × * − 1, a red end to (n−1) × * + 1. With n = 0 the
/// position is the bare colored vertex (or nothing), worth 0.
pub fn col_path_value(store: &mut GameStore, n: u64, end: PathEnd) -> Result<GameId, ValueError> {
    let (stars, offset) = match end {
        PathEnd::None => (n, 0),
        _ if n == 0 => (0, 0),
        PathEnd::Blue => (n - 1, -1),
        PathEnd::Red => (n - 1, 1),
    };
    store.star_multiple(stars, DyadicRational::integer(offset))
}

/// Counts of uncolored vertices in a disjoint union of directed paths,
/// split by what their outgoing arc reaches: `a` nothing or an uncolored
/// vertex, `b` a red vertex, `c` a blue vertex. Always a + b + c = total
/// uncolored vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathColSummary {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Debug, Error)]
pub enum ColError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// Split a disjoint union of directed paths into its (a, b, c) counts and
/// the position's value a × * + b − c. Splitting at arcs that leave colored
/// vertices is value-preserving, so colors may appear anywhere along the
/// paths.
pub fn col_decompose_paths(
    store: &mut GameStore,
    p: &ColPosition,
) -> Result<(PathColSummary, GameId), ColError> {
    let n = p.colors.len();
    let mut out_arc: Vec<Option<u32>> = vec![None; n];
    let mut in_deg = vec![0u32; n];
    for &(from, to) in &p.arcs {
        if out_arc[from as usize].replace(to).is_some() {
            return Err(ShapeError::NotPathCollection(format!(
                "vertex {from} has out-degree > 1"
            ))
            .into());
        }
        in_deg[to as usize] += 1;
        if in_deg[to as usize] > 1 {
            return Err(ShapeError::NotPathCollection(format!(
                "vertex {to} has in-degree > 1"
            ))
            .into());
        }
    }
    // In/out-degrees ≤ 1 leave only paths and cycles; every path is swept
    // by a walk from its source, so anything unvisited sits on a cycle.
    let mut visited = 0usize;
    for v in 0..n {
        if in_deg[v] == 0 {
            let mut cur = Some(v as u32);
            while let Some(u) = cur {
                visited += 1;
                cur = out_arc[u as usize];
            }
        }
    }
    if visited != n {
        return Err(ShapeError::NotPathCollection("contains a cycle".into()).into());
    }

    let mut summary = PathColSummary { a: 0, b: 0, c: 0 };
    for v in 0..n {
        if p.colors[v] != VertexColor::Uncolored {
            continue;
        }
        match out_arc[v].map(|to| p.colors[to as usize]) {
            None | Some(VertexColor::Uncolored) => summary.a += 1,
            Some(VertexColor::Red) => summary.b += 1,
            Some(VertexColor::Blue) => summary.c += 1,
        }
    }
    let offset = DyadicRational::integer(summary.b as i64 - summary.c as i64);
    let value = store.star_multiple(summary.a as u64, offset)?;
    Ok((summary, value))
}

/// Result of testing the tree identity G(T) = * + G(T1) + G(T2) on one
/// tree: the directly computed value, the composed value, and whether they
/// are the same game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeConjectureReport {
    pub holds: bool,
    pub lhs: GameId,
    pub rhs: GameId,
}

#[derive(Debug, Error)]
pub enum TreeCheckError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

fn binary_tree_root(t: &ColPosition) -> Result<u32, ShapeError> {
    let n = t.colors.len();
    let bad = |msg: String| ShapeError::NotBinaryTree(msg);
    if n == 0 {
        return Err(bad("empty graph".into()));
    }
    if t.colors.iter().any(|&c| c != VertexColor::Uncolored) {
        return Err(bad("has a colored vertex".into()));
    }
    if t.arcs.len() != n - 1 {
        return Err(bad(format!("{n} vertices need {} arcs", n - 1)));
    }
    let mut in_deg = vec![0u32; n];
    let mut out_deg = vec![0u32; n];
    for &(from, to) in &t.arcs {
        out_deg[from as usize] += 1;
        in_deg[to as usize] += 1;
    }
    if out_deg.iter().any(|&d| d > 2) {
        return Err(bad("a vertex has more than two children".into()));
    }
    let roots: Vec<u32> = (0..n as u32).filter(|&v| in_deg[v as usize] == 0).collect();
    let &[root] = roots.as_slice() else {
        return Err(bad("root is not unique".into()));
    };
    if out_deg[root as usize] != 2 {
        return Err(bad("root must have exactly two children".into()));
    }
    Ok(root)
}

/// The subtree hanging from `start`, reindexed densely with vertex order
/// preserved.
fn subtree(t: &ColPosition, start: u32) -> ColPosition {
    let mut members = vec![start];
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for &(from, to) in t.arcs() {
            if from == v {
                members.push(to);
                frontier.push(to);
            }
        }
    }
    members.sort_unstable();
    let rank = |v: u32| members.binary_search(&v).expect("member") as u32;
    let arcs = t
        .arcs()
        .iter()
        .filter(|&&(from, _)| members.binary_search(&from).is_ok())
        .map(|&(from, to)| (rank(from), rank(to)))
        .collect();
    ColPosition::new(vec![VertexColor::Uncolored; members.len()], arcs).expect("valid subtree")
}

/// Test the identity G(T) = * + G(T1) + G(T2) on one uncolored rooted
/// binary tree whose root has two nonempty branches. The result is
/// informational: `holds` reports whether the identity held, it is not
/// asserted.
pub fn col_tree_conjecture_check(
    solver: &mut PartizanSolver,
    t: &ColPosition,
) -> Result<TreeConjectureReport, TreeCheckError> {
    let root = binary_tree_root(t)?;
    let n = t.colors.len();
    let mut reach = vec![false; n];
    reach[root as usize] = true;
    let mut frontier = vec![root];
    while let Some(v) = frontier.pop() {
        for &(from, to) in &t.arcs {
            if from == v && !reach[to as usize] {
                reach[to as usize] = true;
                frontier.push(to);
            }
        }
    }
    if reach.iter().any(|&r| !r) {
        return Err(ShapeError::NotBinaryTree("not connected".into()).into());
    }

    let children: Vec<u32> = t
        .arcs
        .iter()
        .filter(|&&(from, _)| from == root)
        .map(|&(_, to)| to)
        .collect();
    let lhs = solver.canonical_value(t)?;
    let v1 = solver.canonical_value(&subtree(t, children[0]))?;
    let v2 = solver.canonical_value(&subtree(t, children[1]))?;
    let store = solver.store_mut();
    let star = store.star();
    let rhs = store
        .add(star, v1)
        .and_then(|s| store.add(s, v2))
        .map_err(EngineError::from)?;
    Ok(TreeConjectureReport {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::OutcomeClass;

    fn path(text: &str) -> ColPosition {
        ColPosition::from_path_text(text).unwrap()
    }

    #[test]
    fn path_text_round_trip() {
        let p = path("U,U,B");
        assert_eq!(
            p.colors(),
            &[VertexColor::Uncolored, VertexColor::Uncolored, VertexColor::Blue]
        );
        assert_eq!(p.arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(p.path_text(), "U,U,B");
        assert_eq!(path("").vertex_count(), 0);
        assert!(ColPosition::from_path_text("U,X").is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let p = ColPosition::from_json(
            r#"{"vertices":[{"id":1,"color":"blue"},{"id":0,"color":"uncolored"}],"arcs":[[0,1]]}"#,
        )
        .unwrap();
        assert_eq!(p, path("U,B"));
        let bad = [
            r#"{"vertices":[{"id":0,"color":"uncolored"}],"arcs":[[0,0]]}"#,
            r#"{"vertices":[{"id":0,"color":"uncolored"},{"id":2,"color":"red"}],"arcs":[]}"#,
            r#"{"vertices":[{"id":0,"color":"uncolored"},{"id":0,"color":"red"}],"arcs":[]}"#,
            r#"{"vertices":[{"id":0,"color":"uncolored"},{"id":1,"color":"red"}],"arcs":[[0,1],[0,1]]}"#,
            r#"{"vertices":[{"id":0,"color":"green"}],"arcs":[]}"#,
        ];
        for doc in bad {
            assert!(ColPosition::from_json(doc).is_err(), "accepted {doc}");
        }
    }

    #[test]
    fn legal_moves_respect_outgoing_arcs() {
        assert_eq!(path("U").legal_moves(Player::Left), vec![0]);
        let to_blue = path("U,B");
        assert_eq!(to_blue.legal_moves(Player::Left), Vec::<u32>::new());
        assert_eq!(to_blue.legal_moves(Player::Right), vec![0]);
        let open = path("U,U");
        assert_eq!(open.legal_moves(Player::Left), vec![0, 1]);
        assert_eq!(open.legal_moves(Player::Right), vec![0, 1]);
    }

    #[test]
    fn apply_rejects_illegal_moves() {
        let p = path("U,B");
        assert_eq!(p.apply(0, Player::Right).unwrap(), path("R,B"));
        assert!(matches!(
            p.apply(0, Player::Left),
            Err(ShapeError::IllegalMove { vertex: 0, color: VertexColor::Blue })
        ));
        assert!(p.apply(1, Player::Right).is_err());
        assert!(p.apply(9, Player::Right).is_err());
    }

    #[test]
    fn path_value_formula() {
        let mut store = GameStore::new();
        let star = store.star();
        assert_eq!(col_path_value(&mut store, 1, PathEnd::None).unwrap(), star);
        assert_eq!(
            col_path_value(&mut store, 2, PathEnd::None).unwrap(),
            store.zero()
        );
        let minus_one_star = store
            .make_nus(DyadicRational::integer(-1), 1)
            .unwrap();
        assert_eq!(
            col_path_value(&mut store, 2, PathEnd::Blue).unwrap(),
            minus_one_star
        );
        let one = store.number(DyadicRational::integer(1)).unwrap();
        assert_eq!(col_path_value(&mut store, 3, PathEnd::Red).unwrap(), one);
        assert_eq!(
            col_path_value(&mut store, 0, PathEnd::Blue).unwrap(),
            store.zero()
        );
    }

    #[test]
    fn decompose_counts_and_value() {
        let mut store = GameStore::new();
        let (s, v) = col_decompose_paths(&mut store, &path("B,R,U,U,B")).unwrap();
        assert_eq!(s, PathColSummary { a: 1, b: 0, c: 1 });
        assert_eq!(store.format_value(v), "-1*");
        let (s, v) = col_decompose_paths(&mut store, &path("U,U,U")).unwrap();
        assert_eq!(s, PathColSummary { a: 3, b: 0, c: 0 });
        assert_eq!(store.format_value(v), "*");
        let (s, v) = col_decompose_paths(&mut store, &path("U,R")).unwrap();
        assert_eq!(s, PathColSummary { a: 0, b: 1, c: 0 });
        assert_eq!(store.format_value(v), "1");
    }

    #[test]
    fn decompose_rejects_non_paths() {
        let mut store = GameStore::new();
        let branch = ColPosition::new(
            vec![VertexColor::Uncolored; 3],
            vec![(0, 1), (0, 2)],
        )
        .unwrap();
        assert!(matches!(
            col_decompose_paths(&mut store, &branch),
            Err(ColError::Shape(ShapeError::NotPathCollection(_)))
        ));
        let cycle =
            ColPosition::new(vec![VertexColor::Uncolored; 2], vec![(0, 1), (1, 0)]).unwrap();
        assert!(col_decompose_paths(&mut store, &cycle).is_err());
    }

    #[test]
    fn smallest_tree_satisfies_the_identity() {
        let mut solver = PartizanSolver::new();
        let cherry = ColPosition::new(
            vec![VertexColor::Uncolored; 3],
            vec![(0, 1), (0, 2)],
        )
        .unwrap();
        let report = col_tree_conjecture_check(&mut solver, &cherry).unwrap();
        assert!(report.holds);
        assert_eq!(solver.store().format_value(report.lhs), "*");
        assert_eq!(solver.store().format_value(report.rhs), "*");
    }

    #[test]
    fn five_vertex_tree_reports_consistently() {
        let mut solver = PartizanSolver::new();
        let tree = ColPosition::new(
            vec![VertexColor::Uncolored; 5],
            vec![(0, 1), (0, 2), (1, 3), (2, 4)],
        )
        .unwrap();
        let report = col_tree_conjecture_check(&mut solver, &tree).unwrap();
        assert_eq!(report.holds, report.lhs == report.rhs);
    }

    #[test]
    fn tree_check_rejects_bad_shapes() {
        let mut solver = PartizanSolver::new();
        let one_child =
            ColPosition::new(vec![VertexColor::Uncolored; 2], vec![(0, 1)]).unwrap();
        assert!(matches!(
            col_tree_conjecture_check(&mut solver, &one_child),
            Err(TreeCheckError::Shape(ShapeError::NotBinaryTree(_)))
        ));
        let colored = ColPosition::new(
            vec![VertexColor::Blue, VertexColor::Uncolored, VertexColor::Uncolored],
            vec![(0, 1), (0, 2)],
        )
        .unwrap();
        assert!(col_tree_conjecture_check(&mut solver, &colored).is_err());
    }

    #[test]
    fn engine_outcomes_on_tiny_graphs() {
        let mut solver = PartizanSolver::new();
        assert_eq!(solver.outcome(&path("")).unwrap(), OutcomeClass::P);
        assert_eq!(solver.outcome(&path("U")).unwrap(), OutcomeClass::N);
        assert_eq!(solver.outcome(&path("U,B")).unwrap(), OutcomeClass::R);
    }
}
