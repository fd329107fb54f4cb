//! Position types, move generators, and closed-form solvers for the seven
//! rulesets.
//!
//! Each ruleset ships a position type implementing the engine traits, text
//! parsing/printing in the CLI grammar, and whatever closed formula exists
//! for it. Every move strictly decreases a finite measure (total sticks, or
//! uncolored vertices for Col), which is what lets the engine recurse
//! without cycle detection.

pub mod antonim;
pub mod col;
pub mod greedy;
pub mod nim;
pub mod rotisserie;
pub mod tower;

use thiserror::Error;

/// Text or JSON that does not describe a valid position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid position: {0}")]
pub struct ParseError(pub String);

/// A structurally valid graph handed to an operation whose shape
/// precondition it violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("not a disjoint union of directed paths: {0}")]
    NotPathCollection(String),
    #[error("not an uncolored rooted binary tree with two nonempty root branches: {0}")]
    NotBinaryTree(String),
    #[error("illegal move: vertex {vertex} cannot be colored {color}")]
    IllegalMove { vertex: u32, color: col::VertexColor },
}

/// Parse a comma-separated heap list like `3,5,7`; surrounding parentheses
/// (the form `moves` prints) are accepted too. Empty input is the empty
/// position.
pub(crate) fn parse_heap_list(text: &str) -> Result<Vec<u32>, ParseError> {
    let mut t = text.trim();
    if let Some(inner) = t.strip_prefix('(') {
        t = inner
            .strip_suffix(')')
            .ok_or_else(|| ParseError("unbalanced parentheses".into()))?
            .trim();
    }
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<u32>()
                .map_err(|_| ParseError(format!("bad heap size {part:?}")))
        })
        .collect()
}

pub(crate) fn format_heap_list(heaps: &[u32]) -> String {
    heaps
        .iter()
        .map(|h| h.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
