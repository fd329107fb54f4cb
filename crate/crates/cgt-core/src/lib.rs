//! Solver workbench for heap games and Myopic Col.
//!
//! `engine` solves positions exhaustively (grundy values for impartial
//! rulesets, canonical values and outcomes for partizan ones), `values`
//! implements the canonical-form game algebra those solvers compute in,
//! `rulesets` defines the positions, their moves, and every known closed
//! formula, and `verify` cross-checks the formulas against the engine.

pub mod engine;
pub mod rulesets;
pub mod types;
pub mod values;
pub mod verify;
