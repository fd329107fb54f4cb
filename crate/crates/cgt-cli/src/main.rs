//! `cgt` — solve positions, print canonical values, list winning moves,
//! replay the verification suites, and sweep the two-branch tree identity.
//!
//! Exit codes: 0 success (including informational reports), 1 verification
//! failure, 2 usage or parse error, 3 resource limit, 4 graph-shape error.

use std::fmt;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cgt_core::engine::{
    EngineError, ImpartialPosition, ImpartialSolver, PartizanSolver, DEFAULT_MEMO_CAP,
};
use cgt_core::rulesets::antonim::{antonim_outcome_closed, AntonimPosition};
use cgt_core::rulesets::col::{col_decompose_paths, ColError, ColPosition};
use cgt_core::rulesets::greedy::{greedy_outcome_closed, GreedyNimPosition};
use cgt_core::rulesets::nim::{nim_grundy_closed, NimPosition};
use cgt_core::rulesets::rotisserie::{
    rotisserie_outcome_closed, AdjnimIndexing, RotisseriePosition,
};
use cgt_core::rulesets::tower::{tower_nimber_closed, tower_outcome_closed, TowerNimPosition};
use cgt_core::rulesets::{ParseError, ShapeError};
use cgt_core::types::{OutcomeClass, Player};
use cgt_core::values::{GameStore, ValueError};
use cgt_core::verify::{
    check_adj_compare, check_adj_strategy, check_head_optimality, check_star_lemma,
    tree_conjecture_sweep, verify_antonim, verify_col_paths, verify_greedy, verify_nim,
    verify_rotisserie, verify_tower, Bounds, Status, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "cgt",
    version,
    about = "Exact solver workbench for heap games and myopic graph coloring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Outcome class of a position (closed form when one applies)
    Solve(SolveArgs),
    /// Canonical value and outcome of a coloring position
    Value(ValueArgs),
    /// Winning moves, or all legal moves with --all
    Moves(MovesArgs),
    /// Replay a verification suite and print its report
    Verify(VerifyArgs),
    /// Sweep the two-branch tree identity and report per tree
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ruleset {
    Nim,
    Antonim,
    Tower,
    Rotisserie,
    Greedy,
    ColPath,
    ColGraph,
}

impl Ruleset {
    fn name(self) -> &'static str {
        match self {
            Ruleset::Nim => "nim",
            Ruleset::Antonim => "antonim",
            Ruleset::Tower => "tower",
            Ruleset::Rotisserie => "rotisserie",
            Ruleset::Greedy => "greedy",
            Ruleset::ColPath => "col-path",
            Ruleset::ColGraph => "col-graph",
        }
    }

    fn is_coloring(self) -> bool {
        matches!(self, Ruleset::ColPath | Ruleset::ColGraph)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlayerArg {
    Blue,
    Red,
}

impl PlayerArg {
    fn player(self) -> Player {
        match self {
            PlayerArg::Blue => Player::Left,
            PlayerArg::Red => Player::Right,
        }
    }

    fn name(self) -> &'static str {
        match self {
            PlayerArg::Blue => "blue",
            PlayerArg::Red => "red",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexingArg {
    OneBased,
    ZeroBased,
}

impl IndexingArg {
    fn indexing(self) -> AdjnimIndexing {
        match self {
            IndexingArg::OneBased => AdjnimIndexing::OneBased,
            IndexingArg::ZeroBased => AdjnimIndexing::ZeroBased,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Nim,
    Antonim,
    Tower,
    Rotisserie,
    Greedy,
    ColPaths,
    StarLemma,
    AdjStrategy,
    AdjCompare,
    HeadOptimality,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Nim => "nim",
            Suite::Antonim => "antonim",
            Suite::Tower => "tower",
            Suite::Rotisserie => "rotisserie",
            Suite::Greedy => "greedy",
            Suite::ColPaths => "col-paths",
            Suite::StarLemma => "star-lemma",
            Suite::AdjStrategy => "adj-strategy",
            Suite::AdjCompare => "adj-compare",
            Suite::HeadOptimality => "head-optimality",
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(value_enum)]
    ruleset: Ruleset,
    /// Position text, or a JSON graph file for col-graph
    position: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Skip the closed form and ask the game-tree engine
    #[arg(long)]
    force_oracle: bool,
    /// Memo-table entry cap for the engine
    #[arg(long, env = "CGT_MEMO_CAP")]
    memo_cap: Option<usize>,
}

#[derive(Args)]
struct ValueArgs {
    /// col-path or col-graph (values are partizan)
    #[arg(value_enum)]
    ruleset: Ruleset,
    /// Position text, or a JSON graph file for col-graph
    position: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Compute with the game-tree engine even on paths
    #[arg(long, conflicts_with = "path_formula")]
    force_oracle: bool,
    /// Compute with the path decomposition formula; the graph must be a
    /// disjoint union of directed paths
    #[arg(long)]
    path_formula: bool,
    /// Memo-table entry cap for the engine
    #[arg(long, env = "CGT_MEMO_CAP")]
    memo_cap: Option<usize>,
}

#[derive(Args)]
struct MovesArgs {
    #[arg(value_enum)]
    ruleset: Ruleset,
    /// Position text, or a JSON graph file for col-graph
    position: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Which player moves (required for the coloring rulesets)
    #[arg(long, value_enum)]
    player: Option<PlayerArg>,
    /// List every legal move instead of only the winning ones
    #[arg(long)]
    all: bool,
    /// Memo-table entry cap for the engine
    #[arg(long, env = "CGT_MEMO_CAP")]
    memo_cap: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Heap-count bound (heap-game suites)
    #[arg(long)]
    max_heaps: Option<usize>,
    /// Heap-size bound (heap-game suites)
    #[arg(long)]
    max_heap_size: Option<u32>,
    /// Vertex bound (col-paths, head-optimality)
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Absolute-value bound (star-lemma)
    #[arg(long)]
    abs_max: Option<u32>,
    /// Denominator bound, a power of two (star-lemma)
    #[arg(long)]
    denominator_max: Option<u32>,
    /// Index convention for the all-heaps->=2 queue rule (rotisserie)
    #[arg(long, value_enum)]
    adjnim_indexing: Option<IndexingArg>,
    /// Memo-table entry cap for the engine
    #[arg(long, env = "CGT_MEMO_CAP")]
    memo_cap: Option<usize>,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Largest tree to sweep, in vertices (at least 3)
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(3..))]
    max_vertices: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Memo-table entry cap for the engine
    #[arg(long, env = "CGT_MEMO_CAP")]
    memo_cap: Option<usize>,
}

/// Failures that map onto the nonzero exit codes (verification failures are
/// reported through the verify report itself, not through this type).
enum CliError {
    Usage(String),
    Resource(String),
    Shape(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Shape(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Resource(m) | CliError::Shape(m) => m,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ShapeError> for CliError {
    fn from(e: ShapeError) -> Self {
        CliError::Shape(e.to_string())
    }
}

impl From<ValueError> for CliError {
    fn from(e: ValueError) -> Self {
        match e {
            ValueError::Parse { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Resource(e.to_string()),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::MemoCapExceeded { .. } => CliError::Resource(e.to_string()),
            EngineError::Value(v) => v.into(),
        }
    }
}

impl From<ColError> for CliError {
    fn from(e: ColError) -> Self {
        match e {
            ColError::Shape(s) => s.into(),
            ColError::Value(v) => v.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Value(args) => cmd_value(args),
        Command::Moves(args) => cmd_moves(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Conjecture(args) => cmd_conjecture(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn cap_of(memo_cap: Option<usize>) -> usize {
    memo_cap.unwrap_or(DEFAULT_MEMO_CAP)
}

fn to_json<T: Serialize>(answer: &T) -> String {
    serde_json::to_string_pretty(answer).expect("answers serialize")
}

// ---------------------------------------------------------------- solve --

#[derive(Serialize)]
struct SolveAnswer {
    ruleset: &'static str,
    position: String,
    outcome: OutcomeClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    grundy: Option<u32>,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

impl SolveAnswer {
    fn text_line(&self) -> String {
        match self.grundy {
            Some(g) => format!("{} (grundy {g}, {})", self.outcome, self.method),
            None => format!("{} ({})", self.outcome, self.method),
        }
    }
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, CliError> {
    let cap = cap_of(args.memo_cap);
    let (outcome, grundy, method, note) = solve_dispatch(&args, cap)?;
    let answer = SolveAnswer {
        ruleset: args.ruleset.name(),
        position: args.position,
        outcome,
        grundy,
        method,
        note,
    };
    match args.format {
        Format::Text => {
            println!("{}", answer.text_line());
            if let Some(note) = &answer.note {
                println!("note: {note}");
            }
        }
        Format::Json => println!("{}", to_json(&answer)),
    }
    Ok(ExitCode::SUCCESS)
}

/// Outcome, the grundy value when a closed formula supplies one, which
/// method answered, and a note when no closed form covers the position.
type Solved = (OutcomeClass, Option<u32>, &'static str, Option<String>);

fn solve_dispatch(args: &SolveArgs, cap: usize) -> Result<Solved, CliError> {
    let text = args.position.as_str();
    match args.ruleset {
        Ruleset::Nim => {
            let p: NimPosition = text.parse()?;
            if args.force_oracle {
                let outcome = ImpartialSolver::with_cap(cap).outcome(&p)?;
                Ok((outcome, None, "oracle", None))
            } else {
                let g = nim_grundy_closed(&p);
                let outcome = if g.is_zero() {
                    OutcomeClass::P
                } else {
                    OutcomeClass::N
                };
                Ok((outcome, Some(g.value()), "closed-form", None))
            }
        }
        Ruleset::Antonim => {
            let p: AntonimPosition = text.parse()?;
            match antonim_outcome_closed(&p) {
                Ok(outcome) if !args.force_oracle => Ok((outcome, None, "closed-form", None)),
                closed => {
                    let outcome = ImpartialSolver::with_cap(cap).outcome(&p)?;
                    let note = closed.err().map(|e| e.to_string());
                    Ok((outcome, None, "oracle", note))
                }
            }
        }
        Ruleset::Tower => {
            let p: TowerNimPosition = text.parse()?;
            if args.force_oracle {
                let outcome = ImpartialSolver::with_cap(cap).outcome(&p)?;
                Ok((outcome, None, "oracle", None))
            } else {
                let grundy = tower_nimber_closed(&p).map(|n| n.value());
                Ok((tower_outcome_closed(&p), grundy, "closed-form", None))
            }
        }
        Ruleset::Rotisserie => {
            let p: RotisseriePosition = text.parse()?;
            match rotisserie_outcome_closed(&p) {
                Some(outcome) if !args.force_oracle => Ok((outcome, None, "closed-form", None)),
                closed => {
                    let outcome = ImpartialSolver::with_cap(cap).outcome(&p)?;
                    let note = if closed.is_none() {
                        Some(format!(
                            "no known closed form for length-{} queues containing a 1",
                            p.queue().len()
                        ))
                    } else {
                        None
                    };
                    Ok((outcome, None, "oracle", note))
                }
            }
        }
        Ruleset::Greedy => {
            let p: GreedyNimPosition = text.parse()?;
            if args.force_oracle {
                let outcome = ImpartialSolver::with_cap(cap).outcome(&p)?;
                Ok((outcome, None, "oracle", None))
            } else {
                Ok((greedy_outcome_closed(&p), None, "closed-form", None))
            }
        }
        Ruleset::ColPath | Ruleset::ColGraph => {
            let p = parse_col(args.ruleset, text)?;
            if !args.force_oracle {
                // The decomposition formula is the closed form; it covers
                // exactly the disjoint unions of directed paths.
                let mut store = GameStore::new();
                match col_decompose_paths(&mut store, &p) {
                    Ok((_, v)) => return Ok((store.outcome_of_value(v), None, "closed-form", None)),
                    Err(ColError::Shape(_)) => {}
                    Err(ColError::Value(e)) => return Err(e.into()),
                }
            }
            let outcome = PartizanSolver::with_cap(cap).outcome(&p)?;
            Ok((outcome, None, "oracle", None))
        }
    }
}

// ---------------------------------------------------------------- value --

#[derive(Serialize)]
struct ValueAnswer {
    ruleset: &'static str,
    position: String,
    value: String,
    outcome: OutcomeClass,
    method: &'static str,
}

fn cmd_value(args: ValueArgs) -> Result<ExitCode, CliError> {
    if !args.ruleset.is_coloring() {
        return Err(CliError::Usage(format!(
            "value applies to the partizan rulesets col-path and col-graph, not {}",
            args.ruleset.name()
        )));
    }
    let cap = cap_of(args.memo_cap);
    let p = parse_col(args.ruleset, &args.position)?;
    let use_formula = match args.ruleset {
        Ruleset::ColPath => !args.force_oracle,
        _ => args.path_formula,
    };
    let (value, outcome, method) = if use_formula {
        let mut store = GameStore::new();
        let (_, v) = col_decompose_paths(&mut store, &p)?;
        (
            store.format_value(v),
            store.outcome_of_value(v),
            "path-formula",
        )
    } else {
        let mut solver = PartizanSolver::with_cap(cap);
        let v = solver.canonical_value(&p)?;
        let store = solver.store_mut();
        (store.format_value(v), store.outcome_of_value(v), "engine")
    };
    let answer = ValueAnswer {
        ruleset: args.ruleset.name(),
        position: args.position,
        value,
        outcome,
        method,
    };
    match args.format {
        Format::Text => println!("{} ({})", answer.value, answer.outcome),
        Format::Json => println!("{}", to_json(&answer)),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- moves --

#[derive(Serialize)]
struct MovesAnswer {
    ruleset: &'static str,
    position: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    player: Option<&'static str>,
    all: bool,
    moves: Vec<String>,
}

fn cmd_moves(args: MovesArgs) -> Result<ExitCode, CliError> {
    let cap = cap_of(args.memo_cap);
    let moves = if args.ruleset.is_coloring() {
        let Some(player_arg) = args.player else {
            return Err(CliError::Usage(
                "--player blue|red is required for the coloring rulesets".into(),
            ));
        };
        let player = player_arg.player();
        let p = parse_col(args.ruleset, &args.position)?;
        let mut solver = PartizanSolver::with_cap(cap);
        let mut lines = Vec::new();
        for v in p.legal_moves(player) {
            let keep = if args.all {
                true
            } else {
                let outcome = solver.outcome(&p.apply(v, player)?)?;
                outcome == OutcomeClass::P || outcome == OutcomeClass::win_class(player)
            };
            if keep {
                lines.push(format!("color vertex {v}"));
            }
        }
        lines
    } else {
        if args.player.is_some() {
            return Err(CliError::Usage(
                "--player applies only to the coloring rulesets".into(),
            ));
        }
        let text = args.position.as_str();
        match args.ruleset {
            Ruleset::Nim => heap_move_lines(&text.parse::<NimPosition>()?, args.all, cap)?,
            Ruleset::Antonim => set_move_lines(&text.parse::<AntonimPosition>()?, args.all, cap)?,
            Ruleset::Tower => heap_move_lines(&text.parse::<TowerNimPosition>()?, args.all, cap)?,
            Ruleset::Rotisserie => {
                heap_move_lines(&text.parse::<RotisseriePosition>()?, args.all, cap)?
            }
            Ruleset::Greedy => heap_move_lines(&text.parse::<GreedyNimPosition>()?, args.all, cap)?,
            Ruleset::ColPath | Ruleset::ColGraph => unreachable!("coloring handled above"),
        }
    };
    let answer = MovesAnswer {
        ruleset: args.ruleset.name(),
        position: args.position,
        player: args.player.map(PlayerArg::name),
        all: args.all,
        moves,
    };
    match args.format {
        Format::Text => {
            for m in &answer.moves {
                println!("{m}");
            }
        }
        Format::Json => println!("{}", to_json(&answer)),
    }
    Ok(ExitCode::SUCCESS)
}

fn impartial_successors<P>(p: &P, all: bool, cap: usize) -> Result<Vec<P>, CliError>
where
    P: ImpartialPosition,
{
    if all {
        Ok(p.options())
    } else {
        Ok(ImpartialSolver::with_cap(cap).winning_moves(p)?)
    }
}

/// Heap successors print parenthesized, `(1,1)`, which the position parsers
/// accept back.
fn heap_move_lines<P>(p: &P, all: bool, cap: usize) -> Result<Vec<String>, CliError>
where
    P: ImpartialPosition + fmt::Display,
{
    Ok(impartial_successors(p, all, cap)?
        .iter()
        .map(|o| format!("({o})"))
        .collect())
}

/// Pile-set successors already print in their own `{1,3}` grammar.
fn set_move_lines(p: &AntonimPosition, all: bool, cap: usize) -> Result<Vec<String>, CliError> {
    Ok(impartial_successors(p, all, cap)?
        .iter()
        .map(|o| o.to_string())
        .collect())
}

// --------------------------------------------------------------- verify --

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    reject_stray_bounds(&args)?;
    let cap = cap_of(args.memo_cap);
    let heap_bounds = |dh: usize, ds: u32| Bounds {
        max_heaps: args.max_heaps.unwrap_or(dh),
        max_heap_size: args.max_heap_size.unwrap_or(ds),
    };
    let report = match args.suite {
        Suite::Nim => verify_nim(&mut ImpartialSolver::with_cap(cap), heap_bounds(4, 8))?,
        Suite::Antonim => verify_antonim(&mut ImpartialSolver::with_cap(cap), heap_bounds(3, 15))?,
        Suite::Tower => verify_tower(&mut ImpartialSolver::with_cap(cap), heap_bounds(6, 5))?,
        Suite::Rotisserie => {
            let indexing = args
                .adjnim_indexing
                .unwrap_or(IndexingArg::OneBased)
                .indexing();
            verify_rotisserie(&mut ImpartialSolver::with_cap(cap), heap_bounds(4, 6), indexing)?
        }
        Suite::Greedy => verify_greedy(&mut ImpartialSolver::with_cap(cap), heap_bounds(5, 6))?,
        Suite::ColPaths => verify_col_paths(
            &mut PartizanSolver::with_cap(cap),
            args.max_vertices.unwrap_or(7),
        )?,
        Suite::StarLemma => {
            let denominator = args.denominator_max.unwrap_or(8);
            if !denominator.is_power_of_two() {
                return Err(CliError::Usage(format!(
                    "--denominator-max must be a power of two, got {denominator}"
                )));
            }
            check_star_lemma(
                &mut GameStore::new(),
                args.abs_max.unwrap_or(4),
                denominator,
            )?
        }
        Suite::AdjStrategy => {
            check_adj_strategy(&mut ImpartialSolver::with_cap(cap), heap_bounds(4, 5))?
        }
        Suite::AdjCompare => {
            check_adj_compare(&mut ImpartialSolver::with_cap(cap), heap_bounds(4, 5))?
        }
        Suite::HeadOptimality => check_head_optimality(
            &mut PartizanSolver::with_cap(cap),
            args.max_vertices.unwrap_or(6),
        )?,
    };
    match args.format {
        Format::Text => print_report_text(&report),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(if report.status == Status::Fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

/// A bound flag that the chosen suite never reads is a usage error, not a
/// silent no-op.
fn reject_stray_bounds(args: &VerifyArgs) -> Result<(), CliError> {
    let heap_suite = matches!(
        args.suite,
        Suite::Nim
            | Suite::Antonim
            | Suite::Tower
            | Suite::Rotisserie
            | Suite::Greedy
            | Suite::AdjStrategy
            | Suite::AdjCompare
    );
    let vertex_suite = matches!(args.suite, Suite::ColPaths | Suite::HeadOptimality);
    let star_suite = matches!(args.suite, Suite::StarLemma);
    let mut stray = Vec::new();
    if args.max_heaps.is_some() && !heap_suite {
        stray.push("--max-heaps");
    }
    if args.max_heap_size.is_some() && !heap_suite {
        stray.push("--max-heap-size");
    }
    if args.max_vertices.is_some() && !vertex_suite {
        stray.push("--max-vertices");
    }
    if args.abs_max.is_some() && !star_suite {
        stray.push("--abs-max");
    }
    if args.denominator_max.is_some() && !star_suite {
        stray.push("--denominator-max");
    }
    if args.adjnim_indexing.is_some() && args.suite != Suite::Rotisserie {
        stray.push("--adjnim-indexing");
    }
    if stray.is_empty() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "{} does not apply to suite {}",
            stray.join(", "),
            args.suite.name()
        )))
    }
}

fn print_report_text(report: &VerificationReport) {
    println!("check: {}", report.check);
    println!("bounds: {}", report.bounds);
    println!("positions checked: {}", report.positions_checked);
    let status = match report.status {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Informational => "informational",
    };
    println!("status: {status}");
    if report.mismatches.is_empty() {
        println!("mismatches: none");
    } else {
        println!("mismatches ({}):", report.mismatches.len());
        for m in &report.mismatches {
            println!("  {}: closed {}, oracle {}", m.position, m.closed, m.oracle);
        }
    }
}

// ----------------------------------------------------------- conjecture --

fn cmd_conjecture(args: ConjectureArgs) -> Result<ExitCode, CliError> {
    let cap = cap_of(args.memo_cap);
    let mut solver = PartizanSolver::with_cap(cap);
    let sweep = tree_conjecture_sweep(&mut solver, args.max_vertices as usize)?;
    match args.format {
        Format::Json => println!("{}", to_json(&sweep)),
        Format::Text => {
            println!(
                "{:<16} {:>8}  {:<5}  {:<14}  {}",
                "tree", "vertices", "holds", "engine", "predicted"
            );
            for entry in &sweep.trees {
                println!(
                    "{:<16} {:>8}  {:<5}  {:<14}  {}",
                    entry.tree,
                    entry.vertices,
                    if entry.holds { "yes" } else { "NO" },
                    entry.lhs,
                    entry.rhs
                );
            }
            println!("trees checked: {}", sweep.trees_checked);
            if sweep.counterexamples.is_empty() {
                println!("counterexamples: none");
            } else {
                println!("counterexamples: {}", sweep.counterexamples.join(", "));
            }
            if sweep.exotic_values.is_empty() {
                println!("values outside number/number+star/nimber: none");
            } else {
                let listed: Vec<String> = sweep
                    .exotic_values
                    .iter()
                    .map(|e| format!("{} = {}", e.tree, e.value))
                    .collect();
                println!(
                    "values outside number/number+star/nimber: {}",
                    listed.join(", ")
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- shared --

fn parse_col(ruleset: Ruleset, arg: &str) -> Result<ColPosition, CliError> {
    match ruleset {
        Ruleset::ColPath => Ok(ColPosition::from_path_text(arg)?),
        Ruleset::ColGraph => {
            let text = fs::read_to_string(arg).map_err(|e| {
                CliError::Usage(format!("cannot read graph file {arg:?}: {e}"))
            })?;
            Ok(ColPosition::from_json(&text)?)
        }
        other => unreachable!("{} is not a coloring ruleset", other.name()),
    }
}
