//! Crate-wide error type.
//!
//! Exit-code mapping used by the CLI: usage/parameter problems are exit 1,
//! domain errors (not an interval graph) are exit 2, guard and time-budget
//! aborts are exit 3.

use thiserror::Error;

/// Why a graph fails interval recognition.
///
/// The recognizer works by searching for a consecutive clique arrangement,
/// so the reason is recovered from the classical dichotomy: a graph is
/// interval iff it is chordal and contains no asteroidal triple. If the
/// chordality test fails, there is a chordless cycle; otherwise the failed
/// arrangement search means an asteroidal triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotIntervalReason {
    /// A chordless cycle of length >= 4 exists.
    ChordlessCycle,
    /// Chordal, but some three vertices form an asteroidal triple.
    AsteroidalTriple,
}

impl std::fmt::Display for NotIntervalReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotIntervalReason::ChordlessCycle => write!(f, "chordless cycle"),
            NotIntervalReason::AsteroidalTriple => write!(f, "asteroidal triple"),
        }
    }
}

/// All errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// The graph admits no interval representation.
    #[error("not an interval graph: {0}")]
    NotIntervalGraph(NotIntervalReason),

    /// An input exceeded a documented guard (oracle, canonical form, explorer).
    #[error("guard exceeded: {what} supports up to {limit}, got {actual}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Basepoint analysis was requested for a 0-improper graph.
    #[error("graph is 0-improper: no basepoint witnesses exist")]
    EmptyForProper,

    /// Criticality was requested for a 0-improper graph.
    #[error("graph is 0-improper: criticality is undefined at impropriety 0")]
    ZeroImpropriety,

    /// Malformed textual graph input (edge list or graph6).
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A representation violated its invariants or mismatched its graph.
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    /// A construction family was asked for parameters outside its domain.
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),

    /// The search ran past its time budget. Carries partial progress; the
    /// bound reported is an upper bound from explored arrangements only and
    /// is *not* a certificate.
    #[error(
        "time budget exceeded after {orderings_explored} arrangements (best upper bound so far: {})",
        best_upper_bound.map_or_else(|| "none".to_string(), |b| b.to_string())
    )]
    TimeBudgetExceeded {
        orderings_explored: u64,
        best_upper_bound: Option<usize>,
    },

    /// Underlying I/O failure (store, file input).
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Convenience constructor for parse errors.
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// The CLI exit code for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotIntervalGraph(_) => 2,
            Error::GuardExceeded { .. } | Error::TimeBudgetExceeded { .. } => 3,
            _ => 1,
        }
    }
}
