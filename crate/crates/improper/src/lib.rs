//! Exact impropriety of interval graphs.
//!
//! An *interval representation* of a graph assigns each vertex a closed
//! interval on the line (all endpoints pairwise distinct) so that two
//! vertices are adjacent exactly when their intervals intersect. Within one
//! representation, the *containment count* of a vertex is the number of
//! intervals properly nested inside its interval; the representation's
//! impropriety is the maximum count, and the graph's **impropriety** is the
//! minimum of that maximum over all valid representations. The dual
//! objective (how many intervals properly contain a given one) is the
//! graph's **properness**. A graph is proper (0-improper and 0-proper)
//! exactly when it is a claw-free interval graph.
//!
//! This crate computes both quantities exactly at desk scale, certifies them
//! with explicit representations, and layers analysis tooling on top:
//!
//! - [`graph`]: dense small-graph type, edge-list / graph6 / DOT codecs,
//!   components, vertex deletion, maximal cliques, canonical forms.
//! - [`engine`]: the exact search over consecutive clique arrangements, the
//!   canonical placement that realizes an arrangement as integer intervals,
//!   and an independent brute-force oracle over endpoint orderings.
//! - [`structure`]: basepoint witnesses, local / side / exterior components.
//! - [`families`]: parameterized constructions with claimed values attached
//!   as metadata for verification, never assumed.
//! - [`spectrum`]: single-vertex removal spectra, criticality, exhaustive
//!   exploration with a resumable JSONL store, and verification suites.
//! - [`render`]: SVG and TikZ interval diagrams, with an SVG re-parser used
//!   to round-trip the drawn geometry back to a graph.
//!
//! Everything is deterministic: identical inputs produce byte-identical
//! serialized outputs regardless of thread count.

pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod render;
pub mod spectrum;
pub mod structure;

pub use engine::{
    check_interval, impropriety, impropriety_with_budget, is_interval_graph, oracle_impropriety,
    oracle_impropriety_examined,
    oracle_properness, properness, properness_with_budget, Certificate, ContainmentProfile,
    IntervalRepresentation, SearchBudget, SearchStats,
};
pub use error::Error;
pub use families::{
    gen_chain_drop, gen_clique, gen_drop_pair, gen_drop_to_seven, gen_fat_claw, gen_half_drop,
    gen_path, gen_star, FamilyInstance, FamilyParams,
};
pub use graph::{CliqueSet, Graph};
pub use render::{parse_svg_geometry, render_svg, render_tikz, RenderStyle};
pub use spectrum::{
    class_spectrum, conjecture_stats, explore, is_critical, oracle_equivalence, qproper_stability,
    read_store, removal_spectrum, spectrum_bound_scan, verify_family_claims, verify_spectrum_bound,
    ClassSpectrumReport, ConjectureStats, ExploreOutcome, ExploreRecord, RowStatus, SpectrumReport,
    BoundScanOutcome, VerificationTable, VerifyRow,
};
pub use structure::{
    basepoint_witnesses, exterior_components, local_components, side_components,
    structure_report, BasepointView, SideComponentView, StructureReport,
};

/// Hard cap on vertex count for the dense bitset representation.
pub const MAX_VERTICES: usize = 62;

/// Guard for canonical-form computation (branch-and-bound relabeling).
pub const CANONICAL_GUARD: usize = 12;

/// Guard for the brute-force endpoint-ordering oracle.
pub const ORACLE_GUARD: usize = 8;

/// Guard for exhaustive exploration (graphs up to isomorphism).
pub const EXPLORE_GUARD: usize = 9;
