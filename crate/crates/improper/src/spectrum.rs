//! Removal spectra, criticality, verification sweeps, and the exhaustive
//! explorer with a persistent JSONL store.
//!
//! The removal spectrum of a graph is the set of improprieties obtainable
//! by deleting a single vertex. A graph of impropriety `p ≥ 1` is critical
//! when every deletion lands at `p − 1` or lower. Verification sweeps
//! re-measure the claims attached to the construction families and emit
//! tables whose rows are marked:
//!
//! * `PASS`    — measured value equals the claimed value;
//! * `FINDING` — measured value contradicts a claim carried by the source
//!   construction (the discrepancy is data, not an error);
//! * `FAIL`    — internal inconsistency (engine disagreeing with the
//!   independent oracle, or an invariant breach). These fail runs.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine;
use crate::error::Error;
use crate::families::{
    gen_chain_drop, gen_drop_pair, gen_drop_to_seven, gen_fat_claw, gen_half_drop, FamilyInstance,
};
use crate::graph::{canonical_form, enumerate_all_graphs, enumerate_connected_graphs, Graph};
use crate::structure;

// ----------------------------------------------------------------------
// spectra and criticality
// ----------------------------------------------------------------------

/// Removal spectrum of one graph.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    /// Canonical graph6 key when the graph fits the canonical-form guard,
    /// otherwise the input labeling's graph6 (flagged in `notes`).
    pub graph_key: String,
    /// Exact impropriety of the graph itself.
    pub impropriety: usize,
    /// `(v, impropriety of G − v)` for every vertex, ascending by `v`.
    pub per_vertex: Vec<(usize, usize)>,
    /// Sorted set of the per-vertex values.
    pub spectrum: Vec<usize>,
    /// True iff impropriety ≥ 1 and every deletion lands at most one below.
    pub critical: bool,
    /// Deviations worth surfacing (disconnecting deletions, key fallback).
    pub notes: Vec<String>,
}

fn graph_key(g: &Graph) -> (String, Option<String>) {
    match canonical_form(g) {
        Ok(form) => (form.canonical_graph(g).to_graph6(), None),
        Err(_) => (
            g.to_graph6(),
            Some(
                "vertex count exceeds the canonical-form guard; graph key uses the input labeling"
                    .to_string(),
            ),
        ),
    }
}

/// Impropriety of every single-vertex deletion, with the derived spectrum
/// and criticality flag.
pub fn removal_spectrum(g: &Graph) -> Result<SpectrumReport, Error> {
    let impropriety = engine::impropriety(g)?.value;
    let (key, key_note) = graph_key(g);
    let mut notes = Vec::new();
    notes.extend(key_note);

    let base_components = g.connected_components().len();
    let deletions: Vec<(usize, usize, bool)> = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| {
            let (sub, _) = g.delete_vertex(v);
            let value = if sub.vertex_count() == 0 {
                0
            } else {
                engine::impropriety(&sub)
                    .expect("deleting a vertex keeps an interval graph interval")
                    .value
            };
            let splits = sub.connected_components().len()
                > base_components - usize::from(g.degree(v) == 0);
            (v, value, splits)
        })
        .collect();

    let per_vertex: Vec<(usize, usize)> = deletions.iter().map(|&(v, val, _)| (v, val)).collect();
    for &(v, _, splits) in &deletions {
        if splits {
            notes.push(format!(
                "deleting vertex {v} disconnects the remainder; its impropriety is the maximum \
                 over components"
            ));
        }
    }

    let spectrum: Vec<usize> = per_vertex
        .iter()
        .map(|&(_, val)| val)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let critical = impropriety >= 1
        && per_vertex
            .iter()
            .all(|&(_, val)| val <= impropriety - 1);

    debug_assert!(per_vertex.iter().all(|&(_, val)| val <= impropriety));
    Ok(SpectrumReport {
        graph_key: key,
        impropriety,
        per_vertex,
        spectrum,
        critical,
        notes,
    })
}

/// Whether every single-vertex deletion strictly lowers the impropriety.
///
/// Undefined (error) for 0-improper graphs: there is nothing to drop to.
pub fn is_critical(g: &Graph) -> Result<bool, Error> {
    let report = removal_spectrum(g)?;
    if report.impropriety == 0 {
        return Err(Error::ZeroImpropriety);
    }
    Ok(report.critical)
}

// ----------------------------------------------------------------------
// class spectra
// ----------------------------------------------------------------------

/// Union of removal spectra over the critical exactly-`p`-improper graphs
/// found in a corpus.
#[derive(Debug, Clone, Serialize)]
pub struct ClassSpectrumReport {
    /// The impropriety class scanned for.
    pub p: usize,
    /// Sorted union of the spectra of all critical exactly-`p` graphs.
    pub union_spectrum: Vec<usize>,
    /// First witness per attained value, in corpus order.
    pub witnesses: BTreeMap<usize, String>,
    /// Where the scanned graphs came from.
    pub corpus_descriptor: String,
}

/// Scans `corpus` for critical exactly-`p`-improper interval graphs and
/// unions their removal spectra.
pub fn class_spectrum(
    p: usize,
    corpus: &[Graph],
    corpus_descriptor: &str,
) -> Result<ClassSpectrumReport, Error> {
    let reports: Vec<Option<SpectrumReport>> = corpus
        .par_iter()
        .map(|g| {
            if !engine::is_interval_graph(g) {
                return None;
            }
            let report = removal_spectrum(g).expect("interval graph just checked");
            (report.impropriety == p && report.critical).then_some(report)
        })
        .collect();

    let mut union = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for report in reports.into_iter().flatten() {
        for &value in &report.spectrum {
            union.insert(value);
            witnesses
                .entry(value)
                .or_insert_with(|| report.graph_key.clone());
        }
    }
    let union_spectrum: Vec<usize> = union.into_iter().collect();
    debug_assert!(union_spectrum.iter().all(|&v| v < p.max(1)));
    Ok(ClassSpectrumReport {
        p,
        union_spectrum,
        witnesses,
        corpus_descriptor: corpus_descriptor.to_string(),
    })
}

// ----------------------------------------------------------------------
// explorer and its store
// ----------------------------------------------------------------------

/// One line of the explorer's JSONL store.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExploreRecord {
    /// graph6 of the graph as enumerated or ingested.
    pub g6: String,
    /// Canonical graph6 key (dedup and resume identity).
    pub key: String,
    /// Vertex count.
    pub n: usize,
    /// Whether the graph is an interval graph.
    pub interval: bool,
    /// Exact impropriety; absent for non-interval graphs.
    pub imp: Option<usize>,
    /// `(v, impropriety of G − v)` pairs; empty for non-interval graphs.
    pub per_vertex: Vec<(usize, usize)>,
    /// Sorted spectrum; empty for non-interval graphs.
    pub spectrum: Vec<usize>,
    /// Criticality; absent for non-interval graphs.
    pub critical: Option<bool>,
    /// Per-record annotations.
    pub notes: Vec<String>,
}

/// A store line that could not be parsed.
#[derive(Debug, Clone, Serialize)]
pub struct StoreIssue {
    /// 1-based line number.
    pub line: usize,
    /// Parser message.
    pub message: String,
}

/// Result summary of one explorer run.
#[derive(Debug, Clone, Serialize)]
pub struct ExploreOutcome {
    /// Records in the finalized store.
    pub total_records: usize,
    /// Records computed by this run.
    pub computed: usize,
    /// Enumerated graphs skipped because their key was already stored.
    pub skipped_existing: usize,
    /// Corrupt lines found (and dropped) in the pre-existing store.
    pub corrupt_lines: Vec<StoreIssue>,
}

/// Reads a JSONL store, reporting corrupt lines by offset and continuing.
/// A missing file reads as empty.
pub fn read_store(store: &Path) -> Result<(Vec<ExploreRecord>, Vec<StoreIssue>), Error> {
    if !store.exists() {
        return Ok((Vec::new(), Vec::new()));
    }
    let text = fs::read_to_string(store)?;
    let mut records = Vec::new();
    let mut issues = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ExploreRecord>(line) {
            Ok(record) => records.push(record),
            Err(err) => issues.push(StoreIssue {
                line: idx + 1,
                message: err.to_string(),
            }),
        }
    }
    Ok((records, issues))
}

fn explore_record(g: &Graph) -> ExploreRecord {
    let g6 = g.to_graph6();
    let (key, _) = graph_key(g);
    if !engine::is_interval_graph(g) {
        return ExploreRecord {
            g6,
            key,
            n: g.vertex_count(),
            interval: false,
            imp: None,
            per_vertex: Vec::new(),
            spectrum: Vec::new(),
            critical: None,
            notes: Vec::new(),
        };
    }
    let report = removal_spectrum(g).expect("interval graph just checked");
    ExploreRecord {
        g6,
        key: report.graph_key,
        n: g.vertex_count(),
        interval: true,
        imp: Some(report.impropriety),
        per_vertex: report.per_vertex,
        spectrum: report.spectrum,
        critical: Some(report.critical),
        notes: report.notes,
    }
}

/// Enumerates all connected graphs up to isomorphism on up to `max_n`
/// vertices, records the removal spectrum of every interval graph (and a
/// marker record for every non-interval graph), and appends the results to
/// the JSONL store at `store`.
///
/// Resumable: keys already present are skipped. The finalized store is
/// rewritten in canonical-key order, so interrupted and fresh runs end in
/// byte-identical files. Corrupt lines are reported and dropped; their
/// graphs are recomputed.
pub fn explore(max_n: usize, store: &Path) -> Result<ExploreOutcome, Error> {
    if max_n > crate::EXPLORE_GUARD {
        return Err(Error::GuardExceeded {
            what: "explorer enumeration",
            limit: crate::EXPLORE_GUARD,
            actual: max_n,
        });
    }
    let (existing, corrupt_lines) = read_store(store)?;
    let mut by_key: BTreeMap<String, ExploreRecord> = BTreeMap::new();
    for record in existing {
        by_key.entry(record.key.clone()).or_insert(record);
    }

    let levels = enumerate_connected_graphs(max_n)?;
    let todo: Vec<&Graph> = levels
        .iter()
        .flatten()
        .filter(|g| g.vertex_count() >= 1 && !by_key.contains_key(&g.to_graph6()))
        .collect();
    let enumerated: usize = levels.iter().map(Vec::len).sum::<usize>() - 1; // minus the 0-vertex graph
    let skipped_existing = enumerated - todo.len();

    let computed: Vec<ExploreRecord> = todo.par_iter().map(|g| explore_record(g)).collect();
    let computed_count = computed.len();
    for record in computed {
        by_key.insert(record.key.clone(), record);
    }

    let mut buffer = String::new();
    for record in by_key.values() {
        buffer.push_str(&serde_json::to_string(record)?);
        buffer.push('\n');
    }
    let tmp = store.with_file_name(format!(
        "{}.tmp",
        store
            .file_name()
            .and_then(|s| s.to_str())
            .unwrap_or("store.jsonl")
    ));
    fs::write(&tmp, buffer)?;
    fs::rename(&tmp, store)?;

    Ok(ExploreOutcome {
        total_records: by_key.len(),
        computed: computed_count,
        skipped_existing,
        corrupt_lines,
    })
}

/// Aggregate of one impropriety class in a store.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    /// The impropriety shared by the graphs aggregated here.
    pub impropriety: usize,
    /// Number of interval records in the class.
    pub graphs: usize,
    /// Largest spectrum size observed in the class.
    pub max_spectrum_size: usize,
    /// Key of the first graph (in key order) attaining that size.
    pub witness_key: String,
}

/// Per-impropriety-class spectrum-size maxima over a store.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureStats {
    /// One row per impropriety value present, ascending.
    pub classes: Vec<ClassRow>,
    /// Non-interval records seen (excluded from classes).
    pub non_interval: usize,
    /// Corrupt lines encountered while reading.
    pub store_issues: Vec<StoreIssue>,
}

/// How large removal spectra get per impropriety class, over every record
/// in the store.
pub fn conjecture_stats(store: &Path) -> Result<ConjectureStats, Error> {
    let (records, store_issues) = read_store(store)?;
    let mut seen = BTreeSet::new();
    let mut by_class: BTreeMap<usize, ClassRow> = BTreeMap::new();
    let mut non_interval = 0usize;
    let mut ordered = records;
    ordered.sort_by(|a, b| a.key.cmp(&b.key));
    for record in ordered {
        if !seen.insert(record.key.clone()) {
            continue;
        }
        let Some(imp) = record.imp else {
            non_interval += 1;
            continue;
        };
        let size = record.spectrum.len();
        by_class
            .entry(imp)
            .and_modify(|row| {
                row.graphs += 1;
                if size > row.max_spectrum_size {
                    row.max_spectrum_size = size;
                    row.witness_key = record.key.clone();
                }
            })
            .or_insert_with(|| ClassRow {
                impropriety: imp,
                graphs: 1,
                max_spectrum_size: size,
                witness_key: record.key.clone(),
            });
    }
    Ok(ConjectureStats {
        classes: by_class.into_values().collect(),
        non_interval,
        store_issues,
    })
}

// ----------------------------------------------------------------------
// spectrum-bound scan
// ----------------------------------------------------------------------

/// A graph whose spectrum exceeds the bound while meeting the filter.
#[derive(Debug, Clone, Serialize)]
pub struct ScanViolation {
    /// Canonical key of the graph.
    pub key: String,
    /// The witness whose local structure met the filter.
    pub witness: usize,
    /// Impropriety of the graph.
    pub impropriety: usize,
    /// Its removal spectrum.
    pub spectrum: Vec<usize>,
}

/// Report-only tally of deletions inside non-exterior local components.
#[derive(Debug, Clone, Default, Serialize)]
pub struct DropTally {
    /// Deletions examined.
    pub checked: usize,
    /// How many landed exactly one below the graph's impropriety.
    pub dropped_by_exactly_one: usize,
    /// The ones that did not, as human-readable entries.
    pub deviations: Vec<String>,
}

/// Outcome of a spectrum-bound scan over a corpus.
#[derive(Debug, Clone, Serialize)]
pub struct BoundScanOutcome {
    /// Graphs examined (interval or not).
    pub scanned: usize,
    /// Interval graphs with impropriety ≥ 1.
    pub improper_scanned: usize,
    /// Witnesses whose basepoint view had exactly two exterior components.
    pub hypothesis_met_witnesses: usize,
    /// Filter-passing graphs with spectrum size above four.
    pub violations: Vec<ScanViolation>,
    /// Report-only: non-exterior deletions and how far they dropped.
    pub drop_tally: DropTally,
    /// Scan-level annotations.
    pub notes: Vec<String>,
}

/// Checks the spectrum-size bound (at most four distinct values) on every
/// graph whose basepoint witness has exactly two exterior local
/// components, and tallies — report-only — whether deletions inside
/// non-exterior local components drop the impropriety by exactly one.
pub fn spectrum_bound_scan(corpus: &[Graph]) -> Result<BoundScanOutcome, Error> {
    struct PerGraph {
        improper: bool,
        met: usize,
        violations: Vec<ScanViolation>,
        tally: DropTally,
    }

    let partials: Vec<PerGraph> = corpus
        .par_iter()
        .map(|g| {
            let mut out = PerGraph {
                improper: false,
                met: 0,
                violations: Vec::new(),
                tally: DropTally::default(),
            };
            if !engine::is_interval_graph(g) {
                return out;
            }
            let report = removal_spectrum(g).expect("interval graph just checked");
            if report.impropriety == 0 {
                return out;
            }
            out.improper = true;
            let witnesses =
                structure::basepoint_witnesses(g).expect("impropriety at least one here");
            for w in witnesses {
                let view =
                    structure::exterior_components(g, w).expect("interval graph just checked");
                let exterior_count = view.exterior.iter().filter(|&&e| e).count();
                if exterior_count != 2 {
                    continue;
                }
                out.met += 1;
                if report.spectrum.len() > 4 {
                    out.violations.push(ScanViolation {
                        key: report.graph_key.clone(),
                        witness: w,
                        impropriety: report.impropriety,
                        spectrum: report.spectrum.clone(),
                    });
                }
                for (comp, &ext) in view.local_components.iter().zip(&view.exterior) {
                    if ext {
                        continue;
                    }
                    for &u in comp {
                        out.tally.checked += 1;
                        let after = report.per_vertex[u].1;
                        if after + 1 == report.impropriety {
                            out.tally.dropped_by_exactly_one += 1;
                        } else {
                            out.tally.deviations.push(format!(
                                "{}: deleting {u} (non-exterior under witness {w}) gives {after}, \
                                 not {}",
                                report.graph_key,
                                report.impropriety - 1
                            ));
                        }
                    }
                }
            }
            out
        })
        .collect();

    let mut outcome = BoundScanOutcome {
        scanned: corpus.len(),
        improper_scanned: 0,
        hypothesis_met_witnesses: 0,
        violations: Vec::new(),
        drop_tally: DropTally::default(),
        notes: vec![
            "filter checks only the two-exterior-components hypothesis; no balance condition is \
             defined or checked"
                .to_string(),
            "the non-exterior drop tally is report-only".to_string(),
        ],
    };
    for partial in partials {
        outcome.improper_scanned += usize::from(partial.improper);
        outcome.hypothesis_met_witnesses += partial.met;
        outcome.violations.extend(partial.violations);
        outcome.drop_tally.checked += partial.tally.checked;
        outcome.drop_tally.dropped_by_exactly_one += partial.tally.dropped_by_exactly_one;
        outcome.drop_tally.deviations.extend(partial.tally.deviations);
    }
    Ok(outcome)
}

/// Suite view of the spectrum-size bound over the drop-pair grid `p ≤ pmax`:
/// one row per grid instance whose basepoint witnesses include one with
/// exactly two exterior local components, claiming a removal spectrum of at
/// most four distinct values. A second, independent route over the same
/// corpus ([`spectrum_bound_scan`]) must agree on the violation count — that
/// cross-check is an internal row, so disagreement fails the suite.
pub fn verify_spectrum_bound(pmax: usize) -> Result<VerificationTable, Error> {
    if !(2..=8).contains(&pmax) {
        return Err(Error::InvalidParameters(format!(
            "spectrum-bound sweep supports 2 ≤ pmax ≤ 8, got {pmax}"
        )));
    }
    let mut table = VerificationTable::new("spectrum-bound");
    let mut corpus = Vec::new();
    let mut labels = Vec::new();
    for p in 2..=pmax {
        for n in 0..p {
            corpus.push(gen_drop_pair(p, n)?.graph);
            labels.push(format!("drop-pair p={p} n={n}"));
        }
    }

    struct InstanceRow {
        met_witnesses: usize,
        spectrum: Vec<usize>,
    }
    let measured: Vec<InstanceRow> = corpus
        .par_iter()
        .map(|g| {
            let report = removal_spectrum(g).expect("drop-pair instances are interval graphs");
            let witnesses =
                structure::basepoint_witnesses(g).expect("drop-pair impropriety is positive");
            let met_witnesses = witnesses
                .into_iter()
                .filter(|&w| {
                    let view = structure::exterior_components(g, w)
                        .expect("interval graph by construction");
                    view.exterior.iter().filter(|&&e| e).count() == 2
                })
                .count();
            InstanceRow {
                met_witnesses,
                spectrum: report.spectrum,
            }
        })
        .collect();

    let mut direct_violations = 0usize;
    let mut met_total = 0usize;
    for (label, row) in labels.iter().zip(&measured) {
        if row.met_witnesses == 0 {
            table.notes.push(format!(
                "{label}: no basepoint witness has exactly two exterior local components — \
                 outside the hypothesis, skipped"
            ));
            continue;
        }
        met_total += row.met_witnesses;
        let claimed = "at most 4 distinct removal values".to_string();
        let size = row.spectrum.len();
        let measured_text = if size <= 4 {
            claimed.clone()
        } else {
            let values: Vec<String> = row.spectrum.iter().map(usize::to_string).collect();
            direct_violations += 1;
            format!("{size} distinct removal values {{{}}}", values.join(", "))
        };
        table.push(label.clone(), "removal spectrum size", claimed, measured_text);
    }

    // Independent route over the identical corpus; counts must agree.
    let scan = spectrum_bound_scan(&corpus)?;
    table.push_internal(
        "whole grid",
        "direct rows agree with the scan route",
        format!(
            "{} violations among {} hypothesis-met witnesses",
            direct_violations, met_total
        ),
        format!(
            "{} violations among {} hypothesis-met witnesses",
            scan.violations.len(),
            scan.hypothesis_met_witnesses
        ),
    );
    table.push(
        "whole grid",
        "non-exterior deletions drop impropriety by exactly one",
        format!("{} of {}", scan.drop_tally.checked, scan.drop_tally.checked),
        format!(
            "{} of {}",
            scan.drop_tally.dropped_by_exactly_one, scan.drop_tally.checked
        ),
    );
    table
        .notes
        .push(format!("grid instances scanned: {}", scan.scanned));
    for violation in &scan.violations {
        table.notes.push(format!(
            "violation detail: key {} witness {} impropriety {} spectrum {:?}",
            violation.key, violation.witness, violation.impropriety, violation.spectrum
        ));
    }
    table.notes.extend(scan.drop_tally.deviations);
    table.notes.extend(scan.notes);
    Ok(table)
}

// ----------------------------------------------------------------------
// verification tables
// ----------------------------------------------------------------------

/// Status of one verification row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RowStatus {
    /// Measured equals claimed.
    Pass,
    /// Internal inconsistency; fails the run.
    Fail,
    /// Measured contradicts a claim of the source construction.
    Finding,
}

impl std::fmt::Display for RowStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RowStatus::Pass => write!(f, "PASS"),
            RowStatus::Fail => write!(f, "FAIL"),
            RowStatus::Finding => write!(f, "FINDING"),
        }
    }
}

/// One measured check.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    /// What was measured (family instance or corpus slice).
    pub instance: String,
    /// The property checked.
    pub check: String,
    /// The claimed value.
    pub claimed: String,
    /// The measured value.
    pub measured: String,
    /// PASS/FAIL/FINDING.
    pub status: RowStatus,
}

/// A suite's rows plus free-form notes.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationTable {
    /// Suite name.
    pub suite: String,
    /// All rows, in deterministic order.
    pub rows: Vec<VerifyRow>,
    /// Notes (observations, premises, counts).
    pub notes: Vec<String>,
}

impl VerificationTable {
    fn new(suite: impl Into<String>) -> Self {
        VerificationTable {
            suite: suite.into(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(
        &mut self,
        instance: impl Into<String>,
        check: impl Into<String>,
        claimed: impl std::fmt::Display,
        measured: impl std::fmt::Display,
    ) {
        let claimed = claimed.to_string();
        let measured = measured.to_string();
        let status = if claimed == measured {
            RowStatus::Pass
        } else {
            RowStatus::Finding
        };
        self.rows.push(VerifyRow {
            instance: instance.into(),
            check: check.into(),
            claimed,
            measured,
            status,
        });
    }

    fn push_internal(
        &mut self,
        instance: impl Into<String>,
        check: impl Into<String>,
        claimed: impl std::fmt::Display,
        measured: impl std::fmt::Display,
    ) {
        let claimed = claimed.to_string();
        let measured = measured.to_string();
        let status = if claimed == measured {
            RowStatus::Pass
        } else {
            RowStatus::Fail
        };
        self.rows.push(VerifyRow {
            instance: instance.into(),
            check: check.into(),
            claimed,
            measured,
            status,
        });
    }

    /// True when no row is a FAIL (findings do not fail a run).
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|row| row.status != RowStatus::Fail)
    }

    /// `(pass, fail, finding)` row counts.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for row in &self.rows {
            match row.status {
                RowStatus::Pass => counts.0 += 1,
                RowStatus::Fail => counts.1 += 1,
                RowStatus::Finding => counts.2 += 1,
            }
        }
        counts
    }

    /// Plain markdown rendering (no color; `NO_COLOR` is moot).
    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "# verify: {}\n\n| instance | check | claimed | measured | status |\n|---|---|---|---|---|\n",
            self.suite
        );
        for row in &self.rows {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                row.instance, row.check, row.claimed, row.measured, row.status
            ));
        }
        let (pass, fail, finding) = self.counts();
        out.push_str(&format!(
            "\n{pass} PASS, {fail} FAIL, {finding} FINDING\n"
        ));
        if !self.notes.is_empty() {
            out.push_str("\nnotes:\n");
            for note in &self.notes {
                out.push_str(&format!("- {note}\n"));
            }
        }
        out
    }
}

// ----------------------------------------------------------------------
// family verification sweeps
// ----------------------------------------------------------------------

fn family_rows(table: &mut VerificationTable, inst: &FamilyInstance, claimed_critical: Option<bool>) {
    let label = {
        let p = inst.params.p;
        match (inst.params.n, inst.params.s) {
            (Some(n), Some(s)) => format!("{} p={p} n={n} s={s}", inst.family_tag),
            (Some(n), None) => format!("{} p={p} n={n}", inst.family_tag),
            _ => format!("{} p={p}", inst.family_tag),
        }
    };
    let report = removal_spectrum(&inst.graph).expect("family instances are interval graphs");
    table.push(
        &label,
        "impropriety",
        inst.expected_impropriety,
        report.impropriety,
    );
    let after = report.per_vertex[inst.designated_vertex].1;
    table.push(
        &label,
        "impropriety after deleting the designated vertex",
        inst.expected_drop_value,
        after,
    );
    match claimed_critical {
        Some(claimed) => table.push(&label, "critical", claimed, report.critical),
        None => table
            .notes
            .push(format!("{label}: critical = {}", report.critical)),
    }
    if inst.graph.vertex_count() <= crate::ORACLE_GUARD {
        let oracle = engine::oracle_impropriety(&inst.graph)
            .expect("within the oracle guard and interval");
        table.push_internal(&label, "engine matches oracle", report.impropriety, oracle);
        let (sub, _) = inst.graph.delete_vertex(inst.designated_vertex);
        let oracle_after =
            engine::oracle_impropriety(&sub).expect("within the oracle guard and interval");
        table.push_internal(
            &label,
            "post-deletion engine matches oracle",
            after,
            oracle_after,
        );
    }
    for note in &inst.notes {
        table.notes.push(format!("{label}: {note}"));
    }
}

/// Re-measures the claims attached to one construction family over a
/// parameter grid (`p` from 2, or 8 for the drop-to-seven family, up to
/// `pmax`; `n` bounded by `nmax` when given).
pub fn verify_family_claims(
    family_tag: &str,
    pmax: usize,
    nmax: Option<usize>,
) -> Result<VerificationTable, Error> {
    let mut table = VerificationTable::new(family_tag);
    match family_tag {
        "drop-pair" => {
            for p in 2..=pmax {
                for n in 0..p.min(nmax.map_or(p, |m| m + 1)) {
                    let inst = gen_drop_pair(p, n)?;
                    family_rows(&mut table, &inst, Some(true));
                    let view =
                        structure::exterior_components(&inst.graph, inst.constructed_basepoint)?;
                    let sizes: Vec<usize> = view
                        .local_components
                        .iter()
                        .zip(&view.exterior)
                        .filter(|&(_, &e)| e)
                        .map(|(c, _)| c.len())
                        .collect();
                    table.notes.push(format!(
                        "drop-pair p={p} n={n}: exterior local component sizes {sizes:?}; \
                         the pendant pair is a two-vertex path, the triangle block is not"
                    ));
                }
            }
            table.notes.push(
                "criticality findings: the two triangle vertices not wired to the held clique \
                 can be deleted without lowering the impropriety"
                    .to_string(),
            );
        }
        "half-drop" => {
            for p in 2..=pmax {
                for n in 0..=(p / 2).min(nmax.unwrap_or(p)) {
                    let inst = gen_half_drop(p, n)?;
                    family_rows(&mut table, &inst, None);
                    let view =
                        structure::exterior_components(&inst.graph, inst.constructed_basepoint)?;
                    let exterior_count = view.exterior.iter().filter(|&&e| e).count();
                    table.push(
                        format!("half-drop p={p} n={n}"),
                        "exterior local components at the basepoint",
                        0,
                        exterior_count,
                    );
                }
            }
            table.notes.push(
                "the construction intends every relocation to stay interior, but both local \
                 components can escape in some representation, so the existential classification \
                 marks 2"
                    .to_string(),
            );
        }
        "chain-drop" => {
            for p in 2..=pmax {
                for n in 0..p.min(nmax.map_or(p, |m| m + 1)) {
                    let inst = gen_chain_drop(p, n, None)?;
                    family_rows(&mut table, &inst, None);
                }
            }
            table.notes.push(
                "the designated deletion lands one above the advertised target on every \
                 calibrated instance; at n = p−1 it does not drop at all"
                    .to_string(),
            );
        }
        "drop-to-seven" => {
            for p in 8..=pmax.max(8) {
                let inst = gen_drop_to_seven(p)?;
                family_rows(&mut table, &inst, None);
            }
            if pmax > 8 {
                table.notes.push(
                    "above p = 8 the whole escaping clique still fits one exit, capping the \
                     impropriety at 8"
                        .to_string(),
                );
            }
        }
        other => {
            return Err(Error::InvalidParameters(format!(
                "unknown verification family '{other}' (expected drop-pair, half-drop, \
                 chain-drop, or drop-to-seven)"
            )))
        }
    }
    Ok(table)
}

// ----------------------------------------------------------------------
// stability sweep
// ----------------------------------------------------------------------

fn properness_deletions(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count())
        .map(|v| {
            let (sub, _) = g.delete_vertex(v);
            if sub.vertex_count() == 0 {
                0
            } else {
                engine::properness(&sub)
                    .expect("deleting a vertex keeps an interval graph interval")
                    .value
            }
        })
        .collect()
}

fn value_set(values: &[usize]) -> String {
    let set: BTreeSet<usize> = values.iter().copied().collect();
    let inner: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Checks, exhaustively over properness-critical exactly-`q`-proper
/// interval graphs on up to 7 vertices plus the fat-claw instance, that
/// every single-vertex deletion lands at properness 0 or `q − 1`.
pub fn qproper_stability(q: usize) -> Result<VerificationTable, Error> {
    if q > 4 {
        return Err(Error::InvalidParameters(format!(
            "stability sweep supports q ≤ 4, got {q}"
        )));
    }
    let mut table = VerificationTable::new(format!("stability q={q}"));
    if q == 0 {
        table.notes.push(
            "vacuous: properness 0 cannot drop further, so no critical exactly-0-proper graph \
             exists"
                .to_string(),
        );
        return Ok(table);
    }
    let claimed_set = if q == 1 {
        "{0}".to_string()
    } else {
        format!("{{0, {}}}", q - 1)
    };

    let levels = enumerate_all_graphs(7)?;
    let graphs: Vec<&Graph> = levels
        .iter()
        .flatten()
        .filter(|g| g.vertex_count() >= 1)
        .collect();
    let hits: Vec<Option<(String, Vec<usize>)>> = graphs
        .par_iter()
        .map(|g| {
            if !engine::is_interval_graph(g) {
                return None;
            }
            let prop = engine::properness(g).expect("interval graph just checked").value;
            if prop != q {
                return None;
            }
            let deletions = properness_deletions(g);
            if !deletions.iter().all(|&d| d <= q - 1) {
                return None; // not properness-critical
            }
            Some((g.to_graph6(), deletions))
        })
        .collect();

    let mut found = 0usize;
    for (key, deletions) in hits.into_iter().flatten() {
        found += 1;
        let measured: BTreeSet<usize> = deletions.iter().copied().collect();
        let ok = measured.iter().all(|&d| d == 0 || d == q - 1);
        let claimed_here = claimed_set.clone();
        let measured_str = value_set(&deletions);
        if ok {
            // The measured set may be a strict subset of the claimed one.
            table.rows.push(VerifyRow {
                instance: key,
                check: "deletion properness values within {0, q−1}".to_string(),
                claimed: claimed_here,
                measured: measured_str,
                status: RowStatus::Pass,
            });
        } else {
            table.rows.push(VerifyRow {
                instance: key,
                check: "deletion properness values within {0, q−1}".to_string(),
                claimed: claimed_here,
                measured: measured_str,
                status: RowStatus::Finding,
            });
        }
    }
    table.notes.push(format!(
        "properness-critical exactly-{q}-proper interval graphs on ≤ 7 vertices: {found}"
    ));

    // The named obstruction instance: a claw with one leaf fattened to a
    // clique on q+1 vertices.
    let fat = gen_fat_claw(q);
    let label = format!("fat-claw q={q}");
    let prop = engine::properness(&fat)?.value;
    table.push(&label, "properness", q, prop);
    let deletions = properness_deletions(&fat);
    let critical = prop >= 1 && deletions.iter().all(|&d| d <= prop - 1);
    table.push(&label, "properness-critical", true, critical);
    let in_claimed = deletions.iter().all(|&d| d == 0 || (q >= 1 && d == q - 1));
    table.push(
        &label,
        "deletion properness values within {0, q−1}",
        true,
        in_claimed,
    );
    if prop != q || !critical {
        table.notes.push(format!(
            "{label}: premise unmet (measured properness {prop}, critical {critical}); its \
             stability rows are findings about the named instance, not the sweep"
        ));
    }
    Ok(table)
}

// ----------------------------------------------------------------------
// oracle equivalence sweep
// ----------------------------------------------------------------------

/// Engine-versus-oracle agreement on both objectives, exhaustively over
/// all interval graphs up to isomorphism on up to `max_n` vertices.
pub fn oracle_equivalence(max_n: usize) -> Result<VerificationTable, Error> {
    if max_n > crate::ORACLE_GUARD {
        return Err(Error::GuardExceeded {
            what: "oracle equivalence sweep",
            limit: crate::ORACLE_GUARD,
            actual: max_n,
        });
    }
    let mut table = VerificationTable::new("oracle-equivalence");
    let levels = enumerate_all_graphs(max_n)?;
    for n in 1..=max_n {
        let graphs = &levels[n];
        let mismatches: Vec<String> = graphs
            .par_iter()
            .filter_map(|g| {
                if !engine::is_interval_graph(g) {
                    return None;
                }
                let imp = engine::impropriety(g).expect("interval").value;
                let prop = engine::properness(g).expect("interval").value;
                let oracle_imp = engine::oracle_impropriety(g).expect("within guard");
                let oracle_prop = engine::oracle_properness(g).expect("within guard");
                (imp != oracle_imp || prop != oracle_prop).then(|| {
                    format!(
                        "{}: engine (imp {imp}, proper {prop}) vs oracle (imp {oracle_imp}, \
                         proper {oracle_prop})",
                        g.to_graph6()
                    )
                })
            })
            .collect();
        let interval_count = graphs
            .iter()
            .filter(|g| engine::is_interval_graph(g))
            .count();
        table.push_internal(
            format!("all {interval_count} interval graphs on {n} vertices"),
            "engine equals oracle on impropriety and properness",
            "0 mismatches",
            format!("{} mismatches", mismatches.len()),
        );
        table.notes.extend(mismatches);
    }
    Ok(table)
}

// ----------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_clique, gen_star};

    #[test]
    fn claw_spectrum_matches_oracle_derivation() {
        let report = removal_spectrum(&gen_star(3)).unwrap();
        assert_eq!(report.impropriety, 1);
        assert_eq!(
            report.per_vertex,
            vec![(0, 0), (1, 0), (2, 0), (3, 0)]
        );
        assert_eq!(report.spectrum, vec![0]);
        assert!(report.critical);
        // Deleting the center isolates the leaves.
        assert_eq!(report.notes.len(), 1);
        assert!(report.notes[0].contains("vertex 0 disconnects"));
    }

    #[test]
    fn clique_spectrum_is_flat_and_noncritical() {
        let report = removal_spectrum(&gen_clique(4)).unwrap();
        assert_eq!(report.impropriety, 0);
        assert_eq!(report.spectrum, vec![0]);
        assert!(!report.critical);
        assert!(matches!(
            is_critical(&gen_clique(4)),
            Err(Error::ZeroImpropriety)
        ));
    }

    #[test]
    fn criticality_of_small_stars() {
        assert!(is_critical(&gen_star(3)).unwrap());
        // The 4-leaf star has impropriety 2; deleting a leaf leaves the
        // 3-leaf star at impropriety 1, deleting the center gives 0.
        assert!(is_critical(&gen_star(4)).unwrap());
    }

    #[test]
    fn drop_pair_designated_vertex_reaches_the_target() {
        let inst = gen_drop_pair(3, 1).unwrap();
        let report = removal_spectrum(&inst.graph).unwrap();
        assert_eq!(report.impropriety, 3);
        assert_eq!(report.per_vertex[inst.designated_vertex].1, 1);
        assert!(report.spectrum.contains(&1));
    }

    #[test]
    fn fat_claw_dual_criticality_premise_fails() {
        // The named obstruction instance is 1-proper for every clique size,
        // and deleting a clique vertex keeps properness 1, so it is not
        // properness-critical. Frozen as measured.
        let fat = gen_fat_claw(2);
        let prop = engine::properness(&fat).unwrap().value;
        assert_eq!(prop, 1);
        let deletions = properness_deletions(&fat);
        assert_eq!(deletions, vec![0, 0, 0, 1, 1, 1]);
        assert!(!deletions.iter().all(|&d| d <= prop - 1));
    }

    #[test]
    fn spectrum_invariants_on_small_graphs() {
        for g in enumerate_connected_graphs(5).unwrap().iter().flatten() {
            if g.vertex_count() < 2 || !engine::is_interval_graph(g) {
                continue;
            }
            let report = removal_spectrum(g).unwrap();
            let values: BTreeSet<usize> =
                report.per_vertex.iter().map(|&(_, val)| val).collect();
            assert_eq!(report.spectrum, values.into_iter().collect::<Vec<_>>());
            assert!(!report.spectrum.is_empty());
            assert!(report
                .per_vertex
                .iter()
                .all(|&(_, val)| val <= report.impropriety));
            let expect_critical = report.impropriety >= 1
                && report
                    .per_vertex
                    .iter()
                    .all(|&(_, val)| val < report.impropriety);
            assert_eq!(report.critical, expect_critical);
        }
    }

    #[test]
    fn vacuous_stability_table() {
        let table = qproper_stability(0).unwrap();
        assert!(table.rows.is_empty());
        assert_eq!(table.notes.len(), 1);
        assert!(qproper_stability(5).is_err());
    }

    #[test]
    fn unknown_family_is_rejected() {
        assert!(matches!(
            verify_family_claims("no-such-family", 3, None),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn spectrum_bound_suite_findings_start_at_p_four() {
        let table = verify_spectrum_bound(4).unwrap();
        let (pass, fail, finding) = table.counts();
        assert_eq!((pass, fail, finding), (8, 0, 3));
        assert!(table.passed(), "findings must not fail the suite");
        let offending: Vec<&str> = table
            .rows
            .iter()
            .filter(|row| row.status == RowStatus::Finding)
            .map(|row| row.instance.as_str())
            .collect();
        assert_eq!(
            offending,
            ["drop-pair p=4 n=0", "drop-pair p=4 n=1", "drop-pair p=4 n=3"]
        );
        for row in &table.rows {
            if row.status == RowStatus::Finding {
                assert!(row.measured.starts_with("5 distinct removal values"));
            }
        }
        // Both the direct rows and the scan route live in the same table; the
        // agreement row is internal, so its failure would fail the suite.
        assert!(table
            .rows
            .iter()
            .any(|row| row.check == "direct rows agree with the scan route"
                && row.status == RowStatus::Pass));
        assert!(verify_spectrum_bound(1).is_err());
        assert!(verify_spectrum_bound(9).is_err());
    }

    #[test]
    fn markdown_rendering_is_stable() {
        let mut table = VerificationTable::new("demo");
        table.push("x", "value", 1, 1);
        table.push("y", "value", 2, 3);
        table.notes.push("a note".to_string());
        let text = table.to_markdown();
        assert!(text.starts_with("# verify: demo\n"));
        assert!(text.contains("| x | value | 1 | 1 | PASS |"));
        assert!(text.contains("| y | value | 2 | 3 | FINDING |"));
        assert!(text.contains("1 PASS, 0 FAIL, 1 FINDING"));
        assert!(text.contains("- a note"));
        assert!(table.passed());
    }

    #[test]
    fn store_reader_reports_corrupt_lines_and_continues() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.jsonl");
        let good = ExploreRecord {
            g6: "A_".to_string(),
            key: "A_".to_string(),
            n: 2,
            interval: true,
            imp: Some(0),
            per_vertex: vec![(0, 0), (1, 0)],
            spectrum: vec![0],
            critical: Some(false),
            notes: vec![],
        };
        let line = serde_json::to_string(&good).unwrap();
        std::fs::write(&path, format!("{line}\n{{broken\n{line}\n")).unwrap();
        let (records, issues) = read_store(&path).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(issues.len(), 1);
        assert_eq!(issues[0].line, 2);
    }
}
