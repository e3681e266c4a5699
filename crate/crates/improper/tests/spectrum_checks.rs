//! Spectrum-lab checks: explorer store behavior, aggregate statistics,
//! scan outcomes, and the verification suites. Expected values were
//! computed by the engine (cross-validated against the brute-force oracle
//! where sizes allow) and frozen.

use std::collections::BTreeSet;

use improper::engine::{oracle_impropriety, oracle_properness};
use improper::graph::enumerate_all_graphs;
use improper::*;

// ----------------------------------------------------------------------
// explorer
// ----------------------------------------------------------------------

#[test]
fn explorer_records_validate_against_the_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store.jsonl");
    let outcome = explore(4, &store).unwrap();
    assert_eq!(outcome.total_records, 10);
    assert_eq!(outcome.computed, 10);
    assert_eq!(outcome.skipped_existing, 0);
    assert!(outcome.corrupt_lines.is_empty());

    let (records, issues) = read_store(&store).unwrap();
    assert!(issues.is_empty());
    assert_eq!(records.len(), 10);

    // The lone non-interval connected graph on up to 4 vertices is the
    // 4-cycle.
    let non_interval: Vec<&str> = records
        .iter()
        .filter(|r| !r.interval)
        .map(|r| r.key.as_str())
        .collect();
    assert_eq!(non_interval, vec!["C]"]);

    for record in &records {
        let g = Graph::from_graph6(&record.g6).unwrap();
        assert_eq!(record.n, g.vertex_count());
        if !record.interval {
            assert!(record.imp.is_none());
            assert!(record.per_vertex.is_empty());
            assert!(record.critical.is_none());
            continue;
        }
        // Oracle route: every stored value re-derived independently.
        let imp = oracle_impropriety(&g).unwrap();
        assert_eq!(record.imp, Some(imp));
        let mut values = BTreeSet::new();
        for &(v, stored) in &record.per_vertex {
            let (sub, _) = g.delete_vertex(v);
            let expect = if sub.vertex_count() == 0 {
                0
            } else {
                oracle_impropriety(&sub).unwrap()
            };
            assert_eq!(stored, expect, "g6={} v={v}", record.g6);
            values.insert(stored);
        }
        assert_eq!(record.spectrum, values.into_iter().collect::<Vec<_>>());
        let critical = imp >= 1 && record.per_vertex.iter().all(|&(_, val)| val < imp);
        assert_eq!(record.critical, Some(critical));
    }
}

#[test]
fn explorer_resume_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store.jsonl");
    explore(5, &store).unwrap();
    let full = std::fs::read(&store).unwrap();

    // Truncate mid-run and resume.
    let text = String::from_utf8(full.clone()).unwrap();
    let kept: String = text.lines().take(12).map(|l| format!("{l}\n")).collect();
    std::fs::write(&store, kept).unwrap();
    let outcome = explore(5, &store).unwrap();
    assert_eq!(outcome.skipped_existing, 12);
    assert_eq!(outcome.computed, 31 - 12);
    assert_eq!(std::fs::read(&store).unwrap(), full);

    // A rerun over a complete store computes nothing and changes nothing.
    let outcome = explore(5, &store).unwrap();
    assert_eq!(outcome.computed, 0);
    assert_eq!(outcome.skipped_existing, 31);
    assert_eq!(std::fs::read(&store).unwrap(), full);
}

#[test]
fn explorer_recovers_corrupt_store_lines() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store.jsonl");
    explore(4, &store).unwrap();
    let full = std::fs::read(&store).unwrap();

    let text = String::from_utf8(full.clone()).unwrap();
    let broken: String = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            if i == 2 {
                "{oops\n".to_string()
            } else {
                format!("{l}\n")
            }
        })
        .collect();
    std::fs::write(&store, broken).unwrap();

    let outcome = explore(4, &store).unwrap();
    assert_eq!(outcome.corrupt_lines.len(), 1);
    assert_eq!(outcome.corrupt_lines[0].line, 3);
    assert_eq!(outcome.computed, 1, "the damaged record is recomputed");
    assert_eq!(std::fs::read(&store).unwrap(), full);
}

#[test]
fn conjecture_stats_aggregate_the_store() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store.jsonl");
    explore(5, &store).unwrap();
    let stats = conjecture_stats(&store).unwrap();
    assert_eq!(stats.non_interval, 7);
    assert!(stats.store_issues.is_empty());

    let summary: Vec<(usize, usize, usize, &str)> = stats
        .classes
        .iter()
        .map(|c| {
            (
                c.impropriety,
                c.graphs,
                c.max_spectrum_size,
                c.witness_key.as_str(),
            )
        })
        .collect();
    assert_eq!(
        summary,
        vec![
            (0, 18, 1, "@"),
            (1, 5, 2, "D@s"),
            (2, 1, 2, "D?{"),
        ]
    );

    // Independent recomputation from the raw records.
    let (records, _) = read_store(&store).unwrap();
    for class in &stats.classes {
        let members: Vec<_> = records
            .iter()
            .filter(|r| r.imp == Some(class.impropriety))
            .collect();
        assert_eq!(members.len(), class.graphs);
        let max = members.iter().map(|r| r.spectrum.len()).max().unwrap();
        assert_eq!(max, class.max_spectrum_size);
    }
}

// ----------------------------------------------------------------------
// class spectra
// ----------------------------------------------------------------------

#[test]
fn class_spectra_over_small_corpora() {
    let corpus: Vec<Graph> = enumerate_all_graphs(6)
        .unwrap()
        .into_iter()
        .flatten()
        .filter(|g| g.vertex_count() >= 1)
        .collect();

    let one = class_spectrum(1, &corpus, "all graphs on <= 6 vertices").unwrap();
    assert_eq!(one.union_spectrum, vec![0]);
    assert_eq!(one.witnesses.get(&0).map(String::as_str), Some("CF"));

    let two = class_spectrum(2, &corpus, "all graphs on <= 6 vertices").unwrap();
    assert_eq!(two.union_spectrum, vec![0, 1]);

    // Every witness is critical and exactly p-improper.
    for (p, report) in [(1usize, &one), (2, &two)] {
        for key in report.witnesses.values() {
            let g = Graph::from_graph6(key).unwrap();
            assert_eq!(impropriety(&g).unwrap().value, p);
            assert!(is_critical(&g).unwrap());
        }
        assert!(report.union_spectrum.iter().all(|&v| v < p));
    }
}

// ----------------------------------------------------------------------
// spectrum-bound scan
// ----------------------------------------------------------------------

#[test]
fn spectrum_bound_scan_on_the_drop_pair_grid() {
    let mut grid = Vec::new();
    for p in 2..=4usize {
        for n in 0..p {
            grid.push(gen_drop_pair(p, n).unwrap().graph);
        }
    }
    let outcome = spectrum_bound_scan(&grid).unwrap();
    assert_eq!(outcome.scanned, 9);
    assert_eq!(outcome.improper_scanned, 9);
    // Every instance's basepoint witness shows exactly two exterior local
    // components, so every instance enters the bound check.
    assert_eq!(outcome.hypothesis_met_witnesses, 9);

    // Three of the four p = 4 instances carry five distinct spectrum
    // values; the bound of four has genuine violations on this family.
    assert_eq!(outcome.violations.len(), 3);
    for violation in &outcome.violations {
        assert_eq!(violation.impropriety, 4);
        assert_eq!(violation.spectrum, vec![0, 1, 2, 3, 4]);
        let g = Graph::from_graph6(&violation.key).unwrap();
        let check = removal_spectrum(&g).unwrap();
        assert!(check.spectrum.len() > 4);
    }

    // Report-only proof-step tally: every deletion inside the one
    // non-exterior local component (the held clique) drops the impropriety
    // by exactly one — 19 deletions over the grid, no deviations.
    assert_eq!(outcome.drop_tally.checked, 19);
    assert_eq!(outcome.drop_tally.dropped_by_exactly_one, 19);
    assert!(outcome.drop_tally.deviations.is_empty());
}

// ----------------------------------------------------------------------
// verification suites
// ----------------------------------------------------------------------

#[test]
fn stability_tables_for_small_q() {
    for (q, expect_counts) in [(1usize, (2, 0, 2)), (2, (2, 0, 2)), (3, (1, 0, 3))] {
        let table = qproper_stability(q).unwrap();
        assert_eq!(table.counts(), expect_counts, "q={q}");
        assert!(table.passed());
        assert_eq!(
            table.notes[0],
            format!("properness-critical exactly-{q}-proper interval graphs on ≤ 7 vertices: 1")
        );
        // The exhaustive sweep rows (everything except the fat-claw
        // instance) must all pass: deletions stay within {0, q−1}.
        for row in table
            .rows
            .iter()
            .filter(|r| !r.instance.starts_with("fat-claw"))
        {
            assert_eq!(row.status, RowStatus::Pass, "q={q} row={:?}", row.instance);
        }
    }
}

#[test]
fn family_suite_statuses_are_frozen() {
    let table = verify_family_claims("drop-pair", 4, None).unwrap();
    assert_eq!(table.counts(), (22, 0, 9));
    assert!(table
        .rows
        .iter()
        .filter(|r| r.status == RowStatus::Finding)
        .all(|r| r.check == "critical"));

    let table = verify_family_claims("half-drop", 4, None).unwrap();
    assert_eq!(table.counts(), (20, 0, 7));
    assert!(table
        .rows
        .iter()
        .filter(|r| r.status == RowStatus::Finding)
        .all(|r| r.check == "exterior local components at the basepoint"));

    let table = verify_family_claims("chain-drop", 4, None).unwrap();
    assert_eq!(table.counts(), (19, 0, 9));
    assert!(table
        .rows
        .iter()
        .filter(|r| r.status == RowStatus::Finding)
        .all(|r| r.check == "impropriety after deleting the designated vertex"));

    let table = verify_family_claims("drop-to-seven", 9, None).unwrap();
    assert_eq!(table.counts(), (3, 0, 1));
    let finding = table
        .rows
        .iter()
        .find(|r| r.status == RowStatus::Finding)
        .unwrap();
    assert_eq!(finding.instance, "drop-to-seven p=9");
    assert_eq!(finding.check, "impropriety");
    assert_eq!(finding.claimed, "9");
    assert_eq!(finding.measured, "8");
}

#[test]
fn oracle_equivalence_on_five_vertices() {
    let table = oracle_equivalence(5).unwrap();
    assert!(table.passed());
    assert!(table
        .rows
        .iter()
        .all(|row| row.status == RowStatus::Pass));
    assert!(oracle_equivalence(9).is_err());
}

// ----------------------------------------------------------------------
// dual-objective spot checks
// ----------------------------------------------------------------------

#[test]
fn properness_sweep_agrees_with_oracle_on_five_vertices() {
    for g in enumerate_all_graphs(5).unwrap().iter().flatten() {
        if g.vertex_count() < 1 || !is_interval_graph(g) {
            continue;
        }
        assert_eq!(
            properness(g).unwrap().value,
            oracle_properness(g).unwrap(),
            "g6={}",
            g.to_graph6()
        );
    }
}
