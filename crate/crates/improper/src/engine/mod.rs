//! Exact nesting minimization for interval graphs.
//!
//! The two quantities computed here are minima over all interval
//! representations of a graph:
//!
//! * **impropriety** — the worst number of intervals strictly nested
//!   inside a single interval, minimized;
//! * **properness** — the worst number of intervals strictly enclosing a
//!   single interval, minimized.
//!
//! The engine reduces both to branch-and-bound over consecutive orderings
//! of maximal cliques ([`ordering`]), realizes the optimal ordering as
//! concrete integer intervals ([`realize`]), and reports the value with
//! the representation that attains it. An independent endpoint-sequence
//! search ([`oracle`]) recomputes the same minima by brute force on small
//! graphs; the two routes share no search logic and are tested against
//! each other.
//!
//! Disconnected graphs: components never interleave in a consecutive
//! ordering, so each is solved separately, the values combine by maximum,
//! and the witness representations concatenate side by side.

pub mod oracle;
pub mod ordering;
pub mod realize;

pub use oracle::{oracle_impropriety, oracle_impropriety_examined, oracle_properness};
pub use ordering::{for_each_consecutive_ordering, Objective, SearchBudget, SearchStats};
pub use realize::{realize_ranges, ContainmentProfile, IntervalRepresentation};

use serde::Serialize;

use crate::error::{Error, NotIntervalReason};
use crate::graph::{maximal_cliques, Graph};
use ordering::BudgetClock;

/// An exact value together with a representation attaining it.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    /// The minimized worst nesting count.
    pub value: usize,
    /// A representation attaining `value`.
    pub representation: IntervalRepresentation,
    /// Nesting counts of that representation, in the minimized direction.
    pub profile: ContainmentProfile,
    /// Search effort.
    pub stats: SearchStats,
}

impl Certificate {
    /// The vertex whose interval attains the value, when it is positive.
    pub fn witness_vertex(&self) -> Option<usize> {
        if self.value == 0 {
            None
        } else {
            self.profile.witness
        }
    }
}

/// Exact impropriety with a witness representation.
///
/// Fails with [`Error::NotIntervalGraph`] when `g` has no interval
/// representation at all.
pub fn impropriety(g: &Graph) -> Result<Certificate, Error> {
    solve(g, Objective::NestedInside, &SearchBudget::default())
}

/// [`impropriety`] under a resource budget.
pub fn impropriety_with_budget(g: &Graph, budget: &SearchBudget) -> Result<Certificate, Error> {
    solve(g, Objective::NestedInside, budget)
}

/// Exact properness (the transposed objective) with a witness
/// representation.
pub fn properness(g: &Graph) -> Result<Certificate, Error> {
    solve(g, Objective::NestedWithin, &SearchBudget::default())
}

/// [`properness`] under a resource budget.
pub fn properness_with_budget(g: &Graph, budget: &SearchBudget) -> Result<Certificate, Error> {
    solve(g, Objective::NestedWithin, budget)
}

/// Whether `g` is an interval graph: chordal, with at least one
/// consecutive ordering of its maximal cliques.
pub fn is_interval_graph(g: &Graph) -> bool {
    if !g.is_chordal() {
        return false;
    }
    let cliques = maximal_cliques(g);
    let mut found = false;
    for_each_consecutive_ordering(g, &cliques, |_, _| {
        found = true;
        std::ops::ControlFlow::Break(())
    });
    found
}

fn solve(g: &Graph, objective: Objective, budget: &SearchBudget) -> Result<Certificate, Error> {
    if !g.is_chordal() {
        return Err(Error::NotIntervalGraph(NotIntervalReason::ChordlessCycle));
    }
    let clock: BudgetClock = budget.start();
    let mut stats = SearchStats::default();
    let components = g.component_masks();
    let multi = components.len() > 1;

    let n = g.vertex_count();
    let mut intervals = vec![(0i64, 0i64); n];
    let mut value = 0usize;
    let mut offset = 0i64;
    for mask in components {
        let (component, mapping) = g.induced_subgraph(mask);
        let cliques = maximal_cliques(&component);
        let best = ordering::optimize(&component, &cliques, objective, &clock, &mut stats)
            .map_err(|err| match err {
                // A per-component upper bound is not a whole-graph bound.
                Error::TimeBudgetExceeded {
                    orderings_explored,
                    best_upper_bound,
                } => Error::TimeBudgetExceeded {
                    orderings_explored,
                    best_upper_bound: if multi { None } else { best_upper_bound },
                },
                other => other,
            })?
            .ok_or(Error::NotIntervalGraph(NotIntervalReason::AsteroidalTriple))?;
        value = value.max(best.value);
        let local = realize::realize_ranges(&best.ranges);
        for (local_v, &(l, r)) in local.intervals.iter().enumerate() {
            intervals[mapping[local_v]] = (l + offset, r + offset);
        }
        offset += 2 * mapping.len() as i64 + 1;
    }

    let representation = IntervalRepresentation { n, intervals };
    debug_assert!(representation.validate(g).is_ok());
    let profile = match objective {
        Objective::NestedInside => representation.nested_inside_profile(),
        Objective::NestedWithin => representation.nested_within_profile(),
    };
    debug_assert_eq!(profile.max, value, "witness must attain the optimum");
    Ok(Certificate {
        value,
        representation,
        profile,
        stats,
    })
}

/// Like [`is_interval_graph`], for callers that need the failure reason:
/// `Ok(())` or a [`Error::NotIntervalGraph`] naming the obstruction kind.
pub fn check_interval(g: &Graph) -> Result<(), Error> {
    if is_interval_graph(g) {
        Ok(())
    } else {
        Err(Error::NotIntervalGraph(g.interval_obstruction_kind()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(k: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
        Graph::from_edges(k + 1, &edges)
    }

    #[test]
    fn certificates_carry_attaining_representations() {
        let g = star(5);
        let cert = impropriety(&g).unwrap();
        assert_eq!(cert.value, 3);
        cert.representation.validate(&g).unwrap();
        assert_eq!(cert.profile.max, 3);
        assert_eq!(cert.witness_vertex(), Some(0));
        assert_eq!(cert.representation.nested_inside_profile().max, 3);

        let proper = properness(&g).unwrap();
        assert_eq!(proper.value, 1);
        proper.representation.validate(&g).unwrap();
        assert_eq!(proper.representation.nested_within_profile().max, 1);
    }

    #[test]
    fn zero_value_has_no_witness_vertex() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let cert = impropriety(&g).unwrap();
        assert_eq!(cert.value, 0);
        assert_eq!(cert.witness_vertex(), None);
    }

    #[test]
    fn disconnected_graphs_take_component_maximum() {
        // K_{1,4} (impropriety 2) plus a path (0) plus an isolated vertex.
        let mut g = Graph::new(9);
        for leaf in 1..=4 {
            g.add_edge(0, leaf);
        }
        g.add_edge(5, 6);
        g.add_edge(6, 7);
        let cert = impropriety(&g).unwrap();
        assert_eq!(cert.value, 2);
        cert.representation.validate(&g).unwrap();
        assert_eq!(cert.profile.per_vertex[0], 2);
    }

    #[test]
    fn recognition_agrees_with_the_error_on_rejection() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(!is_interval_graph(&c4));
        assert!(matches!(
            impropriety(&c4),
            Err(Error::NotIntervalGraph(
                crate::error::NotIntervalReason::ChordlessCycle
            ))
        ));
        // The subdivided claw: chordal but not interval.
        let t = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]);
        assert!(!is_interval_graph(&t));
        assert!(matches!(
            impropriety(&t),
            Err(Error::NotIntervalGraph(
                crate::error::NotIntervalReason::AsteroidalTriple
            ))
        ));
        assert!(matches!(check_interval(&t), Err(Error::NotIntervalGraph(_))));
        check_interval(&star(4)).unwrap();
    }

    #[test]
    fn engine_matches_oracle_on_assorted_graphs() {
        // A quick spot check ahead of the exhaustive comparison in the
        // integration suite.
        let samples: Vec<Graph> = vec![
            star(3),
            star(6),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)]),
            Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6)]),
            Graph::from_edges(
                6,
                &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)],
            ),
        ];
        for (i, g) in samples.iter().enumerate() {
            assert_eq!(
                impropriety(g).unwrap().value,
                oracle_impropriety(g).unwrap(),
                "impropriety sample {i}"
            );
            assert_eq!(
                properness(g).unwrap().value,
                oracle_properness(g).unwrap(),
                "properness sample {i}"
            );
        }
    }

    #[test]
    fn empty_and_trivial_graphs() {
        assert_eq!(impropriety(&Graph::new(0)).unwrap().value, 0);
        assert_eq!(impropriety(&Graph::new(1)).unwrap().value, 0);
        assert!(is_interval_graph(&Graph::new(0)));
        let cert = properness(&Graph::new(2)).unwrap();
        assert_eq!(cert.value, 0);
        cert.representation.validate(&Graph::new(2)).unwrap();
    }

    #[test]
    fn budget_error_propagates_from_components()  {
        let g = star(7);
        let budget = SearchBudget {
            time_limit: None,
            max_orderings: Some(0),
        };
        assert!(matches!(
            impropriety_with_budget(&g, &budget),
            Err(Error::TimeBudgetExceeded { .. })
        ));
    }
}
