//! Consecutive arrangements of maximal cliques.
//!
//! Every interval representation lines the maximal cliques up left to
//! right so that the cliques containing any one vertex form a contiguous
//! run (sweep the line and read off each clique at the leftmost point
//! where it is fully present). Conversely, [`super::realize`] turns any
//! such ordering back into a representation, and under that correspondence
//! a vertex's position range `[first, last]` is strictly nested in
//! another's exactly when the realized intervals are. Minimizing nesting
//! over representations therefore reduces to minimizing it over
//! consecutive orderings. This module implements that search twice:
//!
//! * [`optimize`] — branch-and-bound minimization of the worst nesting
//!   count, for either objective direction;
//! * [`for_each_consecutive_ordering`] — exhaustive visitation (up to
//!   reversal) for analyses that need every optimal ordering, not one.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Error;
use crate::graph::{BitIter, CliqueSet, Graph};

/// What the search minimizes: for each vertex interval, the number of
/// intervals strictly nested inside it, or the number it is strictly
/// nested within.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Worst count of intervals strictly inside one interval.
    NestedInside,
    /// Worst count of intervals strictly enclosing one interval.
    NestedWithin,
}

/// Counters reported by a search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Complete consecutive orderings evaluated.
    pub orderings_explored: u64,
    /// Search-tree nodes expanded.
    pub nodes_expanded: u64,
}

/// Resource limits for a search. The default is unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchBudget {
    /// Wall-clock limit for the whole call.
    pub time_limit: Option<Duration>,
    /// Cap on complete orderings evaluated.
    pub max_orderings: Option<u64>,
}

impl SearchBudget {
    /// A wall-clock limit of `seconds`.
    pub fn with_time_limit_secs(seconds: u64) -> Self {
        SearchBudget {
            time_limit: Some(Duration::from_secs(seconds)),
            max_orderings: None,
        }
    }

    pub(crate) fn start(&self) -> BudgetClock {
        BudgetClock {
            deadline: self.time_limit.map(|limit| Instant::now() + limit),
            max_orderings: self.max_orderings,
        }
    }
}

/// A running budget: the deadline is absolute, so one clock can be
/// threaded through several component searches.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BudgetClock {
    deadline: Option<Instant>,
    max_orderings: Option<u64>,
}

impl BudgetClock {
    fn time_exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn orderings_exhausted(&self, stats: &SearchStats) -> bool {
        self.max_orderings
            .is_some_and(|cap| stats.orderings_explored >= cap)
    }
}

/// An optimal consecutive ordering found by [`optimize`].
#[derive(Debug, Clone)]
pub(crate) struct BestOrdering {
    /// The minimized worst nesting count.
    pub value: usize,
    /// Clique indices in arrangement order (inspected by tests; the public
    /// certificate carries the realized intervals instead).
    #[cfg_attr(not(test), allow(dead_code))]
    pub sequence: Vec<usize>,
    /// Per vertex, the positions of its first and last clique.
    pub ranges: Vec<(usize, usize)>,
}

/// Function-pointer placeholder for searches that never visit.
type NoVisitor = fn(&[usize], &[(usize, usize)]) -> ControlFlow<()>;

/// Minimizes the chosen objective over all consecutive orderings of
/// `cliques`. Returns `None` when no consecutive ordering exists (the
/// graph is not an interval graph). Produces a budget error if the limits
/// trip first.
pub(crate) fn optimize(
    g: &Graph,
    cliques: &CliqueSet,
    objective: Objective,
    clock: &BudgetClock,
    stats: &mut SearchStats,
) -> Result<Option<BestOrdering>, Error> {
    let mut search: Search<'_, NoVisitor> = Search::new(g, cliques, Some(objective), *clock);
    let _ = search.descend(stats);
    if search.out_of_budget {
        return Err(Error::TimeBudgetExceeded {
            orderings_explored: stats.orderings_explored,
            best_upper_bound: search.best.as_ref().map(|b| b.value),
        });
    }
    Ok(search.best)
}

/// Visits every consecutive ordering once up to reversal (a sequence and
/// its mirror realize the same nesting relation, so exactly one of each
/// pair — the lexicographically smaller — is reported). The callback
/// receives the clique sequence and the per-vertex position ranges and may
/// stop the walk early. Returns the number of orderings visited.
pub fn for_each_consecutive_ordering<F>(g: &Graph, cliques: &CliqueSet, visit: F) -> u64
where
    F: FnMut(&[usize], &[(usize, usize)]) -> ControlFlow<()>,
{
    let mut search = Search::new(g, cliques, None, SearchBudget::default().start());
    search.visitor = Some(visit);
    let mut stats = SearchStats::default();
    let _ = search.descend(&mut stats);
    search.emitted
}

struct Search<'a, V> {
    cliques: &'a CliqueSet,
    objective: Option<Objective>,
    clock: BudgetClock,
    // Mutable search state.
    used: u64,
    appeared: u64,
    active: u64,
    sequence: Vec<usize>,
    remaining: Vec<u32>,
    first: Vec<usize>,
    last: Vec<usize>,
    nested_in: Vec<usize>,
    running_max: usize,
    // Outputs.
    best: Option<BestOrdering>,
    visitor: Option<V>,
    emitted: u64,
    out_of_budget: bool,
}

impl<'a, V> Search<'a, V>
where
    V: FnMut(&[usize], &[(usize, usize)]) -> ControlFlow<()>,
{
    fn new(
        g: &'a Graph,
        cliques: &'a CliqueSet,
        objective: Option<Objective>,
        clock: BudgetClock,
    ) -> Self {
        let n = g.vertex_count();
        let mut remaining = vec![0u32; n];
        for i in 0..cliques.len() {
            for v in BitIter(cliques.member_bits(i)) {
                remaining[v] += 1;
            }
        }
        Search {
            cliques,
            objective,
            clock,
            used: 0,
            appeared: 0,
            active: 0,
            sequence: Vec::with_capacity(cliques.len()),
            remaining,
            first: vec![0; n],
            last: vec![0; n],
            nested_in: vec![0; n],
            running_max: 0,
            best: None,
            visitor: None,
            emitted: 0,
            out_of_budget: false,
        }
    }

    /// Depth-first walk over feasible extensions. `Break` propagates
    /// budget exhaustion or an early stop upward.
    fn descend(&mut self, stats: &mut SearchStats) -> ControlFlow<()> {
        let k = self.cliques.len();
        if self.sequence.len() == k {
            return self.complete(stats);
        }
        for x in 0..k {
            if self.used >> x & 1 == 1 {
                continue;
            }
            // Feasible next cliques contain exactly the still-active
            // vertices among the already-seen ones: a missing active vertex
            // would split its run, a returning finished one would too.
            let members = self.cliques.member_bits(x);
            if members & self.appeared != self.active {
                continue;
            }
            stats.nodes_expanded += 1;
            if self.clock.time_exhausted() {
                self.out_of_budget = true;
                return ControlFlow::Break(());
            }
            if self.append(x, stats).is_break() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    }

    fn append(&mut self, x: usize, stats: &mut SearchStats) -> ControlFlow<()> {
        let position = self.sequence.len();
        let members = self.cliques.member_bits(x);
        let newly = members & !self.appeared;
        let saved = (self.appeared, self.active, self.running_max);

        for v in BitIter(newly) {
            self.first[v] = position;
        }
        let mut closing = 0u64;
        for v in BitIter(members) {
            self.remaining[v] -= 1;
            if self.remaining[v] == 0 {
                closing |= 1 << v;
                self.last[v] = position;
            }
        }
        self.appeared |= members;
        self.active = members & !closing;

        // A close finalizes the nesting facts about the closing vertex: the
        // intervals strictly enclosing it are exactly the vertices still
        // active afterwards whose runs started strictly earlier.
        let mut bumped: Vec<usize> = Vec::new();
        for u in BitIter(closing) {
            let enclosing =
                BitIter(self.active).filter(|&v| self.first[v] < self.first[u]);
            match self.objective {
                Some(Objective::NestedWithin) => {
                    let count = enclosing.count();
                    self.running_max = self.running_max.max(count);
                }
                Some(Objective::NestedInside) | None => {
                    for v in enclosing {
                        self.nested_in[v] += 1;
                        bumped.push(v);
                    }
                    self.running_max = self.running_max.max(self.nested_in[u]);
                }
            }
        }

        let flow = if self.prunable() {
            ControlFlow::Continue(())
        } else {
            self.sequence.push(x);
            self.used |= 1 << x;
            let flow = self.descend(stats);
            self.used &= !(1 << x);
            self.sequence.pop();
            flow
        };

        // Roll the bookkeeping back for the next sibling.
        for v in bumped {
            self.nested_in[v] -= 1;
        }
        for v in BitIter(members) {
            self.remaining[v] += 1;
        }
        (self.appeared, self.active, self.running_max) = saved;
        flow
    }

    fn prunable(&self) -> bool {
        let Some(best) = self.best.as_ref() else {
            return false;
        };
        let mut lower_bound = self.running_max;
        if self.objective == Some(Objective::NestedInside) {
            // An open interval's nested count only grows until it closes.
            for v in BitIter(self.active) {
                lower_bound = lower_bound.max(self.nested_in[v]);
            }
        }
        lower_bound >= best.value
    }

    fn complete(&mut self, stats: &mut SearchStats) -> ControlFlow<()> {
        if self.clock.orderings_exhausted(stats) || self.clock.time_exhausted() {
            self.out_of_budget = true;
            return ControlFlow::Break(());
        }
        stats.orderings_explored += 1;
        if self.visitor.is_some() {
            let mirrored: Vec<usize> = self.sequence.iter().rev().copied().collect();
            if self.sequence > mirrored {
                return ControlFlow::Continue(());
            }
            self.emitted += 1;
            let ranges: Vec<(usize, usize)> = self
                .first
                .iter()
                .zip(&self.last)
                .map(|(&f, &l)| (f, l))
                .collect();
            let visit = self.visitor.as_mut().expect("checked above");
            return visit(&self.sequence, &ranges);
        }
        let value = self.running_max;
        if self.best.as_ref().is_none_or(|b| value < b.value) {
            self.best = Some(BestOrdering {
                value,
                sequence: self.sequence.clone(),
                ranges: self
                    .first
                    .iter()
                    .zip(&self.last)
                    .map(|(&f, &l)| (f, l))
                    .collect(),
            });
            if value == 0 {
                // Nothing beats zero; stop the whole search.
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::maximal_cliques;

    fn run(g: &Graph, objective: Objective) -> Option<BestOrdering> {
        let cliques = maximal_cliques(g);
        let mut stats = SearchStats::default();
        optimize(
            g,
            &cliques,
            objective,
            &SearchBudget::default().start(),
            &mut stats,
        )
        .unwrap()
    }

    #[test]
    fn path_needs_no_nesting() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let best = run(&g, Objective::NestedInside).unwrap();
        assert_eq!(best.value, 0);
        assert_eq!(best.sequence.len(), 4);
    }

    #[test]
    fn claw_forces_one_nested_interval() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(run(&g, Objective::NestedInside).unwrap().value, 1);
        // Transposed objective: some leaf sits strictly inside the center.
        assert_eq!(run(&g, Objective::NestedWithin).unwrap().value, 1);
    }

    #[test]
    fn star_nesting_grows_with_leaves() {
        // Center 0 with k leaves: k - 2 leaves must nest strictly inside
        // the center (the outermost two can share its endpoints' cliques),
        // while each leaf sits inside at most the center itself.
        for k in 3..=7usize {
            let edges: Vec<(usize, usize)> = (1..=k).map(|v| (0, v)).collect();
            let g = Graph::from_edges(k + 1, &edges);
            assert_eq!(run(&g, Objective::NestedInside).unwrap().value, k - 2, "k = {k}");
            assert_eq!(run(&g, Objective::NestedWithin).unwrap().value, 1, "k = {k}");
        }
    }

    #[test]
    fn cycle_has_no_consecutive_ordering() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(run(&g, Objective::NestedInside).is_none());
    }

    #[test]
    fn ranges_cover_each_vertex_run() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let best = run(&g, Objective::NestedInside).unwrap();
        let cliques = maximal_cliques(&g);
        // The center's run spans everything; each leaf's is a single slot.
        assert_eq!(best.ranges[0], (0, cliques.len() - 1));
        for leaf in 1..4 {
            let (f, l) = best.ranges[leaf];
            assert_eq!(f, l);
            assert!(cliques.member_bits(best.sequence[f]) >> leaf & 1 == 1);
        }
    }

    #[test]
    fn enumeration_respects_mirror_quotient() {
        // A path's clique sequence is rigid: two orderings, one survivor.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let cliques = maximal_cliques(&g);
        let mut seen = Vec::new();
        let count = for_each_consecutive_ordering(&g, &cliques, |seq, _| {
            seen.push(seq.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);
        assert_eq!(seen, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn enumeration_counts_star_orderings() {
        // K_{1,3}: three interchangeable cliques, 3! orderings, halved.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let cliques = maximal_cliques(&g);
        let count =
            for_each_consecutive_ordering(&g, &cliques, |_, _| ControlFlow::Continue(()));
        assert_eq!(count, 3);
    }

    #[test]
    fn enumeration_reports_consistent_ranges() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        let cliques = maximal_cliques(&g);
        for_each_consecutive_ordering(&g, &cliques, |seq, ranges| {
            for (v, &(f, l)) in ranges.iter().enumerate() {
                assert!(f <= l);
                // The run must be exactly the cliques containing v.
                for (pos, &clique) in seq.iter().enumerate() {
                    let inside = cliques.member_bits(clique) >> v & 1 == 1;
                    assert_eq!(inside, (f..=l).contains(&pos), "vertex {v} at {pos}");
                }
            }
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn enumeration_can_stop_early() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let cliques = maximal_cliques(&g);
        let mut seen = 0;
        for_each_consecutive_ordering(&g, &cliques, |_, _| {
            seen += 1;
            ControlFlow::Break(())
        });
        assert_eq!(seen, 1);
    }

    #[test]
    fn ordering_cap_trips_before_first_evaluation() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let cliques = maximal_cliques(&g);
        let budget = SearchBudget {
            time_limit: None,
            max_orderings: Some(0),
        };
        let mut stats = SearchStats::default();
        match optimize(
            &g,
            &cliques,
            Objective::NestedInside,
            &budget.start(),
            &mut stats,
        ) {
            Err(Error::TimeBudgetExceeded {
                orderings_explored,
                best_upper_bound,
            }) => {
                assert_eq!(orderings_explored, 0);
                assert_eq!(best_upper_bound, None);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn expired_time_budget_trips() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let cliques = maximal_cliques(&g);
        let budget = SearchBudget {
            time_limit: Some(Duration::ZERO),
            max_orderings: None,
        };
        let mut stats = SearchStats::default();
        assert!(matches!(
            optimize(
                &g,
                &cliques,
                Objective::NestedInside,
                &budget.start(),
                &mut stats
            ),
            Err(Error::TimeBudgetExceeded { .. })
        ));
    }
}
