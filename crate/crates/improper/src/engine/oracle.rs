//! Brute-force reference computation over endpoint sequences.
//!
//! A representation with all endpoints distinct is, up to order-preserving
//! deformation, exactly a sequence of `open(v)` / `close(v)` events in
//! which every vertex opens before it closes. Two local rules characterize
//! the sequences realizing a given graph:
//!
//! * `open(u)` requires every currently open vertex to neighbor `u` —
//!   overlap with a non-neighbor is illegal;
//! * `close(v)` requires every neighbor of `v` to have opened — a neighbor
//!   opening only after `v` closes would never overlap it.
//!
//! Ties in an arbitrary representation can always be perturbed away
//! without creating new strict nesting (order tied opens by sooner close,
//! tied closes by earlier open, opens before closes at a shared point), so
//! exhausting these sequences exhausts the achievable nesting profiles.
//! This module deliberately shares no search logic with the clique-
//! ordering engine: it is the independent route used to certify it.

use crate::error::Error;
use crate::graph::Graph;

/// Direction of the nesting count being minimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Inside,
    Within,
}

/// Minimum over all representations of the worst count of intervals
/// strictly nested inside one interval. Exhaustive; guarded at
/// [`crate::ORACLE_GUARD`] vertices.
pub fn oracle_impropriety(g: &Graph) -> Result<usize, Error> {
    run(g, Target::Inside).map(|(value, _)| value)
}

/// Like [`oracle_impropriety`], but also reports how many complete endpoint
/// sequences the brute-force search evaluated (deterministic for a given
/// input; pruned branches are not counted).
pub fn oracle_impropriety_examined(g: &Graph) -> Result<(usize, u64), Error> {
    run(g, Target::Inside)
}

/// Minimum over all representations of the worst count of intervals
/// strictly enclosing one interval. Exhaustive; guarded at
/// [`crate::ORACLE_GUARD`] vertices.
pub fn oracle_properness(g: &Graph) -> Result<usize, Error> {
    run(g, Target::Within).map(|(value, _)| value)
}

fn run(g: &Graph, target: Target) -> Result<(usize, u64), Error> {
    let n = g.vertex_count();
    if n > crate::ORACLE_GUARD {
        return Err(Error::GuardExceeded {
            what: "endpoint-sequence oracle",
            limit: crate::ORACLE_GUARD,
            actual: n,
        });
    }
    if n == 0 {
        // The empty sequence is the single representation of the empty graph.
        return Ok((0, 1));
    }
    let mut search = Oracle {
        g,
        full: g.full_mask(),
        target,
        opened: 0,
        closed: 0,
        open_order: Vec::with_capacity(n),
        nested_in: vec![0; n],
        running_max: 0,
        best: None,
        completions: 0,
    };
    search.dfs();
    match search.best {
        Some(value) => Ok((value, search.completions)),
        None => Err(Error::NotIntervalGraph(g.interval_obstruction_kind())),
    }
}

struct Oracle<'a> {
    g: &'a Graph,
    full: u64,
    target: Target,
    opened: u64,
    closed: u64,
    open_order: Vec<usize>,
    nested_in: Vec<usize>,
    running_max: usize,
    best: Option<usize>,
    completions: u64,
}

impl Oracle<'_> {
    /// Returns `true` when the search should stop entirely (a value of
    /// zero cannot be improved).
    fn dfs(&mut self) -> bool {
        if self.closed == self.full {
            self.completions += 1;
            if self.best.is_none_or(|b| self.running_max < b) {
                self.best = Some(self.running_max);
                if self.running_max == 0 {
                    return true;
                }
            }
            return false;
        }
        // Close moves first: finishing intervals early tends to reach good
        // completions sooner, which sharpens the bound below.
        for index in 0..self.open_order.len() {
            let v = self.open_order[index];
            if self.g.neighbors_bits(v) & !self.opened != 0 {
                continue;
            }
            let saved_max = self.running_max;
            // Open vertices that opened before v stay open past v's close,
            // so their intervals strictly enclose v's.
            let enclosing_count = index;
            match self.target {
                Target::Within => {
                    self.running_max = self.running_max.max(enclosing_count);
                }
                Target::Inside => {
                    for i in 0..index {
                        self.nested_in[self.open_order[i]] += 1;
                    }
                    self.running_max = self.running_max.max(self.nested_in[v]);
                }
            }
            self.closed |= 1 << v;
            self.open_order.remove(index);

            let stop = !self.prunable() && self.dfs();

            self.open_order.insert(index, v);
            self.closed &= !(1 << v);
            if self.target == Target::Inside {
                for i in 0..index {
                    self.nested_in[self.open_order[i]] -= 1;
                }
            }
            self.running_max = saved_max;
            if stop {
                return true;
            }
        }
        let open_bits = self.opened & !self.closed;
        for u in 0..self.g.vertex_count() {
            if self.opened >> u & 1 == 1 || open_bits & !self.g.neighbors_bits(u) != 0 {
                continue;
            }
            self.opened |= 1 << u;
            self.open_order.push(u);

            let stop = !self.prunable() && self.dfs();

            self.open_order.pop();
            self.opened &= !(1 << u);
            if stop {
                return true;
            }
        }
        false
    }

    fn prunable(&self) -> bool {
        let Some(best) = self.best else {
            return false;
        };
        let mut lower_bound = self.running_max;
        if self.target == Target::Inside {
            for &v in &self.open_order {
                lower_bound = lower_bound.max(self.nested_in[v]);
            }
        }
        lower_bound >= best
    }
}
