//! Concrete interval representations.
//!
//! [`realize_ranges`] converts a consecutive clique ordering (via the
//! per-vertex position ranges it induces) into integer intervals whose
//! strict-nesting relation matches the position ranges' exactly — no
//! accidental nesting from tie-breaking, none lost. All endpoints are
//! distinct consecutive integers.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

/// Closed integer intervals, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRepresentation {
    /// Vertex count.
    pub n: usize,
    /// Interval `[left, right]` of each vertex, indexed by vertex id.
    pub intervals: Vec<(i64, i64)>,
}

/// Per-vertex nesting counts of one representation, with the worst vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentProfile {
    /// Count for each vertex.
    pub per_vertex: Vec<usize>,
    /// Largest count.
    pub max: usize,
    /// Smallest vertex id attaining `max` (`None` only on zero vertices).
    pub witness: Option<usize>,
}

impl ContainmentProfile {
    fn from_counts(per_vertex: Vec<usize>) -> Self {
        let max = per_vertex.iter().copied().max().unwrap_or(0);
        let witness = per_vertex.iter().position(|&c| c == max);
        ContainmentProfile {
            per_vertex,
            max,
            witness,
        }
    }
}

impl IntervalRepresentation {
    /// The interval of vertex `v`.
    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.intervals[v]
    }

    /// Whether the intervals of `u` and `v` overlap (closed intervals).
    pub fn overlaps(&self, u: usize, v: usize) -> bool {
        let (lu, ru) = self.intervals[u];
        let (lv, rv) = self.intervals[v];
        lu.max(lv) <= ru.min(rv)
    }

    /// Whether the interval of `inner` is strictly nested in `outer`'s:
    /// both endpoints strictly inside.
    pub fn strictly_nested(&self, inner: usize, outer: usize) -> bool {
        let (li, ri) = self.intervals[inner];
        let (lo, ro) = self.intervals[outer];
        lo < li && ri < ro
    }

    /// For each vertex, how many intervals are strictly nested inside its
    /// own.
    pub fn nested_inside_profile(&self) -> ContainmentProfile {
        let counts = (0..self.n)
            .map(|outer| {
                (0..self.n)
                    .filter(|&inner| inner != outer && self.strictly_nested(inner, outer))
                    .count()
            })
            .collect();
        ContainmentProfile::from_counts(counts)
    }

    /// For each vertex, how many intervals strictly enclose its own.
    pub fn nested_within_profile(&self) -> ContainmentProfile {
        let counts = (0..self.n)
            .map(|inner| {
                (0..self.n)
                    .filter(|&outer| outer != inner && self.strictly_nested(inner, outer))
                    .count()
            })
            .collect();
        ContainmentProfile::from_counts(counts)
    }

    /// Checks that this is a well-formed representation of exactly `g`:
    /// right counts, ordered endpoints, and overlap precisely on edges.
    pub fn validate(&self, g: &Graph) -> Result<(), Error> {
        if self.n != g.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "representation has {} vertices, graph has {}",
                self.n,
                g.vertex_count()
            )));
        }
        if self.intervals.len() != self.n {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} intervals, found {}",
                self.n,
                self.intervals.len()
            )));
        }
        for (v, &(l, r)) in self.intervals.iter().enumerate() {
            if l > r {
                return Err(Error::InvalidRepresentation(format!(
                    "interval of vertex {v} is reversed: [{l}, {r}]"
                )));
            }
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                let overlap = self.overlaps(u, v);
                if overlap != g.has_edge(u, v) {
                    return Err(Error::InvalidRepresentation(format!(
                        "vertices {u} and {v} {} in the graph but their intervals {}",
                        if g.has_edge(u, v) {
                            "are adjacent"
                        } else {
                            "are not adjacent"
                        },
                        if overlap { "overlap" } else { "do not overlap" }
                    )));
                }
            }
        }
        Ok(())
    }

    /// The overlap graph of the intervals.
    pub fn to_graph(&self) -> Result<Graph, Error> {
        if self.n > crate::MAX_VERTICES {
            return Err(Error::InvalidRepresentation(format!(
                "representation has {} vertices (maximum {})",
                self.n,
                crate::MAX_VERTICES
            )));
        }
        if self.intervals.len() != self.n {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} intervals, found {}",
                self.n,
                self.intervals.len()
            )));
        }
        for (v, &(l, r)) in self.intervals.iter().enumerate() {
            if l > r {
                return Err(Error::InvalidRepresentation(format!(
                    "interval of vertex {v} is reversed: [{l}, {r}]"
                )));
            }
        }
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.overlaps(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }
}

/// Builds the canonical representation of a consecutive ordering from its
/// per-vertex position ranges.
///
/// Sweeping positions left to right, each position first opens the
/// intervals whose run starts there (shortest run first), then closes the
/// ones whose run ends there (earliest start first). That tie-breaking
/// makes interval nesting coincide with strict range nesting: runs that
/// start together open in an order that puts the sooner-ending interval
/// first, and runs that end together close the later-starting interval
/// first, so neither tie can produce containment on both sides at once.
pub fn realize_ranges(ranges: &[(usize, usize)]) -> IntervalRepresentation {
    let n = ranges.len();
    let positions = ranges.iter().map(|&(_, l)| l + 1).max().unwrap_or(0);
    let mut intervals = vec![(0i64, 0i64); n];
    let mut coordinate = 0i64;
    for t in 0..positions {
        let mut opening: Vec<usize> = (0..n).filter(|&v| ranges[v].0 == t).collect();
        opening.sort_by_key(|&v| (ranges[v].1, v));
        for v in opening {
            intervals[v].0 = coordinate;
            coordinate += 1;
        }
        let mut closing: Vec<usize> = (0..n).filter(|&v| ranges[v].1 == t).collect();
        closing.sort_by_key(|&v| (ranges[v].0, v));
        for v in closing {
            intervals[v].1 = coordinate;
            coordinate += 1;
        }
    }
    IntervalRepresentation { n, intervals }
}

/// Strict nesting of position ranges: used to cross-check realizations.
#[cfg(test)]
fn range_nested(inner: (usize, usize), outer: (usize, usize)) -> bool {
    outer.0 < inner.0 && inner.1 < outer.1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claw_realization_is_frozen() {
        // Center spans three positions; leaves take one each.
        let ranges = vec![(0, 2), (0, 0), (1, 1), (2, 2)];
        let rep = realize_ranges(&ranges);
        assert_eq!(
            rep.intervals,
            vec![(1, 6), (0, 2), (3, 4), (5, 7)]
        );
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        rep.validate(&g).unwrap();
        let profile = rep.nested_inside_profile();
        assert_eq!(profile.per_vertex, vec![1, 0, 0, 0]);
        assert_eq!(profile.max, 1);
        assert_eq!(profile.witness, Some(0));
        let within = rep.nested_within_profile();
        assert_eq!(within.per_vertex, vec![0, 0, 1, 0]);
    }

    #[test]
    fn realization_nesting_matches_range_nesting() {
        // Assorted range families, including every tie pattern.
        let cases: Vec<Vec<(usize, usize)>> = vec![
            vec![(0, 0)],
            vec![(0, 1), (0, 1)],
            vec![(0, 2), (1, 1), (0, 0), (2, 2)],
            vec![(0, 3), (1, 2), (1, 3), (0, 2), (2, 2)],
            vec![(0, 4), (0, 4), (1, 3), (2, 2), (1, 1), (3, 4), (4, 4)],
            vec![(0, 0), (0, 0), (0, 0)],
        ];
        for ranges in cases {
            let rep = realize_ranges(&ranges);
            for inner in 0..ranges.len() {
                for outer in 0..ranges.len() {
                    if inner == outer {
                        continue;
                    }
                    assert_eq!(
                        rep.strictly_nested(inner, outer),
                        range_nested(ranges[inner], ranges[outer]),
                        "ranges {ranges:?}, inner {inner}, outer {outer}"
                    );
                }
            }
        }
    }

    #[test]
    fn endpoints_are_distinct_consecutive_integers() {
        let ranges = vec![(0, 3), (1, 2), (1, 3), (0, 2), (2, 2)];
        let rep = realize_ranges(&ranges);
        let mut coords: Vec<i64> = rep
            .intervals
            .iter()
            .flat_map(|&(l, r)| [l, r])
            .collect();
        coords.sort();
        assert_eq!(coords, (0..coords.len() as i64).collect::<Vec<_>>());
    }

    #[test]
    fn validate_catches_defects() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let missing_overlap = IntervalRepresentation {
            n: 2,
            intervals: vec![(0, 1), (2, 3)],
        };
        assert!(matches!(
            missing_overlap.validate(&g),
            Err(Error::InvalidRepresentation(_))
        ));
        let reversed = IntervalRepresentation {
            n: 2,
            intervals: vec![(1, 0), (0, 2)],
        };
        assert!(matches!(
            reversed.validate(&g),
            Err(Error::InvalidRepresentation(_))
        ));
        let wrong_count = IntervalRepresentation {
            n: 2,
            intervals: vec![(0, 1)],
        };
        assert!(matches!(
            wrong_count.validate(&g),
            Err(Error::InvalidRepresentation(_))
        ));
        let good = IntervalRepresentation {
            n: 2,
            intervals: vec![(0, 2), (1, 3)],
        };
        good.validate(&g).unwrap();
    }

    #[test]
    fn overlap_graph_reconstruction() {
        let rep = IntervalRepresentation {
            n: 4,
            intervals: vec![(0, 5), (1, 2), (3, 4), (6, 7)],
        };
        let g = rep.to_graph().unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        rep.validate(&g).unwrap();
    }

    #[test]
    fn json_shape_is_stable() {
        let rep = IntervalRepresentation {
            n: 2,
            intervals: vec![(0, 2), (1, 3)],
        };
        let json = serde_json::to_string(&rep).unwrap();
        assert_eq!(json, r#"{"n":2,"intervals":[[0,2],[1,3]]}"#);
        let back: IntervalRepresentation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn profiles_handle_ties_without_phantom_nesting() {
        // Two identical intervals nest in neither direction.
        let rep = IntervalRepresentation {
            n: 2,
            intervals: vec![(0, 5), (0, 5)],
        };
        assert_eq!(rep.nested_inside_profile().max, 0);
        assert_eq!(rep.nested_within_profile().max, 0);
    }
}
