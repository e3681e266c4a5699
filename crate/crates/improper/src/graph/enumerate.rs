//! Exhaustive small-graph enumeration up to isomorphism.
//!
//! Graphs on `m + 1` vertices are generated by attaching a new vertex to
//! every subset of each m-vertex graph, then deduplicating by canonical
//! key. Every connected graph has a vertex whose removal leaves it
//! connected (any leaf of a spanning tree), so restricting to non-empty
//! attachment sets enumerates exactly the connected graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{canonical_form, Graph};
use crate::error::Error;

/// All graphs up to isomorphism, grouped by vertex count: entry `n` holds
/// the graphs on `n` vertices (canonical representatives, sorted by key).
///
/// Guarded at [`crate::EXPLORE_GUARD`] vertices.
pub fn enumerate_all_graphs(max_n: usize) -> Result<Vec<Vec<Graph>>, Error> {
    enumerate(max_n, false)
}

/// Connected graphs up to isomorphism, grouped by vertex count, as in
/// [`enumerate_all_graphs`].
pub fn enumerate_connected_graphs(max_n: usize) -> Result<Vec<Vec<Graph>>, Error> {
    enumerate(max_n, true)
}

fn enumerate(max_n: usize, connected_only: bool) -> Result<Vec<Vec<Graph>>, Error> {
    if max_n > crate::EXPLORE_GUARD {
        return Err(Error::GuardExceeded {
            what: "graph enumeration",
            limit: crate::EXPLORE_GUARD,
            actual: max_n,
        });
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::new(0)]];
    for m in 0..max_n {
        let first_mask = u64::from(connected_only && m > 0);
        let expanded: Vec<(Vec<u8>, Graph)> = levels[m]
            .par_iter()
            .flat_map_iter(|g| {
                (first_mask..1u64 << m).map(move |mask| {
                    let mut h = Graph::new(m + 1);
                    for (u, v) in g.edges() {
                        h.add_edge(u, v);
                    }
                    for v in 0..m {
                        if mask >> v & 1 == 1 {
                            h.add_edge(v, m);
                        }
                    }
                    let form = canonical_form(&h).expect("guarded above");
                    (form.key().to_vec(), form.canonical_graph(&h))
                })
            })
            .collect();
        let mut dedup: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for (key, graph) in expanded {
            dedup.entry(key).or_insert(graph);
        }
        levels.push(dedup.into_values().collect());
    }
    Ok(levels)
}
