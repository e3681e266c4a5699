//! Dense small-graph type and structural helpers.
//!
//! Graphs here are simple and undirected with vertices `0..n`, stored as one
//! adjacency bitset per vertex. Everything downstream (arrangement search,
//! oracle, canonical forms) leans on cheap bitset operations, so the vertex
//! count is capped at [`crate::MAX_VERTICES`]. That is far above every
//! documented guard; the cap exists so a `u64` row is always enough.

mod canon;
mod cliques;
mod enumerate;
mod graph6;
mod parse;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use cliques::{maximal_cliques, CliqueSet};
pub use enumerate::{enumerate_all_graphs, enumerate_connected_graphs};

use crate::error::Error;

/// Iterator over the set bits of a `u64`.
#[derive(Debug, Clone)]
pub struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A simple undirected graph on vertices `0..n`, `n <= 62`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// Panics if `n` exceeds [`crate::MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(
            n <= crate::MAX_VERTICES,
            "graph too large: {n} vertices (max {})",
            crate::MAX_VERTICES
        );
        Graph {
            n,
            adj: vec![0u64; n],
        }
    }

    /// Builds a graph from an edge list. Intended for programmatic
    /// construction with known-good data.
    ///
    /// # Panics
    /// Panics on out-of-range endpoints or self-loops. Duplicate edges are
    /// tolerated (idempotent).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts the edge `{u, v}`.
    ///
    /// # Panics
    /// Panics on out-of-range endpoints or `u == v`.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Number of vertices.
    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Whether `{u, v}` is an edge.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Iterator over the neighbors of `v`, ascending.
    #[inline]
    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// All edges `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in BitIter(self.adj[u] >> u >> 1).map(|b| b + u + 1) {
                out.push((u, v));
            }
        }
        out
    }

    /// Deletes vertex `v`; remaining vertices are renumbered preserving
    /// order. Returns the new graph and the mapping `new id -> old id`.
    pub fn delete_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        assert!(v < self.n, "vertex {v} out of range");
        let mapping: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let mut g = Graph::new(self.n - 1);
        for (new_u, &old_u) in mapping.iter().enumerate() {
            for (new_w, &old_w) in mapping.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_w) {
                    g.add_edge(new_u, new_w);
                }
            }
        }
        (g, mapping)
    }

    /// The subgraph induced by the set bits of `mask`, vertices renumbered
    /// preserving order. Returns the new graph and `new id -> old id`.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<usize>) {
        let mapping: Vec<usize> = BitIter(mask & self.full_mask()).collect();
        let mut g = Graph::new(mapping.len());
        for (new_u, &old_u) in mapping.iter().enumerate() {
            for (new_w, &old_w) in mapping.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_w) {
                    g.add_edge(new_u, new_w);
                }
            }
        }
        (g, mapping)
    }

    /// Relabels by `perm`, where `perm[old] = new`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            // Bitset BFS: grow until closed under adjacency.
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(BitIter(comp).collect());
        }
        out
    }

    /// Connected components as bitsets, ordered by smallest member.
    pub fn component_masks(&self) -> Vec<u64> {
        self.connected_components()
            .into_iter()
            .map(|comp| comp.into_iter().fold(0u64, |m, v| m | 1 << v))
            .collect()
    }

    /// Whether the graph is connected (vacuously true for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether some induced subgraph is a claw (K_{1,3}): a vertex with
    /// three pairwise non-adjacent neighbors.
    pub fn has_induced_claw(&self) -> bool {
        for c in 0..self.n {
            let nb: Vec<usize> = self.neighbors(c).collect();
            if nb.len() < 3 {
                continue;
            }
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in nb.iter().skip(j + 1) {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Chordality via maximum cardinality search plus perfect-elimination
    /// verification.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n <= 3 {
            return true;
        }
        // MCS: repeatedly pick an unvisited vertex with the most visited
        // neighbors (smallest id on ties, for determinism).
        let mut order = Vec::with_capacity(n); // visit order
        let mut visited = 0u64;
        let mut weight = vec![0usize; n];
        for _ in 0..n {
            let mut best = usize::MAX;
            for v in 0..n {
                if visited >> v & 1 == 0 && (best == usize::MAX || weight[v] > weight[best]) {
                    best = v;
                }
            }
            visited |= 1 << best;
            order.push(best);
            for w in self.neighbors(best) {
                if visited >> w & 1 == 0 {
                    weight[w] += 1;
                }
            }
        }
        // Reverse MCS order is a perfect elimination order iff chordal:
        // for each vertex, its earlier-visited neighbors must all be
        // adjacent to the latest-visited one among them.
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            let earlier: Vec<usize> = self
                .neighbors(v)
                .filter(|&w| pos[w] < i)
                .collect();
            if let Some(&latest) = earlier.iter().max_by_key(|&&w| pos[w]) {
                for &w in &earlier {
                    if w != latest && !self.has_edge(w, latest) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Classifies a non-interval graph's obstruction: a graph that is not
    /// chordal contains a chordless cycle; a chordal graph that is still
    /// not an interval graph contains an asteroidal triple. Only
    /// meaningful for graphs already known not to be interval graphs.
    pub fn interval_obstruction_kind(&self) -> crate::error::NotIntervalReason {
        if self.is_chordal() {
            crate::error::NotIntervalReason::AsteroidalTriple
        } else {
            crate::error::NotIntervalReason::ChordlessCycle
        }
    }

    /// Parses the plain edge-list format (`p <n> <m>` header, `e <u> <v>`
    /// lines, `c` comment lines).
    pub fn from_edge_list(text: &str) -> Result<Graph, Error> {
        parse::parse_edge_list(text)
    }

    /// Serializes to the plain edge-list format.
    pub fn to_edge_list(&self) -> String {
        parse::to_edge_list(self)
    }

    /// Parses a graph6 string (short form, `n <= 62`).
    pub fn from_graph6(text: &str) -> Result<Graph, Error> {
        graph6::from_graph6(text)
    }

    /// Serializes to graph6 (short form).
    pub fn to_graph6(&self) -> String {
        graph6::to_graph6(self)
    }

    /// Serializes to Graphviz DOT (`graph { ... }`), deterministic order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}
