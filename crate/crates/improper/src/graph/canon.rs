//! Canonical forms for small graphs.
//!
//! The canonical key of a graph is the lexicographically smallest bitstring
//! of its upper adjacency triangle (column order) over all vertex
//! relabelings. Guarded at [`crate::CANONICAL_GUARD`] vertices: the search
//! is a permutation DFS, kept fast by two sound prunes:
//!
//! * prefix pruning — placing position `j` appends exactly the adjacency
//!   column to the already-placed prefix, so a partial string that already
//!   exceeds the best known prefix kills the whole subtree;
//! * twin skipping — vertices with identical neighborhoods outside the pair
//!   produce identical strings in every placement, so only one member of a
//!   twin class is tried per search node.

use super::Graph;
use crate::error::Error;

/// Result of canonicalization: the key plus the relabeling that realizes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    key: Vec<u8>,
    to_canonical: Vec<usize>,
}

impl CanonicalForm {
    /// The canonical key: one byte for the vertex count, then the minimal
    /// upper-triangle bitstring packed big-endian.
    pub fn key(&self) -> &[u8] {
        &self.key
    }

    /// The key as lowercase hex, for text stores.
    pub fn hex_key(&self) -> String {
        self.key.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The relabeling `old id -> canonical id`.
    pub fn to_canonical(&self) -> &[usize] {
        &self.to_canonical
    }

    /// The canonical representative itself.
    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        g.relabel(&self.to_canonical)
    }
}

/// Computes the canonical form of `g`.
///
/// Fails with a guard error above [`crate::CANONICAL_GUARD`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, Error> {
    let n = g.vertex_count();
    if n > crate::CANONICAL_GUARD {
        return Err(Error::GuardExceeded {
            what: "canonical form",
            limit: crate::CANONICAL_GUARD,
            actual: n,
        });
    }
    let total_bits = n * n.saturating_sub(1) / 2;

    // Twin classes: u ~ v when their neighborhoods agree outside {u, v}.
    // Swapping twins never changes the bitstring, so one representative per
    // class suffices at every search node.
    let mut class = vec![usize::MAX; n];
    let mut class_count = 0;
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = class_count;
        for v in u + 1..n {
            if class[v] == usize::MAX
                && g.neighbors_bits(u) & !(1 << v) == g.neighbors_bits(v) & !(1 << u)
            {
                class[v] = class_count;
            }
        }
        class_count += 1;
    }

    let mut search = Search {
        g,
        class: &class,
        total_bits,
        best: u128::MAX,
        best_order: Vec::new(),
        placed: Vec::with_capacity(n),
    };
    search.descend(0, 0, 0);

    let (best, best_order) = (search.best, search.best_order);
    debug_assert_eq!(best_order.len(), n);
    let mut key = Vec::with_capacity(1 + total_bits.div_ceil(8));
    key.push(n as u8);
    let mut byte = 0u8;
    for b in 0..total_bits {
        byte = byte << 1 | (best >> (total_bits - 1 - b) & 1) as u8;
        if b % 8 == 7 {
            key.push(byte);
            byte = 0;
        }
    }
    if total_bits % 8 != 0 {
        key.push(byte << (8 - total_bits % 8));
    }
    // best_order maps position -> old vertex; invert for old -> position.
    let mut to_canonical = vec![0usize; n];
    for (pos, &old) in best_order.iter().enumerate() {
        to_canonical[old] = pos;
    }
    Ok(CanonicalForm { key, to_canonical })
}

/// Whether two graphs are isomorphic (both within the canonical guard).
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, Error> {
    if g.vertex_count() != h.vertex_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)?.key == canonical_form(h)?.key)
}

struct Search<'a> {
    g: &'a Graph,
    class: &'a [usize],
    total_bits: usize,
    best: u128,
    best_order: Vec<usize>,
    placed: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, used: u64, partial: u128, bits: usize) {
        let n = self.g.vertex_count();
        let depth = self.placed.len();
        if depth == n {
            if partial < self.best || self.best_order.is_empty() {
                self.best = partial;
                self.best_order = self.placed.clone();
            }
            return;
        }
        let mut tried_classes = 0u64;
        for v in 0..n {
            if used >> v & 1 == 1 || tried_classes >> self.class[v] & 1 == 1 {
                continue;
            }
            tried_classes |= 1 << self.class[v];
            // Appending position `depth` contributes its adjacency column
            // to the placed prefix, earliest position most significant.
            let mut column = 0u128;
            for &w in &self.placed {
                column = column << 1 | self.g.has_edge(w, v) as u128;
            }
            let next_partial = partial << depth | column;
            let next_bits = bits + depth;
            if next_partial > self.best >> (self.total_bits - next_bits) {
                continue;
            }
            self.placed.push(v);
            self.descend(used | 1 << v, next_partial, next_bits);
            self.placed.pop();
        }
    }
}
