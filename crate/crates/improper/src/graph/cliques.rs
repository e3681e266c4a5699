//! Maximal-clique listing.
//!
//! Recursive Bron–Kerbosch with pivoting over adjacency bitsets. Output
//! order is deterministic: each clique sorted ascending, the list sorted
//! lexicographically. An isolated vertex forms its own (singleton) maximal
//! clique.
//!
//! The listing is worst-case exponential on arbitrary graphs; the intended
//! consumers run it on chordal graphs, where the number of maximal cliques
//! is at most the number of vertices.

use super::{BitIter, Graph};

/// The maximal cliques of a graph, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    cliques: Vec<Vec<usize>>,
    bits: Vec<u64>,
}

impl CliqueSet {
    /// Number of maximal cliques.
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    /// Whether the set is empty (only for the graph on zero vertices).
    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// The cliques as sorted vertex lists, lexicographically ordered.
    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    /// Members of clique `i`, ascending.
    pub fn members(&self, i: usize) -> &[usize] {
        &self.cliques[i]
    }

    /// Members of clique `i` as a bitset.
    pub fn member_bits(&self, i: usize) -> u64 {
        self.bits[i]
    }

    /// Indices of the cliques containing vertex `v`, ascending.
    pub fn containing(&self, v: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.bits[i] >> v & 1 == 1)
            .collect()
    }
}

/// Lists the maximal cliques of `g`.
pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    let mut found: Vec<u64> = Vec::new();
    if g.vertex_count() > 0 {
        expand(g, 0, g.full_mask(), 0, &mut found);
    }
    let mut cliques: Vec<Vec<usize>> = found
        .iter()
        .map(|&mask| BitIter(mask).collect())
        .collect();
    cliques.sort();
    let bits = cliques
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let set = CliqueSet { cliques, bits };
    debug_assert!(check_invariants(g, &set));
    set
}

fn expand(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on the vertex of P ∪ X covering the most of P; only vertices
    // outside its neighborhood can extend R toward a new maximal clique.
    let mut pivot = usize::MAX;
    let mut covered = -1i32;
    for u in BitIter(p | x) {
        let c = (p & g.neighbors_bits(u)).count_ones() as i32;
        if c > covered {
            covered = c;
            pivot = u;
        }
    }
    for v in BitIter(p & !g.neighbors_bits(pivot)) {
        let nb = g.neighbors_bits(v);
        expand(g, r | 1 << v, p & nb, x & nb, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn check_invariants(g: &Graph, set: &CliqueSet) -> bool {
    let mut vertex_cover = 0u64;
    for (i, clique) in set.cliques().iter().enumerate() {
        assert!(clique.windows(2).all(|w| w[0] < w[1]), "unsorted clique");
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                assert!(g.has_edge(u, v), "non-edge ({u}, {v}) inside a clique");
            }
        }
        let bits = set.member_bits(i);
        vertex_cover |= bits;
        for w in BitIter(g.full_mask() & !bits) {
            assert!(
                g.neighbors_bits(w) & bits != bits,
                "clique {clique:?} is not maximal: vertex {w} extends it"
            );
        }
    }
    assert_eq!(vertex_cover, g.full_mask(), "vertex not in any clique");
    assert!(
        set.cliques().windows(2).all(|w| w[0] < w[1]),
        "clique list not sorted or contains duplicates"
    );
    true
}
