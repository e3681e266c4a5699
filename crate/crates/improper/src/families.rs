//! Parameterized graph constructions with a designated removal vertex.
//!
//! Each `gen_*` family builds a connected interval graph whose impropriety
//! is steered by a parameter `p`, together with one designated vertex whose
//! removal is claimed to land the impropriety on a second parameter. The
//! common mechanism: a long "basepoint" interval holds captive cliques that
//! cannot escape past the blockers attached on either side; deleting the
//! designated blocker frees a captive clique and lowers the count.
//!
//! The `expected_*` fields on [`FamilyInstance`] are claims to be verified
//! by the engine, never inputs to it. Verification sweeps treat mismatches
//! as findings, and nothing in this crate branches on the claimed values.
//!
//! All generators are deterministic: the same parameters produce the same
//! labeled graph, edge for edge.

use crate::engine;
use crate::error::Error;
use crate::graph::Graph;

// ----------------------------------------------------------------------
// instance metadata
// ----------------------------------------------------------------------

/// Parameters a family instance was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct FamilyParams {
    /// Target impropriety of the intact graph.
    pub p: usize,
    /// Target impropriety after deleting the designated vertex
    /// (absent for families with a fixed drop target).
    pub n: Option<usize>,
    /// Chain length for the chain family (absent elsewhere).
    pub s: Option<usize>,
}

/// A generated graph plus the claims attached to it.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    /// The constructed graph.
    pub graph: Graph,
    /// Short identifier of the generating family.
    pub family_tag: &'static str,
    /// Parameters the instance was built from.
    pub params: FamilyParams,
    /// Vertex whose removal is claimed to lower the impropriety.
    pub designated_vertex: usize,
    /// Claimed impropriety of the intact graph.
    pub expected_impropriety: usize,
    /// Claimed impropriety after deleting the designated vertex.
    pub expected_drop_value: usize,
    /// The long interval the construction traps its cliques inside.
    pub constructed_basepoint: usize,
    /// Captive clique expected to escape once the designated vertex is gone.
    pub relocating_clique: Vec<usize>,
    /// Free-form provenance notes (calibration results and the like).
    pub notes: Vec<String>,
}

impl FamilyInstance {
    fn check(self) -> Self {
        debug_assert!(self.designated_vertex < self.graph.vertex_count());
        debug_assert!(self.constructed_basepoint < self.graph.vertex_count());
        debug_assert!(self.graph.is_connected());
        debug_assert!(self
            .relocating_clique
            .iter()
            .all(|&v| v < self.graph.vertex_count()));
        self
    }
}

// ----------------------------------------------------------------------
// construction helpers
// ----------------------------------------------------------------------

fn complete_block(g: &mut Graph, members: std::ops::Range<usize>) {
    let list: Vec<usize> = members.collect();
    for (i, &u) in list.iter().enumerate() {
        for &v in &list[i + 1..] {
            g.add_edge(u, v);
        }
    }
}

fn attach_all(g: &mut Graph, hub: usize, block: std::ops::Range<usize>) {
    for v in block {
        g.add_edge(hub, v);
    }
}

fn guard_size(tag: &str, n: usize) -> Result<(), Error> {
    if n > crate::MAX_VERTICES {
        return Err(Error::InvalidParameters(format!(
            "{tag}: construction needs {n} vertices, more than the supported {}",
            crate::MAX_VERTICES
        )));
    }
    Ok(())
}

// ----------------------------------------------------------------------
// drop-pair: impropriety p, designated removal lands on any n < p
// ----------------------------------------------------------------------

/// Builds the drop-pair graph: a basepoint `b` holding two captive cliques
/// (sizes `n` and `p − n`), blocked on one side by a triangle and on the
/// other by a pendant pair.
///
/// Layout on `p + 6` vertices:
///
/// ```text
/// 0        basepoint b
/// 1,2,3    triangle; 2 and 3 also meet b, 1 pins the triangle outside
/// 4..4+n   captive clique held by 3 and b (stays captive)
/// 4+n..4+p captive clique held by b only (escapes once y1 is gone)
/// p+4      y1: pendant blocker on b (designated vertex)
/// p+5      y2: pendant tail on y1
/// ```
///
/// Claim under test: impropriety `p`; deleting `y1` leaves impropriety `n`.
pub fn gen_drop_pair(p: usize, n: usize) -> Result<FamilyInstance, Error> {
    if p < 1 {
        return Err(Error::InvalidParameters(
            "drop-pair: p must be at least 1".into(),
        ));
    }
    if n >= p {
        return Err(Error::InvalidParameters(format!(
            "drop-pair: n must satisfy 0 <= n <= p - 1, got n = {n}, p = {p}"
        )));
    }
    guard_size("drop-pair", p + 6)?;

    let mut g = Graph::new(p + 6);
    let b = 0;
    let (t_pin, t_mid, t_carrier) = (1, 2, 3);
    let held = 4..4 + n;
    let released = 4 + n..4 + p;
    let y1 = p + 4;
    let y2 = p + 5;

    g.add_edge(t_pin, t_mid);
    g.add_edge(t_pin, t_carrier);
    g.add_edge(t_mid, t_carrier);
    g.add_edge(b, t_mid);
    g.add_edge(b, t_carrier);
    complete_block(&mut g, held.clone());
    attach_all(&mut g, t_carrier, held.clone());
    attach_all(&mut g, b, held);
    complete_block(&mut g, released.clone());
    attach_all(&mut g, b, released.clone());
    g.add_edge(b, y1);
    g.add_edge(y1, y2);

    Ok(FamilyInstance {
        graph: g,
        family_tag: "drop-pair",
        params: FamilyParams {
            p,
            n: Some(n),
            s: None,
        },
        designated_vertex: y1,
        expected_impropriety: p,
        expected_drop_value: n,
        constructed_basepoint: b,
        relocating_clique: released.collect(),
        notes: Vec::new(),
    }
    .check())
}

// ----------------------------------------------------------------------
// half-drop: impropriety p, designated removal lands on n <= floor(p/2)
// ----------------------------------------------------------------------

/// Builds the half-drop graph: two long intervals `A` and `B` holding three
/// captive cliques (sizes `p − n`, `p − n`, `n`), plus a pendant blocker on
/// `A` alone.
///
/// Layout on `2p − n + 3` vertices:
///
/// ```text
/// 0                 A (basepoint)
/// 1                 B (second long interval)
/// 2..2+(p−n)        first large clique
/// 2+(p−n)..2+2(p−n) second large clique (escapes once D is gone)
/// 2+2(p−n)..end−1   small clique of size n (stays captive)
/// 2p−n+2            D: pendant blocker on A (designated vertex)
/// ```
///
/// Every clique member meets both `A` and `B`; the cliques are pairwise
/// non-adjacent. Claim under test: impropriety `p`; deleting `D` leaves
/// impropriety `n`, which is why `n` may not exceed `⌊p/2⌋` — the smallest
/// of the three cliques is the one that stays captive.
pub fn gen_half_drop(p: usize, n: usize) -> Result<FamilyInstance, Error> {
    if p < 2 {
        return Err(Error::InvalidParameters(
            "half-drop: p must be at least 2".into(),
        ));
    }
    if n > p / 2 {
        return Err(Error::InvalidParameters(format!(
            "half-drop: n must satisfy 0 <= n <= p/2, got n = {n}, p = {p}"
        )));
    }
    guard_size("half-drop", 2 * p - n + 3)?;

    let big = p - n;
    let mut g = Graph::new(2 * p - n + 3);
    let a = 0;
    let b = 1;
    let first = 2..2 + big;
    let second = 2 + big..2 + 2 * big;
    let small = 2 + 2 * big..2 + 2 * big + n;
    let d = 2 * p - n + 2;

    g.add_edge(a, b);
    for block in [first.clone(), second.clone(), small.clone()] {
        complete_block(&mut g, block.clone());
        attach_all(&mut g, a, block.clone());
        attach_all(&mut g, b, block);
    }
    g.add_edge(a, d);

    Ok(FamilyInstance {
        graph: g,
        family_tag: "half-drop",
        params: FamilyParams {
            p,
            n: Some(n),
            s: None,
        },
        designated_vertex: d,
        expected_impropriety: p,
        expected_drop_value: n,
        constructed_basepoint: a,
        relocating_clique: second.collect(),
        notes: Vec::new(),
    }
    .check())
}

// ----------------------------------------------------------------------
// chain-drop: two captive cliques plus a chain of pendant singletons
// ----------------------------------------------------------------------

/// Builds the chain-drop graph: long intervals `A` and `D` over two captive
/// cliques of size `p − n`, plus `s` pendant singletons on `A` alone.
///
/// Layout on `2 + 2(p − n) + s` vertices:
///
/// ```text
/// 0                 A (basepoint)
/// 1                 D (second long interval, designated vertex)
/// 2..2+(p−n)        first captive clique
/// 2+(p−n)..2+2(p−n) second captive clique (escapes once D is gone)
/// remaining s       pendant singletons on A
/// ```
///
/// When `s` is `None` the chain length is calibrated: the smallest
/// `s ∈ 1..=p` for which the engine reports impropriety exactly `p` is
/// chosen, and the calibration outcome — including the measured value after
/// deleting `D` — is recorded in `notes`. An explicit `s` skips calibration.
pub fn gen_chain_drop(p: usize, n: usize, s: Option<usize>) -> Result<FamilyInstance, Error> {
    if p < 2 {
        return Err(Error::InvalidParameters(
            "chain-drop: p must be at least 2".into(),
        ));
    }
    if n >= p {
        return Err(Error::InvalidParameters(format!(
            "chain-drop: n must satisfy 0 <= n <= p - 1, got n = {n}, p = {p}"
        )));
    }
    if s == Some(0) {
        return Err(Error::InvalidParameters(
            "chain-drop: explicit chain length must be at least 1".into(),
        ));
    }

    match s {
        Some(size) => {
            let mut inst = build_chain_drop(p, n, size)?;
            inst.notes.push(format!("chain length set explicitly to {size}"));
            Ok(inst)
        }
        None => {
            let mut chosen: Option<(usize, FamilyInstance)> = None;
            for size in 1..=p {
                let inst = build_chain_drop(p, n, size)?;
                let value = engine::impropriety(&inst.graph)?.value;
                if value == p {
                    chosen = Some((size, inst));
                    break;
                }
            }
            let (size, mut inst) = match chosen {
                Some(found) => found,
                None => {
                    let mut inst = build_chain_drop(p, n, p)?;
                    inst.notes.push(format!(
                        "calibration failed: no chain length in 1..={p} reaches impropriety {p}; \
                         falling back to s = {p}"
                    ));
                    (p, inst)
                }
            };
            inst.notes
                .insert(0, format!("chain length calibrated to {size}"));
            let (dropped, _) = inst.graph.delete_vertex(inst.designated_vertex);
            let after = engine::impropriety(&dropped)?.value;
            inst.notes.push(format!(
                "impropriety after deleting the designated vertex: {after} (claimed {n})"
            ));
            Ok(inst)
        }
    }
}

fn build_chain_drop(p: usize, n: usize, s: usize) -> Result<FamilyInstance, Error> {
    let big = p - n;
    guard_size("chain-drop", 2 + 2 * big + s)?;

    let mut g = Graph::new(2 + 2 * big + s);
    let a = 0;
    let d = 1;
    let first = 2..2 + big;
    let second = 2 + big..2 + 2 * big;
    let chain = 2 + 2 * big..2 + 2 * big + s;

    g.add_edge(a, d);
    for block in [first, second.clone()] {
        complete_block(&mut g, block.clone());
        attach_all(&mut g, a, block.clone());
        attach_all(&mut g, d, block);
    }
    attach_all(&mut g, a, chain);

    Ok(FamilyInstance {
        graph: g,
        family_tag: "chain-drop",
        params: FamilyParams {
            p,
            n: Some(n),
            s: Some(s),
        },
        designated_vertex: d,
        expected_impropriety: p,
        expected_drop_value: n,
        constructed_basepoint: a,
        relocating_clique: second.collect(),
        notes: Vec::new(),
    }
    .check())
}

// ----------------------------------------------------------------------
// drop-to-seven: impropriety p >= 8, designated removal lands on 7
// ----------------------------------------------------------------------

/// Builds the drop-to-seven graph: a basepoint `A` over three guard
/// triangles, a captive clique of size `p − 6`, and a three-interval chain
/// `m1`–`m2`/`m1`–`D` wired so that exactly seven intervals stay captive
/// once `D` is removed.
///
/// Layout on `p + 7` vertices:
///
/// ```text
/// 0          A (basepoint)
/// 1,2,3      escape triangle (can leave past A's end)
/// 4,5,6      captive triangle
/// 7,8,9      second escape triangle
/// 10         m1: long middle interval over the captive clique
/// 11         m2: pendant on A and m1
/// 12         D:  pendant on A and m1 (designated vertex)
/// 13..p+7    captive clique of size p − 6, attached to A and m1
/// ```
///
/// Claim under test: impropriety `p`; deleting `D` leaves impropriety 7.
pub fn gen_drop_to_seven(p: usize) -> Result<FamilyInstance, Error> {
    if p < 8 {
        return Err(Error::InvalidParameters(format!(
            "drop-to-seven: p must be at least 8, got {p}"
        )));
    }
    guard_size("drop-to-seven", p + 7)?;

    let mut g = Graph::new(p + 7);
    let a = 0;
    let triples = [(1, 2, 3), (4, 5, 6), (7, 8, 9)];
    let (m1, m2, d) = (10, 11, 12);
    let captive = 13..p + 7;

    for (u, v, w) in triples {
        g.add_edge(u, v);
        g.add_edge(u, w);
        g.add_edge(v, w);
        g.add_edge(a, u);
        g.add_edge(a, v);
        g.add_edge(a, w);
    }
    g.add_edge(a, m1);
    g.add_edge(a, m2);
    g.add_edge(a, d);
    g.add_edge(m1, m2);
    g.add_edge(m1, d);
    complete_block(&mut g, captive.clone());
    attach_all(&mut g, a, captive.clone());
    attach_all(&mut g, m1, captive.clone());

    Ok(FamilyInstance {
        graph: g,
        family_tag: "drop-to-seven",
        params: FamilyParams {
            p,
            n: None,
            s: None,
        },
        designated_vertex: d,
        expected_impropriety: p,
        expected_drop_value: 7,
        constructed_basepoint: a,
        relocating_clique: captive.collect(),
        notes: Vec::new(),
    }
    .check())
}

// ----------------------------------------------------------------------
// primitive families
// ----------------------------------------------------------------------

/// A claw whose third leaf is thickened into a clique on `q + 1` vertices:
/// center 0, pendant leaves 1 and 2, clique `3..q+4` fully joined to the
/// center. `gen_fat_claw(0)` is the claw itself.
///
/// # Panics
/// Panics if the construction exceeds the supported vertex count.
pub fn gen_fat_claw(q: usize) -> Graph {
    let mut g = Graph::new(q + 4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    complete_block(&mut g, 3..q + 4);
    attach_all(&mut g, 0, 3..q + 4);
    g
}

/// The complete graph on `k` vertices.
///
/// # Panics
/// Panics if `k` exceeds the supported vertex count.
pub fn gen_clique(k: usize) -> Graph {
    let mut g = Graph::new(k);
    complete_block(&mut g, 0..k);
    g
}

/// The path on `k` vertices (0 – 1 – … – k−1).
///
/// # Panics
/// Panics if `k` exceeds the supported vertex count.
pub fn gen_path(k: usize) -> Graph {
    let mut g = Graph::new(k);
    for v in 1..k {
        g.add_edge(v - 1, v);
    }
    g
}

/// The star with center 0 and `k` leaves.
///
/// # Panics
/// Panics if the construction exceeds the supported vertex count.
pub fn gen_star(k: usize) -> Graph {
    let mut g = Graph::new(k + 1);
    attach_all(&mut g, 0, 1..k + 1);
    g
}

// ----------------------------------------------------------------------
