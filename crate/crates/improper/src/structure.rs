//! Structural vocabulary on top of the engine: basepoint witnesses, local
//! components, side components, and exterior classification.
//!
//! All four notions are *operational*: they are defined in terms of the
//! representations this crate enumerates, not borrowed from elsewhere.
//!
//! - A **basepoint witness** is a vertex that attains the maximum
//!   containment count in at least one minimum-impropriety representation.
//!   Reports say "witness" deliberately: the value concentrates on these
//!   vertices, but nothing here claims uniqueness.
//! - The **local components** of a vertex `b` are the connected components
//!   of the graph with `b` deleted, in original vertex ids.
//! - In one representation, a local component is a **side component** of
//!   `b` when some member's interval has an endpoint outside `b`'s interval.
//! - A local component is **exterior** for `b` when there EXISTS a valid
//!   representation in which it is a side component. This existential
//!   reading is the only representation-free one available operationally;
//!   it is decided exactly, because the canonical placement of an ordering
//!   avoids every avoidable nesting at once — if a component can escape
//!   under some ordering, it escapes in that ordering's canonical placement.
//!
//! For a disconnected graph, a minimum representation lays every connected
//! component within the global value while some component attains it, so
//! witnesses may also sit in a low component forced up to the global value.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::engine::{
    self, for_each_consecutive_ordering, realize_ranges, IntervalRepresentation,
};
use crate::error::Error;
use crate::graph::{maximal_cliques, Graph};

/// Wording attached to every report that uses the operational definitions.
pub const OPERATIONAL_NOTE: &str = "basepoint witnesses are argmax vertices of \
     minimum-impropriety representations; 'exterior' quantifies existentially \
     over all valid representations";

// ----------------------------------------------------------------------
// report types
// ----------------------------------------------------------------------

/// Local components of one basepoint witness, with exterior flags.
#[derive(Debug, Clone, Serialize)]
pub struct BasepointView {
    /// The basepoint the view is anchored at.
    pub basepoint: usize,
    /// Connected components of the graph minus the basepoint, in original
    /// vertex ids, sorted by smallest member.
    pub local_components: Vec<Vec<usize>>,
    /// `exterior[i]` is true when `local_components[i]` is a side component
    /// in at least one valid representation.
    pub exterior: Vec<bool>,
}

/// Full structural report for a graph.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    /// Exact impropriety of the graph.
    pub impropriety: usize,
    /// Every vertex that attains the maximum containment count in some
    /// minimum-impropriety representation, ascending.
    pub basepoint_witnesses: Vec<usize>,
    /// One view per witness, same order.
    pub views: Vec<BasepointView>,
    /// Operational-definition disclaimer, embedded in serialized output.
    pub note: &'static str,
}

/// Side components of a basepoint in one concrete representation.
#[derive(Debug, Clone, Serialize)]
pub struct SideComponentView {
    /// The basepoint the view is anchored at.
    pub basepoint: usize,
    /// Connected components of the graph minus the basepoint.
    pub local_components: Vec<Vec<usize>>,
    /// Indices into `local_components` of the components with a member
    /// interval reaching outside the basepoint's interval.
    pub side_components: Vec<usize>,
}

// ----------------------------------------------------------------------
// operations
// ----------------------------------------------------------------------

/// Every vertex that attains the maximum containment count in at least one
/// minimum-impropriety representation.
///
/// Errors with [`Error::EmptyForProper`] when the graph is proper (no
/// containment anywhere, so no vertex concentrates the value) and
/// [`Error::NotIntervalGraph`] when there is no representation at all.
pub fn basepoint_witnesses(g: &Graph) -> Result<Vec<usize>, Error> {
    let value = engine::impropriety(g)?.value;
    if value == 0 {
        return Err(Error::EmptyForProper);
    }

    let mut witnesses = Vec::new();
    for mask in g.component_masks() {
        let (sub, map) = g.induced_subgraph(mask);
        let cliques = maximal_cliques(&sub);
        let mut seen = vec![false; sub.vertex_count()];
        for_each_consecutive_ordering(&sub, &cliques, |_, ranges| {
            let profile = realize_ranges(ranges).nested_inside_profile();
            if profile.max == value {
                for (v, &count) in profile.per_vertex.iter().enumerate() {
                    if count == value {
                        seen[v] = true;
                    }
                }
            }
            ControlFlow::Continue(())
        });
        witnesses.extend(
            seen.iter()
                .enumerate()
                .filter(|&(_, &s)| s)
                .map(|(v, _)| map[v]),
        );
    }
    witnesses.sort_unstable();
    debug_assert!(!witnesses.is_empty());
    Ok(witnesses)
}

/// Connected components of the graph with `b` deleted, in original ids,
/// sorted by smallest member.
pub fn local_components(g: &Graph, b: usize) -> Result<Vec<Vec<usize>>, Error> {
    if b >= g.vertex_count() {
        return Err(Error::InvalidParameters(format!(
            "vertex {b} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    let (rest, map) = g.delete_vertex(b);
    let comps: Vec<Vec<usize>> = rest
        .connected_components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| map[v]).collect())
        .collect();
    debug_assert_eq!(
        comps.iter().map(Vec::len).sum::<usize>(),
        g.vertex_count() - 1,
        "local components must partition the other vertices"
    );
    Ok(comps)
}

/// Flags the local components of `b` that reach outside `b`'s interval in
/// the given representation.
pub fn side_components(
    rep: &IntervalRepresentation,
    g: &Graph,
    b: usize,
) -> Result<SideComponentView, Error> {
    rep.validate(g)?;
    let comps = local_components(g, b)?;
    let (bl, br) = rep.interval(b);
    let side: Vec<usize> = comps
        .iter()
        .enumerate()
        .filter(|(_, comp)| {
            comp.iter().any(|&u| {
                let (ul, ur) = rep.interval(u);
                !(bl < ul && ur < br)
            })
        })
        .map(|(i, _)| i)
        .collect();
    Ok(SideComponentView {
        basepoint: b,
        local_components: comps,
        side_components: side,
    })
}

/// Classifies every local component of `b` as exterior (can be a side
/// component in some valid representation) or not.
///
/// Components in a different connected component of the graph are exterior
/// outright: they can always be laid entirely outside `b`'s interval.
pub fn exterior_components(g: &Graph, b: usize) -> Result<BasepointView, Error> {
    engine::check_interval(g)?;
    let comps = local_components(g, b)?;

    let home = g
        .component_masks()
        .into_iter()
        .find(|mask| mask & (1u64 << b) != 0)
        .expect("every vertex lies in a component");
    let (sub, map) = g.induced_subgraph(home);
    let mut to_sub = vec![usize::MAX; g.vertex_count()];
    for (new, &old) in map.iter().enumerate() {
        to_sub[old] = new;
    }
    let b_sub = to_sub[b];

    let mut exterior: Vec<bool> = comps
        .iter()
        .map(|comp| comp.iter().any(|&u| home & (1u64 << u) == 0))
        .collect();

    // Components sharing b's connected component escape only by reaching
    // past an end of b's interval in some ordering's canonical placement.
    let shared: Vec<usize> = (0..comps.len()).filter(|&i| !exterior[i]).collect();
    if !shared.is_empty() {
        let cliques = maximal_cliques(&sub);
        let mut remaining = shared.len();
        for_each_consecutive_ordering(&sub, &cliques, |_, ranges| {
            let rep = realize_ranges(ranges);
            let (bl, br) = rep.interval(b_sub);
            for &i in &shared {
                if exterior[i] {
                    continue;
                }
                let escapes = comps[i].iter().any(|&u| {
                    let (ul, ur) = rep.interval(to_sub[u]);
                    !(bl < ul && ur < br)
                });
                if escapes {
                    exterior[i] = true;
                    remaining -= 1;
                }
            }
            if remaining == 0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    }

    Ok(BasepointView {
        basepoint: b,
        local_components: comps,
        exterior,
    })
}

/// Witnesses plus a per-witness exterior classification.
pub fn structure_report(g: &Graph) -> Result<StructureReport, Error> {
    let value = engine::impropriety(g)?.value;
    if value == 0 {
        return Err(Error::EmptyForProper);
    }
    let witnesses = basepoint_witnesses(g)?;
    let views = witnesses
        .iter()
        .map(|&b| exterior_components(g, b))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StructureReport {
        impropriety: value,
        basepoint_witnesses: witnesses,
        views,
        note: OPERATIONAL_NOTE,
    })
}

// ----------------------------------------------------------------------
