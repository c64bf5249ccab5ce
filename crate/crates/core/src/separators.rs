//! Enumeration of minimal ab-separators and of all minimal separators of an
//! undirected graph.
//!
//! Generation scheme: seed with the neighborhoods of the components of
//! g − N[a] that separate a from b, then saturate — for each known
//! separator S and each x in S, the neighborhoods of the components of
//! g − (S ∪ N[x]) that still separate a from b are separators too. Repeat
//! until no new set appears. Every candidate is double-checked against the
//! separation and minimality predicates before being emitted.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

fn require_undirected(g: &Graph) -> Result<()> {
    if g.is_directed() {
        Err(Error::WrongDirectedness { expected: "undirected" })
    } else {
        Ok(())
    }
}

/// Connected components of g with the vertices of `removed` deleted.
fn components_without(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut comps = Vec::new();
    for start in g.vertices() {
        if removed.contains(start) || seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::new();
        let mut queue = vec![start];
        comp.insert(start);
        while let Some(u) = queue.pop() {
            for w in g.neighborhood(u).unwrap().iter() {
                if !removed.contains(w) && comp.insert(w) {
                    queue.push(w);
                }
            }
        }
        seen.extend(comp.iter());
        comps.push(comp);
    }
    comps
}

/// Neighborhood of a component: vertices outside it adjacent to it.
fn component_neighborhood(g: &Graph, comp: &VertexSet) -> VertexSet {
    let mut n = VertexSet::new();
    for v in comp.iter() {
        n.extend(g.neighborhood(v).unwrap().iter().filter(|w| !comp.contains(*w)));
    }
    n
}

/// True iff removing `s` puts a and b in different components.
pub fn separates(g: &Graph, a: VertexId, b: VertexId, s: &VertexSet) -> bool {
    if s.contains(a) || s.contains(b) {
        return false;
    }
    let mut seen = VertexSet::new();
    seen.insert(a);
    let mut queue = vec![a];
    while let Some(u) = queue.pop() {
        for w in g.neighborhood(u).unwrap().iter() {
            if w == b {
                return false;
            }
            if !s.contains(w) && seen.insert(w) {
                queue.push(w);
            }
        }
    }
    true
}

/// True iff `s` separates a from b and no proper subset does. The empty set
/// is never considered a separator, so already-disconnected pairs have none.
pub fn is_minimal_ab_separator(g: &Graph, a: VertexId, b: VertexId, s: &VertexSet) -> bool {
    if s.is_empty() || !separates(g, a, b, s) {
        return false;
    }
    s.iter().all(|x| {
        let smaller: VertexSet = s.iter().filter(|&y| y != x).collect();
        !separates(g, a, b, &smaller)
    })
}

/// All minimal ab-separators, sorted by size then lexicographically by
/// member ids. Adjacent or already-disconnected endpoints yield an empty
/// collection.
pub fn get_ab_separators(g: &Graph, a: VertexId, b: VertexId) -> Result<Vec<VertexSet>> {
    require_undirected(g)?;
    if !g.contains(a) {
        return Err(Error::UnknownVertex(a));
    }
    if !g.contains(b) {
        return Err(Error::UnknownVertex(b));
    }
    if a == b {
        return Err(Error::SameVertex(a));
    }
    if g.has_edge(a, b) {
        return Ok(Vec::new());
    }

    let mut known: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue: Vec<VertexSet> = Vec::new();
    let mut closed_a = g.neighborhood(a)?;
    closed_a.insert(a);
    for comp in components_without(g, &closed_a) {
        let s = component_neighborhood(g, &comp);
        if is_minimal_ab_separator(g, a, b, &s) && known.insert(s.clone()) {
            queue.push(s);
        }
    }
    while let Some(s) = queue.pop() {
        for x in s.iter() {
            let mut removed = s.clone();
            let mut closed_x = g.neighborhood(x)?;
            closed_x.insert(x);
            removed.extend(closed_x.iter());
            for comp in components_without(g, &removed) {
                let t = component_neighborhood(g, &comp);
                if is_minimal_ab_separator(g, a, b, &t) && known.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
    }
    let mut out: Vec<VertexSet> = known.into_iter().collect();
    out.sort_by(|x, y| {
        x.len()
            .cmp(&y.len())
            .then_with(|| x.iter().collect::<Vec<_>>().cmp(&y.iter().collect()))
    });
    Ok(out)
}

/// Union of `get_ab_separators` over all vertex pairs, deduplicated, in the
/// same canonical order.
pub fn get_all_minimal_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    require_undirected(g)?;
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut known: BTreeSet<VertexSet> = BTreeSet::new();
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            known.extend(get_ab_separators(g, a, b)?);
        }
    }
    let mut out: Vec<VertexSet> = known.into_iter().collect();
    out.sort_by(|x, y| {
        x.len()
            .cmp(&y.len())
            .then_with(|| x.iter().collect::<Vec<_>>().cmp(&y.iter().collect()))
    });
    Ok(out)
}
