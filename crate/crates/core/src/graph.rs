//! The graph data model: directedness-tagged simple graphs with stable
//! integer vertex ids, string labels and deterministic iteration order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Stable vertex identity. Ids are dense non-negative integers handed out by
/// the owning graph; labels live in the graph, not here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Directed,
    Undirected,
}

/// Deterministic ordered set of vertex ids; the solution type of every
/// solver in the crate. Iteration is in ascending id order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = std::collections::btree_set::IntoIter<VertexId>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

/// A simple graph, directed or undirected.
///
/// Invariants kept by construction: no parallel edges, no self-loops in
/// undirected graphs, every edge endpoint present, iteration over vertices
/// and edges in ascending id order.
#[derive(Debug, Clone)]
pub struct Graph {
    kind: GraphKind,
    labels: BTreeMap<VertexId, String>,
    succ: BTreeMap<VertexId, BTreeSet<VertexId>>,
    pred: BTreeMap<VertexId, BTreeSet<VertexId>>,
    next_id: u32,
    edge_count: usize,
}

impl Graph {
    pub fn new(kind: GraphKind) -> Self {
        Graph {
            kind,
            labels: BTreeMap::new(),
            succ: BTreeMap::new(),
            pred: BTreeMap::new(),
            next_id: 0,
            edge_count: 0,
        }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn is_directed(&self) -> bool {
        self.kind == GraphKind::Directed
    }

    /// Adds a fresh vertex whose label is the decimal rendering of its id.
    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.next_id);
        let label = id.0.to_string();
        self.insert_vertex(id, label);
        id
    }

    pub fn add_vertex_labeled(&mut self, label: &str) -> VertexId {
        let id = VertexId(self.next_id);
        self.insert_vertex(id, label.to_string());
        id
    }

    /// Inserts a vertex with an explicit id (used by parsers and merges).
    /// A no-op if the id already exists; keeps the internal allocator ahead
    /// of every explicit id.
    pub fn insert_vertex(&mut self, id: VertexId, label: String) {
        if self.labels.contains_key(&id) {
            return;
        }
        self.labels.insert(id, label);
        self.succ.insert(id, BTreeSet::new());
        self.pred.insert(id, BTreeSet::new());
        if id.0 >= self.next_id {
            self.next_id = id.0 + 1;
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.labels.contains_key(&v)
    }

    pub fn label(&self, v: VertexId) -> Result<&str> {
        self.labels
            .get(&v)
            .map(|s| s.as_str())
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.labels.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Edges in ascending (u, v) order. Undirected edges are reported once
    /// with the smaller endpoint first.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (&u, nbrs) in &self.succ {
            for &v in nbrs {
                if self.is_directed() || u <= v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Adds an edge (arc for directed graphs). Re-adding is a no-op.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v && !self.is_directed() {
            return Err(Error::SelfLoopForbidden(u));
        }
        if self.has_edge(u, v) {
            return Ok(());
        }
        self.succ.get_mut(&u).unwrap().insert(v);
        self.pred.get_mut(&v).unwrap().insert(u);
        if !self.is_directed() {
            self.succ.get_mut(&v).unwrap().insert(u);
            self.pred.get_mut(&u).unwrap().insert(v);
        }
        self.edge_count += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Ok(());
        }
        self.succ.get_mut(&u).unwrap().remove(&v);
        self.pred.get_mut(&v).unwrap().remove(&u);
        if !self.is_directed() {
            self.succ.get_mut(&v).unwrap().remove(&u);
            self.pred.get_mut(&u).unwrap().remove(&v);
        }
        self.edge_count -= 1;
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        self.check_vertex(v)?;
        let out: Vec<VertexId> = self.succ[&v].iter().copied().collect();
        for w in out {
            self.remove_edge(v, w)?;
        }
        let inc: Vec<VertexId> = self.pred[&v].iter().copied().collect();
        for w in inc {
            self.remove_edge(w, v)?;
        }
        self.labels.remove(&v);
        self.succ.remove(&v);
        self.pred.remove(&v);
        Ok(())
    }

    /// True if the edge (u, v) exists; symmetric for undirected graphs.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.succ.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn successors(&self, v: VertexId) -> Result<VertexSet> {
        self.succ
            .get(&v)
            .map(|s| s.iter().copied().collect())
            .ok_or(Error::UnknownVertex(v))
    }

    pub fn predecessors(&self, v: VertexId) -> Result<VertexSet> {
        self.pred
            .get(&v)
            .map(|s| s.iter().copied().collect())
            .ok_or(Error::UnknownVertex(v))
    }

    /// Open neighborhood: successors union predecessors, excluding v itself.
    pub fn neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut n: VertexSet = self.succ[&v].iter().copied().collect();
        n.extend(self.pred[&v].iter().copied());
        n.remove(v);
        Ok(n)
    }

    /// Degree: neighbor count for undirected graphs, in-degree plus
    /// out-degree for directed graphs (a self-loop counts 2).
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        if self.is_directed() {
            Ok(self.succ[&v].len() + self.pred[&v].len())
        } else {
            Ok(self.succ[&v].len())
        }
    }

    /// Structural equality: same kind, same id/label pairs, same edge set.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.kind == other.kind && self.labels == other.labels && self.succ == other.succ
    }
}
