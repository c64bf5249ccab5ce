//! Directed feedback vertex set: exact solver, big-degree greedy heuristic,
//! and elementary circuit enumeration. Directed graphs only.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::ops;

/// An elementary circuit: consecutive vertices joined by arcs, the last arc
/// closing back to the first vertex, no vertex repeated. Stored in canonical
/// rotation (starting at the smallest id).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Circuit(pub Vec<VertexId>);

impl Circuit {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }
}

fn require_directed(g: &Graph) -> Result<()> {
    if g.is_directed() {
        Ok(())
    } else {
        Err(Error::WrongDirectedness { expected: "directed" })
    }
}

/// Maximum-cardinality vertex set inducing an acyclic subgraph; the
/// complement of the minimum feedback vertex set.
pub fn maximum_directed_acyclic_subset(g: &Graph) -> Result<VertexSet> {
    let fvs = minimum_directed_fvs(g)?;
    Ok(g.vertices().filter(|&v| !fvs.contains(v)).collect())
}

/// Minimum-size vertex set whose removal leaves the graph acyclic.
///
/// Self-loop vertices are forced into the solution, the rest decomposes by
/// strongly connected components, and each nontrivial component is solved
/// by iterative deepening over "branch on every vertex of a shortest
/// circuit".
pub fn minimum_directed_fvs(g: &Graph) -> Result<VertexSet> {
    require_directed(g)?;
    let mut fvs = VertexSet::new();
    let mut work = g.clone();
    for v in g.vertices() {
        if g.has_edge(v, v) {
            fvs.insert(v);
            work.remove_vertex(v)?;
        }
    }
    for comp in ops::strongly_connected_components(&work)? {
        if comp.len() < 2 {
            continue;
        }
        let sub = ops::induced_subgraph(&work, &comp)?;
        let alive: BTreeSet<VertexId> = comp.iter().collect();
        for k in 0..=comp.len() {
            if let Some(hits) = fvs_branch(&sub, &alive, k) {
                fvs.extend(hits);
                break;
            }
        }
    }
    Ok(fvs)
}

fn fvs_branch(g: &Graph, alive: &BTreeSet<VertexId>, budget: usize) -> Option<VertexSet> {
    match shortest_circuit(g, alive) {
        None => Some(VertexSet::new()),
        Some(cycle) => {
            if budget == 0 {
                return None;
            }
            for v in cycle {
                let mut rest = alive.clone();
                rest.remove(&v);
                if let Some(mut hits) = fvs_branch(g, &rest, budget - 1) {
                    hits.insert(v);
                    return Some(hits);
                }
            }
            None
        }
    }
}

/// A shortest circuit inside the induced subgraph on `alive`, found by BFS
/// from each vertex back to itself. Ties resolve to the smallest start id.
fn shortest_circuit(g: &Graph, alive: &BTreeSet<VertexId>) -> Option<Vec<VertexId>> {
    let mut best: Option<Vec<VertexId>> = None;
    for &s in alive {
        if g.has_edge(s, s) {
            return Some(vec![s]);
        }
        // BFS over arcs, tracking parents, until an arc closes back to s
        let mut parent: std::collections::BTreeMap<VertexId, VertexId> =
            std::collections::BTreeMap::new();
        let mut queue = std::collections::VecDeque::from([s]);
        let mut found = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for w in g.successors(u).unwrap().iter().filter(|w| alive.contains(w)) {
                if w == s {
                    found = Some(u);
                    break 'bfs;
                }
                if w != s && !parent.contains_key(&w) {
                    parent.insert(w, u);
                    queue.push_back(w);
                }
            }
        }
        if let Some(mut u) = found {
            let mut path = vec![];
            while u != s {
                path.push(u);
                u = parent[&u];
            }
            path.push(s);
            path.reverse();
            if best.as_ref().map_or(true, |b| path.len() < b.len()) {
                best = Some(path);
            }
        }
    }
    best
}

/// A feedback vertex set built by removing the current highest-degree
/// vertex (ties to the smallest id) until the residual graph is acyclic.
/// Not necessarily minimum.
pub fn greedy_min_fvs(g: &Graph) -> Result<VertexSet> {
    require_directed(g)?;
    let mut work = g.clone();
    let mut fvs = VertexSet::new();
    while !ops::is_acyclic(&work)? {
        let v = ops::max_degree_vertex(&work)?;
        fvs.insert(v);
        work.remove_vertex(v)?;
    }
    Ok(fvs)
}

/// Enumerates every elementary circuit exactly once, in canonical rotation.
/// Self-loops are reported as length-1 circuits.
pub fn enum_all_circuits(g: &Graph) -> Result<Vec<Circuit>> {
    let (circuits, _) = enum_circuits_capped(g, usize::MAX)?;
    Ok(circuits)
}

/// Capped variant: stops after `cap` circuits and reports whether the
/// enumeration was truncated. Circuit counts grow exponentially, so callers
/// on unknown inputs should prefer this entry point.
pub fn enum_circuits_capped(g: &Graph, cap: usize) -> Result<(Vec<Circuit>, bool)> {
    require_directed(g)?;
    let ids: Vec<VertexId> = g.vertices().collect();
    let index_of = |v: VertexId| ids.binary_search(&v).unwrap();
    let n = ids.len();
    let succ: Vec<Vec<usize>> = ids
        .iter()
        .map(|&v| g.successors(v).unwrap().iter().map(index_of).collect())
        .collect();

    let mut circuits: Vec<Circuit> = Vec::new();
    for (v, &id) in ids.iter().enumerate() {
        if succ[v].contains(&v) {
            circuits.push(Circuit(vec![id]));
            if circuits.len() >= cap {
                return Ok((circuits, true));
            }
        }
    }

    // Elementary circuits with blocked-set bookkeeping: for each root s in
    // ascending order, search only vertices >= s, so every circuit is found
    // exactly once starting from its smallest vertex.
    struct Search<'a> {
        succ: &'a [Vec<usize>],
        ids: &'a [VertexId],
        blocked: Vec<bool>,
        block_list: Vec<Vec<usize>>,
        stack: Vec<usize>,
        root: usize,
        circuits: Vec<Circuit>,
        cap: usize,
        truncated: bool,
    }

    impl Search<'_> {
        fn unblock(&mut self, v: usize) {
            self.blocked[v] = false;
            while let Some(w) = self.block_list[v].pop() {
                if self.blocked[w] {
                    self.unblock(w);
                }
            }
        }

        fn circuit(&mut self, v: usize) -> bool {
            let mut closed = false;
            self.stack.push(v);
            self.blocked[v] = true;
            for i in 0..self.succ[v].len() {
                let w = self.succ[v][i];
                if w < self.root || w == v {
                    continue;
                }
                if w == self.root {
                    if self.circuits.len() < self.cap {
                        self.circuits
                            .push(Circuit(self.stack.iter().map(|&x| self.ids[x]).collect()));
                    } else {
                        self.truncated = true;
                    }
                    closed = true;
                } else if !self.blocked[w] && self.circuit(w) {
                    closed = true;
                }
                if self.truncated {
                    break;
                }
            }
            if closed {
                self.unblock(v);
            } else {
                for i in 0..self.succ[v].len() {
                    let w = self.succ[v][i];
                    if w < self.root || w == v {
                        continue;
                    }
                    if !self.block_list[w].contains(&v) {
                        self.block_list[w].push(v);
                    }
                }
            }
            self.stack.pop();
            closed
        }
    }

    let mut search = Search {
        succ: &succ,
        ids: &ids,
        blocked: vec![false; n],
        block_list: vec![Vec::new(); n],
        stack: Vec::new(),
        root: 0,
        circuits,
        cap,
        truncated: false,
    };
    for s in 0..n {
        search.root = s;
        search.blocked.iter_mut().for_each(|b| *b = false);
        search.block_list.iter_mut().for_each(|l| l.clear());
        search.circuit(s);
        if search.truncated {
            break;
        }
    }
    let mut circuits = search.circuits;
    circuits.sort();
    Ok((circuits, search.truncated))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    fn digraph(n: usize, arcs: &[(usize, usize)]) -> (Graph, Vec<VertexId>) {
        let mut g = Graph::new(GraphKind::Directed);
        let vs: Vec<_> = (0..n).map(|_| g.add_vertex()).collect();
        for &(u, v) in arcs {
            g.add_edge(vs[u], vs[v]).unwrap();
        }
        (g, vs)
    }

    fn complete_digraph(n: usize) -> Graph {
        let mut g = Graph::new(GraphKind::Directed);
        let vs: Vec<_> = (0..n).map(|_| g.add_vertex()).collect();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    g.add_edge(vs[i], vs[j]).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn acyclic_subset_examples() {
        let (dag, _) = digraph(3, &[(0, 1), (1, 2)]);
        assert_eq!(maximum_directed_acyclic_subset(&dag).unwrap().len(), 3);

        let (tri, _) = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(maximum_directed_acyclic_subset(&tri).unwrap().len(), 2);

        assert_eq!(maximum_directed_acyclic_subset(&complete_digraph(3)).unwrap().len(), 1);
    }

    #[test]
    fn min_fvs_examples() {
        let (dag, _) = digraph(3, &[(0, 1), (1, 2)]);
        assert!(minimum_directed_fvs(&dag).unwrap().is_empty());

        let (two_triangles, _) =
            digraph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(minimum_directed_fvs(&two_triangles).unwrap().len(), 2);

        let (mut looped, vs) = digraph(2, &[(0, 1)]);
        looped.add_edge(vs[1], vs[1]).unwrap();
        let fvs = minimum_directed_fvs(&looped).unwrap();
        assert!(fvs.contains(vs[1]));
        assert_eq!(fvs.len(), 1);

        assert!(minimum_directed_fvs(&Graph::new(GraphKind::Undirected)).is_err());
    }

    #[test]
    fn complementarity() {
        let g = complete_digraph(4);
        let acyc = maximum_directed_acyclic_subset(&g).unwrap();
        let fvs = minimum_directed_fvs(&g).unwrap();
        assert_eq!(acyc.len() + fvs.len(), 4);
    }

    #[test]
    fn greedy_examples() {
        let (dag, _) = digraph(3, &[(0, 1), (1, 2)]);
        assert!(greedy_min_fvs(&dag).unwrap().is_empty());

        let (tri, _) = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(greedy_min_fvs(&tri).unwrap().len(), 1);

        // residual graph must be acyclic
        let g = complete_digraph(4);
        let fvs = greedy_min_fvs(&g).unwrap();
        let rest: VertexSet = g.vertices().filter(|v| !fvs.contains(*v)).collect();
        let sub = ops::induced_subgraph(&g, &rest).unwrap();
        assert!(ops::is_acyclic(&sub).unwrap());
        assert!(fvs.len() >= minimum_directed_fvs(&g).unwrap().len());
    }

    #[test]
    fn circuit_enumeration() {
        let (tri, vs) = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        let circuits = enum_all_circuits(&tri).unwrap();
        assert_eq!(circuits, vec![Circuit(vec![vs[0], vs[1], vs[2]])]);

        let (dag, _) = digraph(3, &[(0, 1), (1, 2)]);
        assert!(enum_all_circuits(&dag).unwrap().is_empty());

        // complete digraph on 3 vertices: three 2-cycles, two 3-cycles
        let circuits = enum_all_circuits(&complete_digraph(3)).unwrap();
        assert_eq!(circuits.len(), 5);
        assert_eq!(circuits.iter().filter(|c| c.len() == 2).count(), 3);
        assert_eq!(circuits.iter().filter(|c| c.len() == 3).count(), 2);
    }

    #[test]
    fn self_loop_circuit() {
        let (mut g, vs) = digraph(2, &[(0, 1)]);
        g.add_edge(vs[0], vs[0]).unwrap();
        let circuits = enum_all_circuits(&g).unwrap();
        assert_eq!(circuits, vec![Circuit(vec![vs[0]])]);
    }

    #[test]
    fn complete_digraph_closed_form() {
        // sum over k of C(4,k) * (k-1)! = 20 circuits for n = 4
        let circuits = enum_all_circuits(&complete_digraph(4)).unwrap();
        assert_eq!(circuits.len(), 20);
        // canonical rotation, exactly once
        let unique: BTreeSet<_> = circuits.iter().collect();
        assert_eq!(unique.len(), 20);
        for c in &circuits {
            assert_eq!(c.0[0], *c.0.iter().min().unwrap());
        }
    }

    #[test]
    fn cap_truncates() {
        let (circuits, truncated) = enum_circuits_capped(&complete_digraph(4), 5).unwrap();
        assert_eq!(circuits.len(), 5);
        assert!(truncated);
        let (_, truncated) = enum_circuits_capped(&complete_digraph(4), 100).unwrap();
        assert!(!truncated);
    }
}
