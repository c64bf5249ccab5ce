//! Toolbox of classical graph operations: degrees, regularity, diameter,
//! copies, subgraphs, merges, connected and strongly connected components.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Vertex of minimum degree, ties broken by smallest id.
pub fn min_degree_vertex(g: &Graph) -> Result<VertexId> {
    g.vertices()
        .min_by_key(|&v| (g.degree(v).unwrap(), v))
        .ok_or(Error::EmptyGraph)
}

/// Vertex of maximum degree, ties broken by smallest id.
pub fn max_degree_vertex(g: &Graph) -> Result<VertexId> {
    g.vertices()
        .max_by_key(|&v| (g.degree(v).unwrap(), std::cmp::Reverse(v)))
        .ok_or(Error::EmptyGraph)
}

/// True iff all vertices share one degree; vacuously true for the empty graph.
pub fn is_regular(g: &Graph) -> bool {
    let mut degrees = g.vertices().map(|v| g.degree(v).unwrap());
    match degrees.next() {
        None => true,
        Some(d) => degrees.all(|e| e == d),
    }
}

/// Unweighted distances from `source` over the undirected view of `g`.
/// Unreachable vertices are absent from the result.
pub(crate) fn bfs_distances(g: &Graph, source: VertexId) -> Vec<(VertexId, usize)> {
    let mut dist: std::collections::BTreeMap<VertexId, usize> = std::collections::BTreeMap::new();
    dist.insert(source, 0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        for w in g.neighborhood(u).unwrap().iter() {
            if !dist.contains_key(&w) {
                dist.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    dist.into_iter().collect()
}

/// Diameter of the undirected view; `None` when the graph is disconnected.
pub fn diameter(g: &Graph) -> Result<Option<usize>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.vertex_count();
    let mut diam = 0;
    for v in g.vertices() {
        let dist = bfs_distances(g, v);
        if dist.len() < n {
            return Ok(None);
        }
        diam = diam.max(dist.iter().map(|&(_, d)| d).max().unwrap());
    }
    Ok(Some(diam))
}

/// Partition of V into maximal connected sets (undirected view).
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut comps = Vec::new();
    for v in g.vertices() {
        if seen.contains(v) {
            continue;
        }
        let comp: VertexSet = bfs_distances(g, v).into_iter().map(|(w, _)| w).collect();
        seen.extend(comp.iter());
        comps.push(comp);
    }
    comps
}

/// Tarjan's strongly connected components with an explicit stack, so deep
/// graphs cannot overflow the call stack. Components are returned in a
/// deterministic order (by smallest member id).
pub fn strongly_connected_components(g: &Graph) -> Result<Vec<VertexSet>> {
    if !g.is_directed() {
        return Err(Error::WrongDirectedness { expected: "directed" });
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let index_of = |v: VertexId| ids.binary_search(&v).unwrap();
    let n = ids.len();
    let succ: Vec<Vec<usize>> = ids
        .iter()
        .map(|&v| g.successors(v).unwrap().iter().map(index_of).collect())
        .collect();

    const UNSET: usize = usize::MAX;
    let mut index = vec![UNSET; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut comps: Vec<VertexSet> = Vec::new();

    // Frame: (vertex, position in its successor list).
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < succ[v].len() {
                let w = succ[v][*i];
                *i += 1;
                if index[w] == UNSET {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&mut (p, _)) = call.last_mut() {
                    lowlink[p] = lowlink[p].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    let mut comp = VertexSet::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.insert(ids[w]);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps.sort_by_key(|c| c.iter().next());
    Ok(comps)
}

/// Structurally identical copy; mutations to the copy leave `g` untouched.
pub fn copy_graph(g: &Graph) -> Graph {
    g.clone()
}

/// Graph on `s` with exactly the edges of `g` inside `s`.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph> {
    let mut sub = Graph::new(g.kind());
    for v in s.iter() {
        sub.insert_vertex(v, g.label(v)?.to_string());
    }
    for (u, v) in g.edges() {
        if s.contains(u) && s.contains(v) {
            sub.add_edge(u, v)?;
        }
    }
    Ok(sub)
}

/// Union of vertex sets (matched by id, labels from `a` win) and edge sets.
pub fn merge_graphs(a: &Graph, b: &Graph) -> Result<Graph> {
    if a.kind() != b.kind() {
        return Err(Error::WrongDirectedness {
            expected: if a.is_directed() { "directed" } else { "undirected" },
        });
    }
    let mut out = a.clone();
    for v in b.vertices() {
        out.insert_vertex(v, b.label(v)?.to_string());
    }
    for (u, v) in b.edges() {
        out.add_edge(u, v)?;
    }
    Ok(out)
}

/// True iff the directed graph has no circuit (self-loops count).
pub fn is_acyclic(g: &Graph) -> Result<bool> {
    let comps = strongly_connected_components(g)?;
    if comps.iter().any(|c| c.len() > 1) {
        return Ok(false);
    }
    Ok(g.vertices().all(|v| !g.has_edge(v, v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::GraphKind;

    fn path(n: usize) -> Graph {
        let mut g = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (0..n).map(|_| g.add_vertex()).collect();
        for w in vs.windows(2) {
            g.add_edge(w[0], w[1]).unwrap();
        }
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (0..n).map(|_| g.add_vertex()).collect();
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(vs[i], vs[j]).unwrap();
            }
        }
        g
    }

    #[test]
    fn min_degree_examples() {
        let mut star = Graph::new(GraphKind::Undirected);
        let c = star.add_vertex();
        for _ in 0..3 {
            let leaf = star.add_vertex();
            star.add_edge(c, leaf).unwrap();
        }
        assert_eq!(min_degree_vertex(&star).unwrap(), VertexId(1));
        assert_eq!(min_degree_vertex(&complete(5)).unwrap(), VertexId(0));
        assert_eq!(min_degree_vertex(&path(4)).unwrap(), VertexId(0));
        assert_eq!(min_degree_vertex(&Graph::new(GraphKind::Undirected)), Err(Error::EmptyGraph));
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&gen::k_regular_ring(5, 1).unwrap())); // C5
        assert!(!is_regular(&path(4)));
        assert!(is_regular(&Graph::new(GraphKind::Undirected)));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&path(4)).unwrap(), Some(3));
        assert_eq!(diameter(&complete(5)).unwrap(), Some(1));
        let mut g = Graph::new(GraphKind::Undirected);
        g.add_vertex();
        g.add_vertex();
        assert_eq!(diameter(&g).unwrap(), None);
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&path(4)).len(), 1);
        let mut g = path(2);
        let u = g.add_vertex();
        let v = g.add_vertex();
        g.add_edge(u, v).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert!(connected_components(&Graph::new(GraphKind::Undirected)).is_empty());
    }

    #[test]
    fn scc_examples() {
        let mut g = Graph::new(GraphKind::Directed);
        let vs: Vec<_> = (0..3).map(|_| g.add_vertex()).collect();
        g.add_edge(vs[0], vs[1]).unwrap();
        g.add_edge(vs[1], vs[2]).unwrap();
        g.add_edge(vs[2], vs[0]).unwrap();
        assert_eq!(strongly_connected_components(&g).unwrap().len(), 1);

        let mut dag = Graph::new(GraphKind::Directed);
        let vs: Vec<_> = (0..3).map(|_| dag.add_vertex()).collect();
        dag.add_edge(vs[0], vs[1]).unwrap();
        dag.add_edge(vs[1], vs[2]).unwrap();
        assert_eq!(strongly_connected_components(&dag).unwrap().len(), 3);

        // triangle plus pendant arc
        let d = g.add_vertex();
        g.add_edge(vs[2], d).unwrap();
        let comps = strongly_connected_components(&g).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().any(|c| c.len() == 3));
        assert!(comps.iter().any(|c| c.contains(d) && c.len() == 1));

        assert!(strongly_connected_components(&path(2)).is_err());
    }

    #[test]
    fn copy_isolation() {
        let g = complete(5);
        let mut c = copy_graph(&g);
        assert!(c.same_structure(&g));
        assert_eq!(c.edge_count(), 10);
        c.remove_vertex(VertexId(0)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert!(copy_graph(&Graph::new(GraphKind::Undirected)).is_empty());
    }

    #[test]
    fn subgraph_examples() {
        let g = complete(5);
        let s: VertexSet = (0..3).map(VertexId).collect();
        let sub = induced_subgraph(&g, &s).unwrap();
        assert_eq!((sub.vertex_count(), sub.edge_count()), (3, 3));

        let p = path(4);
        let s: VertexSet = [VertexId(0), VertexId(2)].into_iter().collect();
        assert_eq!(induced_subgraph(&p, &s).unwrap().edge_count(), 0);

        assert!(induced_subgraph(&g, &VertexSet::new()).unwrap().is_empty());
        // full induced subgraph is edge-identical
        assert!(induced_subgraph(&g, &g.vertex_set()).unwrap().same_structure(&g));
    }

    #[test]
    fn merge_examples() {
        let g = complete(3);
        let empty = Graph::new(GraphKind::Undirected);
        assert!(merge_graphs(&g, &empty).unwrap().same_structure(&g));
        assert!(merge_graphs(&g, &g).unwrap().same_structure(&g));

        let mut other = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (3..6).map(|i| { other.insert_vertex(VertexId(i), i.to_string()); VertexId(i) }).collect();
        other.add_edge(vs[0], vs[1]).unwrap();
        other.add_edge(vs[1], vs[2]).unwrap();
        other.add_edge(vs[2], vs[0]).unwrap();
        let merged = merge_graphs(&g, &other).unwrap();
        assert_eq!((merged.vertex_count(), merged.edge_count()), (6, 6));

        assert!(merge_graphs(&g, &Graph::new(GraphKind::Directed)).is_err());
    }
}
