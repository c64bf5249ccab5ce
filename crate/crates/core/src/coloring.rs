//! Chromatic number and proper colorings of undirected graphs.
//!
//! The exact search recurses over maximal independent sets in polynomial
//! space: some color class of an optimal coloring that contains the lowest
//! remaining vertex can be assumed maximal, so only maximal independent
//! sets through that vertex are branched on.

use crate::bitgraph::BitGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Disjoint vertex classes covering all vertices, each class independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPartition {
    pub classes: Vec<VertexSet>,
}

impl ColorPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Checks the type invariants against a graph: classes disjoint, union
    /// covering, every class independent.
    pub fn is_valid_for(&self, g: &Graph) -> Result<bool> {
        let mut seen = VertexSet::new();
        for class in &self.classes {
            for v in class.iter() {
                if !seen.insert(v) {
                    return Ok(false);
                }
            }
            if !crate::mis::is_independent_set(g, class)? {
                return Ok(false);
            }
        }
        Ok(seen.len() == g.vertex_count())
    }
}

fn require_undirected(g: &Graph) -> Result<()> {
    if g.is_directed() {
        Err(Error::WrongDirectedness { expected: "undirected" })
    } else {
        Ok(())
    }
}

/// Minimum number of colors in a proper coloring; 0 for the empty graph.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(color_search(g)?.len())
}

/// A proper coloring with exactly `chromatic_number(g)` classes.
pub fn graph_coloring(g: &Graph) -> Result<ColorPartition> {
    let bg = BitGraph::from_graph(g)?;
    let classes = color_search(g)?
        .into_iter()
        .map(|m| bg.to_vertex_set(m))
        .collect();
    Ok(ColorPartition { classes })
}

fn color_search(g: &Graph) -> Result<Vec<u128>> {
    require_undirected(g)?;
    let bg = BitGraph::from_graph(g)?;
    if bg.n == 0 {
        return Ok(Vec::new());
    }
    // greedy sequential coloring seeds the upper bound
    let mut best: Vec<u128> = Vec::new();
    for v in 0..bg.n {
        match best.iter_mut().find(|class| **class & bg.adj[v] == 0) {
            Some(class) => *class |= 1 << v,
            None => best.push(1 << v),
        }
    }
    let mut current: Vec<u128> = Vec::new();
    branch(&bg, bg.full(), &mut current, &mut best);
    Ok(best)
}

fn branch(bg: &BitGraph, uncolored: u128, current: &mut Vec<u128>, best: &mut Vec<u128>) {
    if uncolored == 0 {
        if current.len() < best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + 1 >= best.len() {
        return; // even one more class cannot beat the incumbent
    }
    let pivot = uncolored.trailing_zeros() as usize;
    let mut classes = Vec::new();
    maximal_sets_through(bg, pivot, uncolored & !bg.closed(pivot), 1 << pivot, &mut classes);
    for class in classes {
        current.push(class);
        branch(bg, uncolored & !class, current, best);
        current.pop();
    }
}

/// All maximal (within `avail | taken`) independent sets consisting of
/// `taken` plus vertices from `avail`.
fn maximal_sets_through(bg: &BitGraph, _pivot: usize, avail: u128, taken: u128, out: &mut Vec<u128>) {
    if avail == 0 {
        out.push(taken);
        return;
    }
    let v = avail.trailing_zeros() as usize;
    // branch: v in the set
    maximal_sets_through(bg, _pivot, avail & !bg.closed(v), taken | (1 << v), out);
    // v out of the set: only sound if some neighbor of v can still
    // dominate it, otherwise the set would not be maximal
    let rest = avail & !(1 << v);
    if bg.adj[v] & rest != 0 {
        // sets from this branch that end up with no neighbor of v are
        // filtered by re-checking domination at the leaves
        let mut candidates = Vec::new();
        maximal_sets_through(bg, _pivot, rest, taken, &mut candidates);
        out.extend(candidates.into_iter().filter(|s| bg.adj[v] & s != 0));
    }
}

/// Greedy coloring that repeatedly extracts an exact maximum independent
/// set of the residual graph. Class count is at least the chromatic number.
pub fn greedy_graph_coloring(g: &Graph) -> Result<ColorPartition> {
    require_undirected(g)?;
    let mut residual = g.clone();
    let mut classes = Vec::new();
    while !residual.is_empty() {
        let class = crate::mis::mis_moon_moser(&residual, crate::mis::MoonMoserMode::Recursive)?;
        for v in class.iter() {
            residual.remove_vertex(v)?;
        }
        classes.push(class);
    }
    Ok(ColorPartition { classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::GraphKind;

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

    fn k33() -> Graph {
        let mut g = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (0..6).map(|_| g.add_vertex()).collect();
        for i in 0..3 {
            for j in 3..6 {
                g.add_edge(vs[i], vs[j]).unwrap();
            }
        }
        g
    }

    #[test]
    fn chromatic_values() {
        assert_eq!(chromatic_number(&complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&k33()).unwrap(), 2);
        assert_eq!(chromatic_number(&gen::k_regular_ring(5, 1).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::new(GraphKind::Undirected)).unwrap(), 0);
        assert_eq!(chromatic_number(&complete(1)).unwrap(), 1);

        let mut listing = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (0..4).map(|_| listing.add_vertex()).collect();
        for (i, j) in [(0, 1), (1, 2), (1, 3), (2, 3)] {
            listing.add_edge(vs[i], vs[j]).unwrap();
        }
        assert_eq!(chromatic_number(&listing).unwrap(), 3);

        assert!(chromatic_number(&Graph::new(GraphKind::Directed)).is_err());
    }

    #[test]
    fn partitions_are_valid_and_optimal() {
        for g in [complete(5), k33(), gen::k_regular_ring(5, 1).unwrap(), gen::grid_2d(3, 3)] {
            let p = graph_coloring(&g).unwrap();
            assert!(p.is_valid_for(&g).unwrap());
            assert_eq!(p.class_count(), chromatic_number(&g).unwrap());
        }
        let edgeless = {
            let mut g = Graph::new(GraphKind::Undirected);
            for _ in 0..4 {
                g.add_vertex();
            }
            g
        };
        let p = graph_coloring(&edgeless).unwrap();
        assert_eq!(p.class_count(), 1);
        assert_eq!(p.classes[0].len(), 4);
    }

    #[test]
    fn greedy_partition() {
        let p = greedy_graph_coloring(&complete(5)).unwrap();
        assert_eq!(p.class_count(), 5);
        assert!(p.classes.iter().all(|c| c.len() == 1));

        let p = greedy_graph_coloring(&k33()).unwrap();
        assert!(p.is_valid_for(&k33()).unwrap());
        assert_eq!(p.class_count(), 2);

        let mut p4 = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (0..4).map(|_| p4.add_vertex()).collect();
        for w in vs.windows(2) {
            p4.add_edge(w[0], w[1]).unwrap();
        }
        let p = greedy_graph_coloring(&p4).unwrap();
        assert!(p.is_valid_for(&p4).unwrap());
        assert_eq!(p.class_count(), 2);
    }

    #[test]
    fn degree_bound() {
        for g in [complete(4), k33(), gen::grid_2d(2, 3)] {
            let chi = chromatic_number(&g).unwrap();
            let max_deg = g.vertices().map(|v| g.degree(v).unwrap()).max().unwrap();
            assert!(chi <= max_deg + 1);
        }
    }
}
