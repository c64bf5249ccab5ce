//! Internal bitset view of a graph for the exponential-time solvers.
//! Vertices are re-indexed 0..n in ascending id order; a vertex subset is a
//! u128 mask, which caps these solvers at 128 vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    pub n: usize,
    /// Undirected adjacency masks, self-bit never set.
    pub adj: Vec<u128>,
    pub ids: Vec<VertexId>,
}

impl BitGraph {
    /// Underlying undirected view of `g` (directed arcs become edges,
    /// self-loops are dropped).
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > 128 {
            return Err(Error::TooLarge(n));
        }
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: VertexId| ids.binary_search(&v).unwrap();
        let mut adj = vec![0u128; n];
        for (u, v) in g.edges() {
            if u == v {
                continue;
            }
            let (i, j) = (index(u), index(v));
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(BitGraph { n, adj, ids })
    }

    pub fn full(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    pub fn closed(&self, v: usize) -> u128 {
        self.adj[v] | (1 << v)
    }

    pub fn degree_in(&self, set: u128, v: usize) -> u32 {
        (self.adj[v] & set).count_ones()
    }

    /// True if no edge joins two vertices of `set`.
    pub fn independent(&self, set: u128) -> bool {
        iter_bits(set).all(|v| self.adj[v] & set == 0)
    }

    /// Lowest-index vertex of minimum degree within `set`.
    pub fn min_degree_vertex(&self, set: u128) -> Option<usize> {
        iter_bits(set).min_by_key(|&v| self.degree_in(set, v))
    }

    /// Lowest-index vertex of maximum degree within `set`.
    pub fn max_degree_vertex(&self, set: u128) -> Option<usize> {
        iter_bits(set).max_by_key(|&v| (self.degree_in(set, v), usize::MAX - v))
    }

    /// Number of edges inside `set`.
    pub fn edges_in(&self, set: u128) -> u32 {
        iter_bits(set).map(|v| (self.adj[v] & set).count_ones()).sum::<u32>() / 2
    }

    pub fn to_vertex_set(&self, mask: u128) -> VertexSet {
        iter_bits(mask).map(|i| self.ids[i]).collect()
    }
}

/// Iterates set bit positions in ascending order.
pub(crate) fn iter_bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
