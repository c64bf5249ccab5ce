//! Distance-shell portrait of an undirected graph: entry [l][k] counts the
//! vertices that have exactly k vertices at shortest-path distance l.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops::bfs_distances;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BMatrix {
    /// rows[l][k] for l = 0..=L (maximum eccentricity), k = 0..n-1.
    /// Each row sums to n; vertices whose l-shell is empty land in k = 0.
    pub rows: Vec<Vec<u64>>,
}

impl BMatrix {
    pub fn depth(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn get(&self, l: usize, k: usize) -> u64 {
        self.rows.get(l).and_then(|row| row.get(k)).copied().unwrap_or(0)
    }

    /// CSV rendering: header `l,k,count`, rows in (l, k) order, zero
    /// entries omitted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,k,count\n");
        for (l, row) in self.rows.iter().enumerate() {
            for (k, &count) in row.iter().enumerate() {
                if count > 0 {
                    out.push_str(&format!("{l},{k},{count}\n"));
                }
            }
        }
        out
    }
}

/// Builds the shell-count matrix by BFS from every vertex. Unreachable
/// vertices never contribute to any shell.
pub fn b_matrix(g: &Graph) -> Result<BMatrix> {
    if g.is_directed() {
        return Err(Error::WrongDirectedness { expected: "undirected" });
    }
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.vertex_count();
    // shell sizes per vertex: shells[v][l] = #vertices at distance l
    let shells: Vec<Vec<u64>> = g
        .vertices()
        .map(|v| {
            let mut counts: Vec<u64> = Vec::new();
            for (_, d) in bfs_distances(g, v) {
                if counts.len() <= d {
                    counts.resize(d + 1, 0);
                }
                counts[d] += 1;
            }
            counts
        })
        .collect();
    let depth = shells.iter().map(|s| s.len() - 1).max().unwrap();
    let mut rows = vec![vec![0u64; n + 1]; depth + 1];
    for shell in &shells {
        for (l, row) in rows.iter_mut().enumerate() {
            let k = shell.get(l).copied().unwrap_or(0) as usize;
            row[k] += 1;
        }
    }
    Ok(BMatrix { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    #[test]
    fn p3_by_hand() {
        let mut g = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (0..3).map(|_| g.add_vertex()).collect();
        g.add_edge(vs[0], vs[1]).unwrap();
        g.add_edge(vs[1], vs[2]).unwrap();
        let m = b_matrix(&g).unwrap();
        assert_eq!(m.depth(), 2);
        assert_eq!(m.get(0, 1), 3);
        assert_eq!(m.get(1, 1), 2);
        assert_eq!(m.get(1, 2), 1);
        assert_eq!(m.get(2, 0), 1);
        assert_eq!(m.get(2, 1), 2);
    }

    #[test]
    fn k4_single_shell() {
        let mut g = Graph::new(GraphKind::Undirected);
        let vs: Vec<_> = (0..4).map(|_| g.add_vertex()).collect();
        for i in 0..4 {
            for j in i + 1..4 {
                g.add_edge(vs[i], vs[j]).unwrap();
            }
        }
        let m = b_matrix(&g).unwrap();
        assert_eq!(m.depth(), 1);
        assert_eq!(m.get(1, 3), 4);
    }

    #[test]
    fn single_vertex() {
        let mut g = Graph::new(GraphKind::Undirected);
        g.add_vertex();
        let m = b_matrix(&g).unwrap();
        assert_eq!(m.depth(), 0);
        assert_eq!(m.get(0, 1), 1);
        assert!(b_matrix(&Graph::new(GraphKind::Undirected)).is_err());
    }

    #[test]
    fn rows_sum_to_n() {
        let g = crate::gen::erdos_renyi(9, 0.3, 11).unwrap();
        let m = b_matrix(&g).unwrap();
        for row in &m.rows {
            assert_eq!(row.iter().sum::<u64>(), 9);
        }
    }

    #[test]
    fn csv_format() {
        let mut g = Graph::new(GraphKind::Undirected);
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(a, b).unwrap();
        assert_eq!(b_matrix(&g).unwrap().to_csv(), "l,k,count\n0,1,2\n1,1,2\n");
    }
}
