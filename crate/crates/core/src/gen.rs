//! Seeded graph generators. Every generator is deterministic: the same
//! parameters and seed always produce the same edge set.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, VertexId};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vertices(g: &mut Graph, n: usize) -> Vec<VertexId> {
    (0..n).map(|_| g.add_vertex()).collect()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Erdős–Rényi G(n, p): each of the C(n,2) pairs appears with probability p.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} not in [0, 1]")));
    }
    let mut g = Graph::new(GraphKind::Undirected);
    let vs = vertices(&mut g, n);
    let mut r = rng(seed);
    for i in 0..n {
        for j in i + 1..n {
            if r.gen::<f64>() < p {
                g.add_edge(vs[i], vs[j])?;
            }
        }
    }
    Ok(g)
}

/// Barabási–Albert preferential attachment: `n0` isolated seed vertices,
/// then `steps` new vertices each attaching `m` edges to distinct existing
/// vertices picked with probability proportional to degree + 1 (the +1 makes
/// isolated seed vertices reachable).
pub fn barabasi_albert(n0: usize, m: usize, steps: usize, seed: u64) -> Result<Graph> {
    if n0 == 0 {
        return Err(invalid("need at least one seed vertex"));
    }
    if m > n0 {
        return Err(invalid(format!("m = {m} exceeds seed vertex count {n0}")));
    }
    let mut g = Graph::new(GraphKind::Undirected);
    let mut vs = vertices(&mut g, n0);
    let mut r = rng(seed);
    for _ in 0..steps {
        let weights: Vec<usize> = vs.iter().map(|&v| g.degree(v).unwrap() + 1).collect();
        let total: usize = weights.iter().sum();
        let mut targets: Vec<usize> = Vec::with_capacity(m);
        while targets.len() < m {
            let mut ticket = r.gen_range(0..total);
            let mut pick = 0;
            for (i, &w) in weights.iter().enumerate() {
                if ticket < w {
                    pick = i;
                    break;
                }
                ticket -= w;
            }
            if !targets.contains(&pick) {
                targets.push(pick);
            }
        }
        let new = g.add_vertex();
        for t in targets {
            g.add_edge(new, vs[t])?;
        }
        vs.push(new);
    }
    Ok(g)
}

/// Watts–Strogatz small world: start from the k-regular ring, then rewire
/// each original edge with probability `beta` to a uniformly random endpoint
/// that creates neither a loop nor a duplicate. Edge count is conserved.
pub fn watts_strogatz(n: usize, k: usize, beta: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(invalid(format!("rewiring probability {beta} not in [0, 1]")));
    }
    let mut g = k_regular_ring(n, k)?;
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut r = rng(seed);
    for i in 0..n {
        for offset in 1..=k {
            let j = (i + offset) % n;
            if r.gen::<f64>() >= beta {
                continue;
            }
            // keep the edge if every other endpoint is already taken
            let candidates: Vec<usize> = (0..n)
                .filter(|&w| w != i && w != j && !g.has_edge(vs[i], vs[w]))
                .collect();
            if candidates.is_empty() {
                continue;
            }
            let w = candidates[r.gen_range(0..candidates.len())];
            g.remove_edge(vs[i], vs[j])?;
            g.add_edge(vs[i], vs[w])?;
        }
    }
    Ok(g)
}

/// Kleinberg small world: a rows × cols lattice plus one long-range edge per
/// vertex, drawn with probability proportional to d^(-r) where d is lattice
/// Manhattan distance. Long-range draws duplicating an existing edge are
/// absorbed by deduplication.
pub fn kleinberg(rows: usize, cols: usize, r_exp: f64, seed: u64) -> Result<Graph> {
    if rows * cols < 2 {
        return Err(invalid("lattice needs at least two vertices"));
    }
    if r_exp < 0.0 {
        return Err(invalid("clustering exponent must be non-negative"));
    }
    let mut g = grid_2d(rows, cols);
    let vs: Vec<VertexId> = g.vertices().collect();
    let at = |row: usize, col: usize| vs[row * cols + col];
    let mut r = rng(seed);
    for row in 0..rows {
        for col in 0..cols {
            let mut others: Vec<(VertexId, f64)> = Vec::new();
            for row2 in 0..rows {
                for col2 in 0..cols {
                    let d = row.abs_diff(row2) + col.abs_diff(col2);
                    if d > 0 {
                        others.push((at(row2, col2), (d as f64).powf(-r_exp)));
                    }
                }
            }
            let total: f64 = others.iter().map(|&(_, w)| w).sum();
            let mut ticket = r.gen::<f64>() * total;
            let mut pick = others[others.len() - 1].0;
            for &(v, w) in &others {
                if ticket < w {
                    pick = v;
                    break;
                }
                ticket -= w;
            }
            g.add_edge(at(row, col), pick)?;
        }
    }
    Ok(g)
}

/// Eppstein power-law: `m` uniform random edges on `n` vertices, then
/// `iterations` rounds that pick a uniform random edge and try to move it
/// between two degree-biased endpoints (each chosen as a random endpoint of
/// a random edge). Moves that would create a loop or duplicate are skipped,
/// so the edge count is conserved.
pub fn eppstein_power_law(n: usize, m: usize, iterations: usize, seed: u64) -> Result<Graph> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(invalid(format!("{m} edges exceed the {max} possible pairs")));
    }
    let mut g = Graph::new(GraphKind::Undirected);
    let vs = vertices(&mut g, n);
    let mut r = rng(seed);
    while g.edge_count() < m {
        let i = r.gen_range(0..n);
        let j = r.gen_range(0..n);
        if i != j {
            g.add_edge(vs[i], vs[j])?;
        }
    }
    for _ in 0..iterations {
        let edges = g.edges();
        if edges.is_empty() {
            break;
        }
        let (u, v) = edges[r.gen_range(0..edges.len())];
        let biased = |r: &mut ChaCha8Rng, edges: &[(VertexId, VertexId)]| {
            let (a, b) = edges[r.gen_range(0..edges.len())];
            if r.gen::<bool>() {
                a
            } else {
                b
            }
        };
        let x = biased(&mut r, &edges);
        let y = biased(&mut r, &edges);
        if x != y && !g.has_edge(x, y) {
            g.remove_edge(u, v)?;
            g.add_edge(x, y)?;
        }
    }
    Ok(g)
}

/// k-regular random graph via the pairing model: k points per vertex, a
/// random perfect matching of the points, restart whenever the matching
/// induces a loop or a duplicate edge.
pub fn k_regular_random(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k >= n && !(k == 0 && n > 0) {
        return Err(invalid(format!("degree {k} must be smaller than n = {n}")));
    }
    if n * k % 2 != 0 {
        return Err(invalid(format!("n·k = {} must be even", n * k)));
    }
    let mut r = rng(seed);
    'restart: loop {
        let mut g = Graph::new(GraphKind::Undirected);
        let vs = vertices(&mut g, n);
        let mut points: Vec<usize> = (0..n * k).collect();
        points.shuffle(&mut r);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0] / k, pair[1] / k);
            if u == v || g.has_edge(vs[u], vs[v]) {
                continue 'restart;
            }
            g.add_edge(vs[u], vs[v])?;
        }
        return Ok(g);
    }
}

/// rows × cols lattice with horizontal and vertical neighbor edges.
pub fn grid_2d(rows: usize, cols: usize) -> Graph {
    let mut g = Graph::new(GraphKind::Undirected);
    let vs = vertices(&mut g, rows * cols);
    let at = |row: usize, col: usize| vs[row * cols + col];
    for row in 0..rows {
        for col in 0..cols {
            if col + 1 < cols {
                g.add_edge(at(row, col), at(row, col + 1)).unwrap();
            }
            if row + 1 < rows {
                g.add_edge(at(row, col), at(row + 1, col)).unwrap();
            }
        }
    }
    g
}

/// Ring where vertex i is adjacent to its k nearest neighbors on each side;
/// 2k-regular with n·k edges. Requires n > 2k.
pub fn k_regular_ring(n: usize, k: usize) -> Result<Graph> {
    if n <= 2 * k {
        return Err(invalid(format!("ring needs n > 2k, got n = {n}, k = {k}")));
    }
    let mut g = Graph::new(GraphKind::Undirected);
    let vs = vertices(&mut g, n);
    for i in 0..n {
        for offset in 1..=k {
            g.add_edge(vs[i], vs[(i + offset) % n])?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;

    fn same_edges(a: &Graph, b: &Graph) -> bool {
        a.edges() == b.edges()
    }

    #[test]
    fn erdos_renyi_extremes_and_determinism() {
        let g = erdos_renyi(5, 0.0, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 0));
        let g = erdos_renyi(5, 1.0, 1).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(same_edges(&erdos_renyi(50, 0.2, 7).unwrap(), &erdos_renyi(50, 0.2, 7).unwrap()));
        assert!(erdos_renyi(5, 1.5, 1).is_err());
    }

    #[test]
    fn barabasi_albert_counts() {
        let g = barabasi_albert(3, 1, 0, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        let g = barabasi_albert(1, 1, 4, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
        assert_eq!(ops::connected_components(&g).len(), 1);
        let g = barabasi_albert(3, 2, 10, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (13, 20));
        assert!(barabasi_albert(2, 3, 1, 1).is_err());
    }

    #[test]
    fn watts_strogatz_conserves_edges() {
        let ring = watts_strogatz(8, 2, 0.0, 3).unwrap();
        assert!(same_edges(&ring, &k_regular_ring(8, 2).unwrap()));
        assert!(ops::is_regular(&ring));

        let g = watts_strogatz(8, 2, 1.0, 3).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert!(same_edges(&watts_strogatz(20, 3, 0.1, 5).unwrap(), &watts_strogatz(20, 3, 0.1, 5).unwrap()));
    }

    #[test]
    fn kleinberg_bounds() {
        let g = kleinberg(2, 2, 2.0, 1).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert!(g.edge_count() >= 4);

        let g = kleinberg(3, 3, 0.0, 1).unwrap();
        assert!((12..=21).contains(&g.edge_count()), "got {}", g.edge_count());

        let g = kleinberg(1, 2, 2.0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn eppstein_conserves_edges() {
        let g = eppstein_power_law(10, 15, 0, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert_eq!(eppstein_power_law(10, 15, 100, 2).unwrap().edge_count(), 15);
        // saturated graph cannot move any edge
        let g = eppstein_power_law(4, 6, 50, 2).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(ops::is_regular(&g));
        assert!(eppstein_power_law(4, 7, 0, 2).is_err());
    }

    #[test]
    fn k_regular_random_degrees() {
        let g = k_regular_random(6, 0, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 0));
        let g = k_regular_random(4, 3, 1).unwrap();
        assert_eq!(g.edge_count(), 6); // K4
        let g = k_regular_random(10, 3, 9).unwrap();
        assert!(g.vertices().all(|v| g.degree(v).unwrap() == 3));
        assert!(same_edges(&k_regular_random(10, 3, 9).unwrap(), &k_regular_random(10, 3, 9).unwrap()));
        assert!(k_regular_random(5, 3, 1).is_err()); // odd n·k
        assert!(k_regular_random(4, 4, 1).is_err());
    }

    #[test]
    fn structured_generators() {
        let g = grid_2d(3, 3);
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));
        let g = grid_2d(1, 5);
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 4));
        let g = grid_2d(1, 1);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));

        let c5 = k_regular_ring(5, 1).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        let g = k_regular_ring(8, 2).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert!(g.vertices().all(|v| g.degree(v).unwrap() == 4));
        let g = k_regular_ring(7, 3).unwrap();
        assert_eq!(g.edge_count(), 21); // K7
        assert!(k_regular_ring(6, 3).is_err());
    }
}
