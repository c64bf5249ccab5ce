//! Minimum vertex cover on undirected graphs: a matching-based
//! 2-approximation, a max-degree greedy heuristic, and four parameterized
//! deciders. Accepting deciders return a witness cover of size at most k,
//! so the minimum cover itself is obtained by raising k from zero.

use crate::bitgraph::{iter_bits, BitGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn require_undirected(g: &Graph) -> Result<()> {
    if g.is_directed() {
        Err(Error::WrongDirectedness { expected: "undirected" })
    } else {
        Ok(())
    }
}

/// Both endpoints of a greedily built maximal matching; at most twice the
/// size of a minimum cover.
pub fn two_approximation_cover(g: &Graph) -> Result<VertexSet> {
    require_undirected(g)?;
    let mut cover = VertexSet::new();
    for (u, v) in g.edges() {
        if !cover.contains(u) && !cover.contains(v) {
            cover.insert(u);
            cover.insert(v);
        }
    }
    Ok(cover)
}

/// Repeatedly takes a current-maximum-degree vertex until no edge remains.
pub fn greedy_cover_max_degree(g: &Graph) -> Result<VertexSet> {
    require_undirected(g)?;
    let mut work = g.clone();
    let mut cover = VertexSet::new();
    while work.edge_count() > 0 {
        let v = crate::ops::max_degree_vertex(&work)?;
        cover.insert(v);
        work.remove_vertex(v)?;
    }
    Ok(cover)
}

/// Literal decision procedure: enumerate all vertex subsets of size
/// min(k, n) and test each for coverage.
pub fn k_vertex_cover_brute_force(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    require_undirected(g)?;
    let bg = BitGraph::from_graph(g)?;
    if k > bg.n {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds vertex count {}",
            bg.n
        )));
    }
    Ok(brute_force_mask(&bg, bg.full(), k).map(|m| bg.to_vertex_set(m)))
}

/// Subset enumeration over the alive vertices of `bg` (Gosper's hack),
/// shared by the brute-force decider and the kernel decision step.
fn brute_force_mask(bg: &BitGraph, alive: u128, k: usize) -> Option<u128> {
    let covers_alive =
        |mask: u128| iter_bits(alive).all(|v| mask & (1 << v) != 0 || bg.adj[v] & alive & !mask == 0);
    if covers_alive(0) {
        return Some(0);
    }
    let vs: Vec<usize> = iter_bits(alive).collect();
    let n = vs.len();
    let k = k.min(n);
    if k == 0 {
        return None;
    }
    // combinations of exactly k vertices, in ascending mask order
    let mut comb: u128 = (1 << k) - 1;
    loop {
        let mask = iter_bits(comb).fold(0u128, |m, i| m | (1 << vs[i]));
        if covers_alive(mask) {
            return Some(mask);
        }
        // next combination with the same popcount (Gosper)
        let c = comb & comb.wrapping_neg();
        let r = match comb.checked_add(c) {
            Some(r) => r,
            None => return None,
        };
        if n < 128 && r >= 1u128 << n {
            return None;
        }
        comb = (((r ^ comb) >> 2) / c) | r;
    }
}

/// Degree-branching search tree: branch on vertices of degree at least 3
/// (take the vertex or take its whole neighborhood); what remains has
/// maximum degree 2 and is solved exactly as paths and cycles.
pub fn k_vertex_cover_dbs(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    require_undirected(g)?;
    let bg = BitGraph::from_graph(g)?;
    Ok(dbs(&bg, bg.full(), k as i64).map(|m| bg.to_vertex_set(m)))
}

fn dbs(bg: &BitGraph, alive: u128, budget: i64) -> Option<u128> {
    if budget < 0 {
        return None;
    }
    if let Some(v) = iter_bits(alive).find(|&v| bg.degree_in(alive, v) >= 3) {
        let take_v = dbs(bg, alive & !(1 << v), budget - 1).map(|m| m | (1 << v));
        if take_v.is_some() {
            return take_v;
        }
        let nv = bg.adj[v] & alive;
        return dbs(bg, alive & !nv, budget - nv.count_ones() as i64).map(|m| m | nv);
    }
    paths_and_cycles_cover(bg, alive, budget)
}

/// Exact minimum cover of a graph of maximum degree 2 (disjoint paths and
/// cycles), `None` if it exceeds the budget.
fn paths_and_cycles_cover(bg: &BitGraph, alive: u128, budget: i64) -> Option<u128> {
    let mut left = alive;
    let mut cover = 0u128;
    let mut spent: i64 = 0;
    while left != 0 {
        let mut start = left.trailing_zeros() as usize;
        // walk to a path endpoint, if one exists
        let comp_of = |s: usize| {
            let mut comp = 1u128 << s;
            let mut frontier = 1u128 << s;
            while frontier != 0 {
                let mut next = 0u128;
                for v in iter_bits(frontier) {
                    next |= bg.adj[v] & left & !comp;
                }
                comp |= next;
                frontier = next;
            }
            comp
        };
        let comp = comp_of(start);
        if let Some(end) = iter_bits(comp).find(|&v| (bg.adj[v] & comp).count_ones() <= 1) {
            start = end; // path component
        }
        // order vertices along the path or cycle
        let mut order = vec![start];
        let mut seen = 1u128 << start;
        loop {
            let last = *order.last().unwrap();
            match iter_bits(bg.adj[last] & comp & !seen).next() {
                Some(nxt) => {
                    order.push(nxt);
                    seen |= 1 << nxt;
                }
                None => break,
            }
        }
        let m = order.len();
        let is_cycle = m > 2 && bg.adj[*order.last().unwrap()] & (1 << start) != 0;
        // odd positions cover a path; a cycle of odd length needs the last
        // vertex as well
        for (i, &v) in order.iter().enumerate() {
            if i % 2 == 1 || (is_cycle && m % 2 == 1 && i == m - 1) {
                cover |= 1 << v;
                spent += 1;
            }
        }
        if spent > budget {
            return None;
        }
        left &= !comp;
    }
    Some(cover)
}

/// Refined bounded search tree: degree-1 vertices force their neighbor,
/// degree-2 vertices either force both neighbors (triangle) or branch
/// between N(v) and N(u) ∪ N(w), high-degree vertices branch classically.
pub fn k_vertex_cover_niedermeier(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    require_undirected(g)?;
    let bg = BitGraph::from_graph(g)?;
    Ok(niedermeier(&bg, bg.full(), k as i64).map(|m| bg.to_vertex_set(m)))
}

fn niedermeier(bg: &BitGraph, alive: u128, budget: i64) -> Option<u128> {
    if budget < 0 {
        return None;
    }
    let mut deg1 = None;
    let mut deg2 = None;
    let mut max_v = None;
    let mut max_d = 0;
    let mut any_edge = false;
    for v in iter_bits(alive) {
        let d = bg.degree_in(alive, v);
        if d == 0 {
            continue;
        }
        any_edge = true;
        if d == 1 && deg1.is_none() {
            deg1 = Some(v);
        }
        if d == 2 && deg2.is_none() {
            deg2 = Some(v);
        }
        if d > max_d {
            max_d = d;
            max_v = Some(v);
        }
    }
    if !any_edge {
        return Some(0);
    }
    if let Some(v) = deg1 {
        let u = (bg.adj[v] & alive).trailing_zeros() as usize;
        return niedermeier(bg, alive & !(1 << u) & !(1 << v), budget - 1).map(|m| m | (1 << u));
    }
    if let Some(v) = deg2 {
        let mut nbrs = iter_bits(bg.adj[v] & alive);
        let (u, w) = (nbrs.next().unwrap(), nbrs.next().unwrap());
        let uw = (1u128 << u) | (1 << w);
        if bg.adj[u] & (1 << w) != 0 {
            // triangle: some optimal cover contains both neighbors
            return niedermeier(bg, alive & !uw & !(1 << v), budget - 2).map(|m| m | uw);
        }
        let first = niedermeier(bg, alive & !uw & !(1 << v), budget - 2).map(|m| m | uw);
        if first.is_some() {
            return first;
        }
        let nuw = (bg.adj[u] | bg.adj[w]) & alive & !(1 << u) & !(1 << w);
        return niedermeier(bg, alive & !nuw, budget - nuw.count_ones() as i64).map(|m| m | nuw);
    }
    // all degrees >= 3: branch take v or take N(v)
    let v = max_v.unwrap();
    let take_v = niedermeier(bg, alive & !(1 << v), budget - 1).map(|m| m | (1 << v));
    if take_v.is_some() {
        return take_v;
    }
    let nv = bg.adj[v] & alive;
    niedermeier(bg, alive & !nv, budget - nv.count_ones() as i64).map(|m| m | nv)
}

/// Kernelization decider: any vertex of degree above the remaining budget
/// is forced into the cover; the kernel is rejected outright when its edge
/// count exceeds the square of the remaining budget, and decided
/// exhaustively otherwise.
pub fn k_vertex_cover_buss_goldsmith(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    require_undirected(g)?;
    let bg = BitGraph::from_graph(g)?;
    let mut alive = bg.full();
    let mut budget = k as i64;
    let mut forced = 0u128;
    loop {
        match iter_bits(alive).find(|&v| bg.degree_in(alive, v) as i64 > budget) {
            Some(v) => {
                forced |= 1 << v;
                alive &= !(1 << v);
                budget -= 1;
                if budget < 0 {
                    return Ok(None);
                }
            }
            None => break,
        }
    }
    // drop isolated vertices of the kernel
    let kernel = iter_bits(alive)
        .filter(|&v| bg.adj[v] & alive != 0)
        .fold(0u128, |m, v| m | (1 << v));
    if kernel == 0 {
        return Ok(Some(bg.to_vertex_set(forced)));
    }
    if budget <= 0 {
        return Ok(None);
    }
    let edges = bg.edges_in(kernel) as i64;
    if edges > budget * budget {
        return Ok(None);
    }
    Ok(brute_force_mask(&bg, kernel, budget as usize).map(|m| bg.to_vertex_set(m | forced)))
}

/// Kinds of parameterized cover decider, for callers that pick one by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverDecider {
    BruteForce,
    Dbs,
    Niedermeier,
    BussGoldsmith,
}

pub fn k_vertex_cover(g: &Graph, k: usize, decider: CoverDecider) -> Result<Option<VertexSet>> {
    match decider {
        CoverDecider::BruteForce => k_vertex_cover_brute_force(g, k.min(g.vertex_count())),
        CoverDecider::Dbs => k_vertex_cover_dbs(g, k),
        CoverDecider::Niedermeier => k_vertex_cover_niedermeier(g, k),
        CoverDecider::BussGoldsmith => k_vertex_cover_buss_goldsmith(g, k),
    }
}

/// Minimum cover by raising k until the chosen decider accepts.
pub fn minimum_vertex_cover(g: &Graph, decider: CoverDecider) -> Result<VertexSet> {
    for k in 0..=g.vertex_count() {
        if let Some(cover) = k_vertex_cover(g, k, decider)? {
            return Ok(cover);
        }
    }
    unreachable!("the full vertex set always covers");
}
