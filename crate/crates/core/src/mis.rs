//! Maximum independent set: membership predicates, a minimum-degree greedy
//! heuristic and four exact solvers. Directed inputs are handled through
//! their underlying undirected view. Ties always break toward the smallest
//! vertex id so returned sets are reproducible.

use std::collections::BTreeSet;

use crate::bitgraph::{iter_bits, BitGraph};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// True iff no edge joins two members of `s`.
pub fn is_independent_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    for v in s.iter() {
        let n = g.neighborhood(v)?;
        if s.iter().any(|w| w != v && n.contains(w)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `s` is independent and cannot be extended: every vertex outside
/// `s` has a neighbor inside it.
pub fn is_maximal_independent_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !is_independent_set(g, s)? {
        return Ok(false);
    }
    for v in g.vertices() {
        if !s.contains(v) && g.neighborhood(v)?.iter().all(|w| !s.contains(w)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy heuristic: repeatedly take a minimum-degree vertex and delete its
/// closed neighborhood. Maximal but not necessarily maximum.
pub fn mis_greedy(g: &Graph) -> VertexSet {
    let mut work = g.clone();
    let mut sel = VertexSet::new();
    while let Ok(v) = crate::ops::min_degree_vertex(&work) {
        sel.insert(v);
        for w in work.neighborhood(v).unwrap().iter() {
            work.remove_vertex(w).unwrap();
        }
        work.remove_vertex(v).unwrap();
    }
    sel
}

/// Exhaustive maximum independent set over all 2^n vertex subsets.
pub fn mis_brute_force(g: &Graph) -> Result<VertexSet> {
    let bg = BitGraph::from_graph(g)?;
    let n = bg.n;
    if n >= 64 {
        return Err(crate::error::Error::TooLarge(n));
    }
    let mut best: u128 = 0;
    for mask in 0..(1u64 << n) {
        let mask = mask as u128;
        if mask.count_ones() > best.count_ones() && bg.independent(mask) {
            best = mask;
        }
    }
    Ok(bg.to_vertex_set(best))
}

/// Exact solver branching on a maximum-degree vertex: either it is excluded,
/// or it is included and its closed neighborhood removed.
pub fn mis_max_degree_branching(g: &Graph) -> Result<VertexSet> {
    let bg = BitGraph::from_graph(g)?;
    fn solve(bg: &BitGraph, set: u128) -> u128 {
        let v = match bg.max_degree_vertex(set) {
            Some(v) if bg.degree_in(set, v) > 0 => v,
            _ => return set, // no edges left, take everything
        };
        let without = solve(bg, set & !(1 << v));
        let with = (1 << v) | solve(bg, set & !bg.closed(v));
        if with.count_ones() >= without.count_ones() {
            with
        } else {
            without
        }
    }
    Ok(bg.to_vertex_set(solve(&bg, bg.full())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoonMoserMode {
    Recursive,
    Iterative,
}

/// Maximum independent set by branching over the closed neighborhood of a
/// minimum-degree vertex: every maximal independent set contains at least
/// one vertex of N[v].
pub fn mis_moon_moser(g: &Graph, mode: MoonMoserMode) -> Result<VertexSet> {
    let bg = BitGraph::from_graph(g)?;
    let best = match mode {
        MoonMoserMode::Recursive => moon_moser_rec(&bg, bg.full()),
        MoonMoserMode::Iterative => moon_moser_iter(&bg, bg.full()),
    };
    Ok(bg.to_vertex_set(best))
}

fn moon_moser_rec(bg: &BitGraph, set: u128) -> u128 {
    let v = match bg.min_degree_vertex(set) {
        Some(v) => v,
        None => return 0,
    };
    let mut best = 0u128;
    for u in iter_bits(bg.closed(v) & set) {
        let cand = (1 << u) | moon_moser_rec(bg, set & !bg.closed(u));
        if cand.count_ones() > best.count_ones() {
            best = cand;
        }
    }
    best
}

/// The same branching with an explicit frame stack instead of recursion.
fn moon_moser_iter(bg: &BitGraph, set: u128) -> u128 {
    struct Frame {
        branches: Vec<usize>,
        next: usize,
        set: u128,
        best: u128,
    }
    let new_frame = |set: u128| -> std::result::Result<Frame, u128> {
        match bg.min_degree_vertex(set) {
            Some(v) => Ok(Frame {
                branches: iter_bits(bg.closed(v) & set).collect(),
                next: 0,
                set,
                best: 0,
            }),
            None => Err(0), // empty residual graph contributes nothing
        }
    };

    let mut stack: Vec<Frame> = Vec::new();
    let mut returned: Option<u128> = match new_frame(set) {
        Ok(f) => {
            stack.push(f);
            None
        }
        Err(r) => Some(r),
    };
    while let Some(frame) = stack.last_mut() {
        if let Some(r) = returned.take() {
            // child result for the branch vertex we just explored
            let u = frame.branches[frame.next - 1];
            let cand = (1 << u) | r;
            if cand.count_ones() > frame.best.count_ones() {
                frame.best = cand;
            }
        }
        if frame.next == frame.branches.len() {
            returned = Some(frame.best);
            stack.pop();
            continue;
        }
        let u = frame.branches[frame.next];
        frame.next += 1;
        match new_frame(frame.set & !bg.closed(u)) {
            Ok(f) => stack.push(f),
            Err(r) => returned = Some(r),
        }
    }
    returned.unwrap_or(0)
}

/// Branch-and-reduce maximum independent set in the measure-and-conquer
/// style: degree-0/1 inclusion, degree-2 folding, a domination rule, and
/// maximum-degree branching with mirrors.
pub fn mis_fgk(g: &Graph) -> Result<VertexSet> {
    let bg = BitGraph::from_graph(g)?;
    let mut fg = FoldGraph::from_bitgraph(&bg);
    let alive: Vec<usize> = (0..bg.n).collect();
    let sol = fg.solve(alive.into_iter().collect());
    let mask = sol.into_iter().fold(0u128, |m, i| m | (1 << i));
    Ok(bg.to_vertex_set(mask))
}

/// Working graph for the branch-and-reduce solver. Degree-2 folding creates
/// fresh vertices, so adjacency is a growable vector of sets over node
/// indices; indices below the original n map straight back to graph
/// vertices, higher ones record the (v, u, w) triple they replaced.
#[derive(Clone)]
struct FoldGraph {
    adj: Vec<BTreeSet<usize>>,
    folds: Vec<(usize, usize, usize)>, // parallel to nodes >= base
    base: usize,
}

impl FoldGraph {
    fn from_bitgraph(bg: &BitGraph) -> Self {
        let adj = (0..bg.n)
            .map(|v| iter_bits(bg.adj[v]).collect())
            .collect();
        FoldGraph { adj, folds: Vec::new(), base: bg.n }
    }

    fn remove(&mut self, alive: &mut BTreeSet<usize>, v: usize) {
        alive.remove(&v);
        let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
        for u in nbrs {
            self.adj[u].remove(&v);
        }
        self.adj[v].clear();
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Replaces a degree-2 vertex v with non-adjacent neighbors u, w by a
    /// fresh vertex adjacent to N(u) ∪ N(w); the caller patches the fold
    /// back into the solution afterwards.
    fn fold(&mut self, alive: &mut BTreeSet<usize>, v: usize, u: usize, w: usize) -> usize {
        let mut merged: BTreeSet<usize> = self.adj[u].union(&self.adj[w]).copied().collect();
        merged.remove(&v);
        merged.remove(&u);
        merged.remove(&w);
        self.remove(alive, v);
        self.remove(alive, u);
        self.remove(alive, w);
        let f = self.adj.len();
        for &x in &merged {
            self.adj[x].insert(f);
        }
        self.adj.push(merged);
        self.folds.push((v, u, w));
        alive.insert(f);
        f
    }

    /// Mirrors of v: vertices at distance two whose non-neighbors within
    /// N(v) form a clique. Discarding v also discards its mirrors.
    fn mirrors(&self, v: usize) -> Vec<usize> {
        let nv = &self.adj[v];
        let mut out = Vec::new();
        let mut dist2: BTreeSet<usize> = BTreeSet::new();
        for &u in nv {
            dist2.extend(self.adj[u].iter().copied());
        }
        dist2.remove(&v);
        for &u in nv {
            dist2.remove(&u);
        }
        for &u in &dist2 {
            let rest: Vec<usize> = nv.difference(&self.adj[u]).copied().collect();
            let clique = rest
                .iter()
                .enumerate()
                .all(|(i, &a)| rest[i + 1..].iter().all(|&b| self.adj[a].contains(&b)));
            if clique {
                out.push(u);
            }
        }
        out
    }

    fn solve(&mut self, mut alive: BTreeSet<usize>) -> BTreeSet<usize> {
        let mut forced: Vec<usize> = Vec::new();
        let fold_floor = self.folds.len();
        let mut sol = loop {
            let Some(&first) = alive.iter().next() else {
                break BTreeSet::new();
            };

            // degree 0 and 1: always take the vertex
            if let Some(&v) = alive.iter().find(|&&v| self.degree(v) <= 1) {
                forced.push(v);
                let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
                self.remove(&mut alive, v);
                for u in nbrs {
                    self.remove(&mut alive, u);
                }
                continue;
            }

            // domination: u adjacent to v with N[v] ⊆ N[u] makes u removable
            let mut dominated = None;
            'dom: for &v in &alive {
                for &u in &self.adj[v] {
                    if self.adj[v].iter().all(|x| *x == u || self.adj[u].contains(x)) {
                        dominated = Some(u);
                        break 'dom;
                    }
                }
            }
            if let Some(u) = dominated {
                self.remove(&mut alive, u);
                continue;
            }

            // degree 2: triangle case takes v, otherwise fold
            if let Some(&v) = alive.iter().find(|&&v| self.degree(v) == 2) {
                let mut it = self.adj[v].iter();
                let (&u, &w) = (it.next().unwrap(), it.next().unwrap());
                if self.adj[u].contains(&w) {
                    forced.push(v);
                    self.remove(&mut alive, v);
                    self.remove(&mut alive, u);
                    self.remove(&mut alive, w);
                } else {
                    self.fold(&mut alive, v, u, w);
                }
                continue;
            }

            // branch on a maximum-degree vertex with its mirrors
            let v = alive
                .iter()
                .copied()
                .max_by_key(|&v| (self.degree(v), usize::MAX - v))
                .unwrap_or(first);
            let mirrors = self.mirrors(v);

            let mut take = self.clone();
            let mut take_alive = alive.clone();
            take.remove(&mut take_alive, v);
            let nbrs: Vec<usize> = self.adj[v].iter().copied().collect();
            for u in nbrs {
                take.remove(&mut take_alive, u);
            }
            let mut with_v = take.solve(take_alive);
            with_v.insert(v);

            self.remove(&mut alive, v);
            for m in mirrors {
                self.remove(&mut alive, m);
            }
            let without_v = self.solve(std::mem::take(&mut alive));

            break if with_v.len() >= without_v.len() {
                with_v
            } else {
                without_v
            };
        };

        sol.extend(forced);
        // unwind folds introduced at this level, newest first
        while self.folds.len() > fold_floor {
            let (v, u, w) = self.folds.pop().unwrap();
            let f = self.base + self.folds.len();
            if sol.remove(&f) {
                sol.insert(u);
                sol.insert(w);
            } else {
                sol.insert(v);
            }
        }
        sol
    }
}
