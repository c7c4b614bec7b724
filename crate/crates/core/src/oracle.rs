//! Exact desk-scale solvers.
//!
//! These serve twice: as leaf solvers inside the pipelines (on prime
//! quotients and on C-blocks that are not O3-free) and as ground truth for
//! the property tests. Every entry point enforces a size cutoff and fails
//! loudly beyond it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{MultiColoring, VertexWeights};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cutoff exceeded: {what} has size {size}, limit is {limit}")]
pub struct CutoffError {
    pub what: &'static str,
    pub size: u64,
    pub limit: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    /// Vertex limit for `chi_exact`.
    pub chi_n: usize,
    /// Limit on the total weight for `chi_w_exact`.
    pub weight_sum: u64,
    /// Vertex limit for clique and independence numbers.
    pub clique_n: usize,
    /// Vertex limit for brute-force matching.
    pub matching_n: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { chi_n: 24, weight_sum: 64, clique_n: 64, matching_n: 14 }
    }
}

fn check(what: &'static str, size: u64, limit: u64) -> Result<(), CutoffError> {
    if size > limit {
        Err(CutoffError { what, size, limit })
    } else {
        Ok(())
    }
}

/// Exact chromatic number with an optimal coloring.
pub fn chi_exact(g: &Graph, limits: &OracleLimits) -> Result<(usize, MultiColoring), CutoffError> {
    check("chromatic number", g.n() as u64, limits.chi_n as u64)?;
    let (k, colors) = color_exact(g);
    Ok((k, MultiColoring::from_single(&colors)))
}

/// Exact weighted chromatic number via the blow-up graph: each vertex `v`
/// becomes a clique of `w(v)` copies, and copies of adjacent vertices are
/// fully joined.
pub fn chi_w_exact(
    g: &Graph,
    w: &VertexWeights,
    limits: &OracleLimits,
) -> Result<(usize, MultiColoring), CutoffError> {
    assert_eq!(w.len(), g.n(), "one weight per vertex");
    check("weighted chromatic number (total weight)", w.total(), limits.weight_sum)?;
    let mut owner = Vec::new();
    for v in 0..g.n() {
        owner.extend(std::iter::repeat_n(v, w.get(v) as usize));
    }
    let blown = Graph::from_fn(owner.len(), |i, j| owner[i] == owner[j] || g.has_edge(owner[i], owner[j]));
    let (k, colors) = color_exact(&blown);
    let mut sets = vec![Vec::new(); g.n()];
    for (copy, &v) in owner.iter().enumerate() {
        sets[v].push(colors[copy]);
    }
    Ok((k, MultiColoring::new(sets)))
}

/// Maximum clique size and one maximum clique (sorted).
pub fn clique_number_exact(g: &Graph, limits: &OracleLimits) -> Result<(usize, Vec<usize>), CutoffError> {
    check("clique number", g.n() as u64, limits.clique_n as u64)?;
    let best = max_clique(g);
    Ok((best.len(), best))
}

/// Independence number and one maximum independent set (sorted).
pub fn independence_number_exact(g: &Graph, limits: &OracleLimits) -> Result<(usize, Vec<usize>), CutoffError> {
    check("independence number", g.n() as u64, limits.clique_n as u64)?;
    let best = max_clique(&g.complement());
    Ok((best.len(), best))
}

/// Maximum matching size by exhaustive search.
pub fn max_matching_bruteforce(g: &Graph, limits: &OracleLimits) -> Result<usize, CutoffError> {
    check("brute-force matching", g.n() as u64, limits.matching_n as u64)?;
    fn go(g: &Graph, used: &mut [bool], from: usize) -> usize {
        let Some(v) = (from..g.n()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for &u in g.neighbors(v) {
            if !used[u] {
                used[u] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    Ok(go(g, &mut vec![false; g.n()], 0))
}

fn max_clique(g: &Graph) -> Vec<usize> {
    fn expand(g: &Graph, current: &mut Vec<usize>, cands: Vec<usize>, best: &mut Vec<usize>) {
        if cands.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            if current.len() + cands.len() - i <= best.len() {
                return;
            }
            current.push(v);
            let next = cands[i + 1..].iter().copied().filter(|&u| g.has_edge(v, u)).collect();
            expand(g, current, next, best);
            current.pop();
        }
    }
    // high-degree vertices first tends to find large cliques early
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = Vec::new();
    expand(g, &mut Vec::new(), order, &mut best);
    best.sort_unstable();
    best
}

/// Greedy DSATUR coloring; returns the per-vertex colors.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n]; n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v].is_none())
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..n).find(|&c| !seen[v][c]).unwrap();
        colors[v] = Some(c);
        for &u in g.neighbors(v) {
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    colors.into_iter().map(Option::unwrap).collect()
}

/// DSATUR branch and bound. The maximum clique is pre-colored `0..ω`,
/// giving both the lower bound and the symmetry break.
fn color_exact(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let clique = max_clique(g);
    let lower = clique.len();
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    if upper == lower {
        return (upper, greedy);
    }

    struct Search<'a> {
        g: &'a Graph,
        colors: Vec<Option<usize>>,
        counts: Vec<Vec<u32>>,
        sat: Vec<usize>,
        best_k: usize,
        best: Vec<usize>,
        lower: usize,
    }

    impl Search<'_> {
        fn assign(&mut self, v: usize, c: usize) {
            self.colors[v] = Some(c);
            for &u in self.g.neighbors(v) {
                if self.counts[u][c] == 0 {
                    self.sat[u] += 1;
                }
                self.counts[u][c] += 1;
            }
        }

        fn unassign(&mut self, v: usize, c: usize) {
            self.colors[v] = None;
            for &u in self.g.neighbors(v) {
                self.counts[u][c] -= 1;
                if self.counts[u][c] == 0 {
                    self.sat[u] -= 1;
                }
            }
        }

        /// Returns true once an optimal coloring is proven.
        fn go(&mut self, used: usize, remaining: usize) -> bool {
            if remaining == 0 {
                self.best_k = used;
                self.best = self.colors.iter().map(|c| c.unwrap()).collect();
                return used == self.lower;
            }
            let g = self.g;
            let v = (0..g.n())
                .filter(|&v| self.colors[v].is_none())
                .max_by_key(|&v| (self.sat[v], g.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            for c in 0..=used {
                let next_used = used.max(c + 1);
                if next_used >= self.best_k {
                    break;
                }
                if self.counts[v][c] != 0 {
                    continue;
                }
                self.assign(v, c);
                let done = self.go(next_used, remaining - 1);
                self.unassign(v, c);
                if done {
                    return true;
                }
            }
            false
        }
    }

    let mut s = Search {
        g,
        colors: vec![None; n],
        counts: vec![vec![0; n + 1]; n],
        sat: vec![0; n],
        best_k: upper,
        best: greedy,
        lower,
    };
    for (c, &v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    s.go(lower, n - lower);
    (s.best_k, s.best)
}
