//! Maximum cardinality matching (Edmonds' blossom algorithm) and the
//! coloring of O3-free graphs through matchings of their complements.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::MultiColoring;
use crate::detect::find_independent_triple;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Every pair is an edge of `g` and the mate relation is symmetric.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => v < g.n() && v != u && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint
    /// of an augmenting path, if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: shrink the blossom onto its base
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }
}

/// Maximum cardinality matching. Exposed vertices are scanned in increasing
/// id order, so the result is deterministic.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut st = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: Vec::with_capacity(n),
    };
    for root in 0..n {
        if st.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = st.find_path(root) {
            while v != NONE {
                let pv = st.parent[v];
                let ppv = st.mate[pv];
                st.mate[v] = pv;
                st.mate[pv] = v;
                v = ppv;
            }
        }
    }
    Matching { mate: st.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect() }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph is not O3-free: vertices {0:?} are pairwise non-adjacent")]
pub struct NotO3Free(pub [usize; 3]);

/// Chromatic number of an O3-free graph as `n - ν(complement)`.
///
/// Color classes of an O3-free graph have at most two vertices, and a pair
/// can share a color iff it is an edge of the complement, so optimal
/// colorings are maximum matchings of the complement. Classes are numbered
/// by their smallest vertex.
pub fn chi_o3_free(g: &Graph) -> Result<(usize, MultiColoring), NotO3Free> {
    if let Some(t) = find_independent_triple(g) {
        return Err(NotO3Free(t));
    }
    let m = max_matching(&g.complement());
    let mut colors = vec![NONE; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if colors[v] != NONE {
            continue;
        }
        colors[v] = next;
        if let Some(u) = m.mate(v) {
            colors[u] = next;
        }
        next += 1;
    }
    debug_assert_eq!(next, g.n() - m.size());
    Ok((next, MultiColoring::from_single(&colors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::VertexWeights;
    use crate::graph::named::*;

    #[test]
    fn small_matchings() {
        assert_eq!(max_matching(&complete(3)).size(), 1);
        let m = max_matching(&path(4));
        assert_eq!(m.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(max_matching(&petersen()).size(), 5);
        assert_eq!(max_matching(&cycle(5)).size(), 2);
        assert_eq!(max_matching(&Graph::empty(0)).size(), 0);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with pendants 3 (on 0) and 4 (on 1) and a tail 2-5
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_for(&g));
    }

    #[test]
    fn o3_free_coloring() {
        let (k, c) = chi_o3_free(&complete(5)).unwrap();
        assert_eq!(k, 5);
        c.validate(&complete(5), &VertexWeights::unit(5), k).unwrap();
        let (k, c) = chi_o3_free(&cycle(5)).unwrap();
        assert_eq!(k, 3);
        c.validate(&cycle(5), &VertexWeights::unit(5), k).unwrap();
        // complement of a perfect matching on 8 vertices
        let pm = Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        let (k, _) = chi_o3_free(&pm.complement()).unwrap();
        assert_eq!(k, 4);
        assert_eq!(chi_o3_free(&path(5)), Err(NotO3Free([0, 2, 4])));
    }
}
