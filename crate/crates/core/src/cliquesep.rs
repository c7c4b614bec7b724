//! Clique-separator decomposition.
//!
//! Candidate separators come from a minimal triangulation computed with
//! MCS-M: every clique minimal separator of a graph is a minimal separator
//! of each of its minimal triangulations, and the minimal separators of a
//! chordal graph are among the sets `madj(x)` of its elimination ordering.
//! Each candidate is tested for cliqueness and for actually separating the
//! graph, so the search finds a clique separator whenever one exists.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{ColoringError, MultiColoring, VertexWeights};
use crate::graph::{Graph, VertexSubset};

/// A clique `q` whose removal leaves `a` and `b` with no edge between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueSeparator {
    pub q: VertexSubset,
    pub a: VertexSubset,
    pub b: VertexSubset,
}

/// Binary clique-separator decomposition tree. All vertex sets are in the
/// ids of the host graph the tree was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CDecompTree {
    Leaf { block: VertexSubset },
    Node { separator: VertexSubset, left: Box<CDecompTree>, right: Box<CDecompTree> },
}

impl CDecompTree {
    /// Vertices covered by this subtree.
    pub fn span(&self) -> VertexSubset {
        match self {
            CDecompTree::Leaf { block } => block.clone(),
            CDecompTree::Node { left, right, .. } => left.span().union(&right.span()),
        }
    }

    /// Leaf blocks, left to right.
    pub fn leaves(&self) -> Vec<&VertexSubset> {
        let mut out = Vec::new();
        fn walk<'a>(t: &'a CDecompTree, out: &mut Vec<&'a VertexSubset>) {
            match t {
                CDecompTree::Leaf { block } => out.push(block),
                CDecompTree::Node { left, right, .. } => {
                    walk(left, out);
                    walk(right, out);
                }
            }
        }
        walk(self, &mut out);
        out
    }

    pub fn node_count(&self) -> usize {
        match self {
            CDecompTree::Leaf { .. } => 1,
            CDecompTree::Node { left, right, .. } => 1 + left.node_count() + right.node_count(),
        }
    }

    /// Checks every structural invariant against the host graph `g`: the
    /// root spans `V(g)`; at each node the separator is a clique, the two
    /// sides meet exactly in it and no edge joins their private parts; every
    /// leaf is free of clique separators.
    pub fn validate(&self, g: &Graph) -> Result<(), TreeError> {
        let span = self.span();
        if span != VertexSubset::full(g.n()) {
            return Err(TreeError::Coverage(span));
        }
        self.validate_node(g)
    }

    fn validate_node(&self, g: &Graph) -> Result<(), TreeError> {
        match self {
            CDecompTree::Leaf { block } => {
                let (h, map) = g.induced(block).map_err(|_| TreeError::Coverage(block.clone()))?;
                if let Some(sep) = find_clique_separator(&h) {
                    return Err(TreeError::LeafHasSeparator { block: block.clone(), separator: sep.q.mapped(&map) });
                }
                Ok(())
            }
            CDecompTree::Node { separator, left, right } => {
                if !g.is_clique(separator) {
                    return Err(TreeError::NotClique(separator.clone()));
                }
                let (l, r) = (left.span(), right.span());
                if l.intersection(&r) != *separator {
                    return Err(TreeError::BadOverlap(separator.clone()));
                }
                let (lp, rp) = (l.difference(separator), r.difference(separator));
                if lp.is_empty() || rp.is_empty() {
                    return Err(TreeError::EmptySide(separator.clone()));
                }
                if let Some((&u, &v)) = lp
                    .iter()
                    .flat_map(|u| rp.iter().map(move |v| (u, v)))
                    .find(|(&u, &v)| g.has_edge(u, v))
                {
                    return Err(TreeError::CrossingEdge(u, v));
                }
                left.validate_node(g)?;
                right.validate_node(g)
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("tree spans {0} instead of the whole vertex set")]
    Coverage(VertexSubset),
    #[error("separator {0} is not a clique")]
    NotClique(VertexSubset),
    #[error("sides do not meet exactly in separator {0}")]
    BadOverlap(VertexSubset),
    #[error("separator {0} leaves an empty side")]
    EmptySide(VertexSubset),
    #[error("edge {0}-{1} crosses the separator")]
    CrossingEdge(usize, usize),
    #[error("leaf block {block} still has clique separator {separator}")]
    LeafHasSeparator { block: VertexSubset, separator: VertexSubset },
}

/// MCS-M minimal triangulation; returns, for each vertex, its neighbors in
/// the triangulation that are numbered later (eliminated after it).
fn mcs_m_madj(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut fill: Vec<Vec<usize>> = vec![Vec::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], Reverse(v)))
            .unwrap();
        numbered[v] = true;
        order.push(v);
        // bottleneck search: best[u] = least possible maximum weight of an
        // inner vertex on an unnumbered path from v to u
        let mut best = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        for &u in g.neighbors(v) {
            if !numbered[u] {
                best[u] = 0;
                heap.push(Reverse((0usize, u)));
            }
        }
        let mut reached = Vec::new();
        while let Some(Reverse((b, x))) = heap.pop() {
            if b > best[x] {
                continue;
            }
            // inner vertices are compared with weight + 1 so a direct
            // neighbor (bottleneck 0) always qualifies
            if b <= weight[x] {
                reached.push(x);
            }
            let through = b.max(weight[x] + 1);
            for &y in g.neighbors(x) {
                if !numbered[y] && y != v && through < best[y] {
                    best[y] = through;
                    heap.push(Reverse((through, y)));
                }
            }
        }
        for &u in &reached {
            weight[u] += 1;
            fill[u].push(v);
        }
    }
    // fill[u] holds exactly the vertices numbered before u that became its
    // neighbors in the triangulation; those are eliminated after u
    fill.into_iter()
        .map(|mut s| {
            s.sort_unstable();
            s
        })
        .collect()
}

/// The component of `g - q` containing the smallest vertex becomes `a`, all
/// other components `b`.
fn split_by(g: &Graph, q: &VertexSubset) -> Option<CliqueSeparator> {
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !q.contains(v)).collect();
    let comps = g.components_within(&rest);
    if comps.len() < 2 {
        return None;
    }
    let a = comps[0].clone();
    let b = VertexSubset::new(comps[1..].iter().flat_map(|c| c.iter().copied()));
    Some(CliqueSeparator { q: q.clone(), a, b })
}

/// Finds a clique separator of `g`, or `None` if `g` has none.
///
/// Disconnected graphs yield the empty separator. Among the clique
/// separators found, the lexicographically smallest vertex set wins.
pub fn find_clique_separator(g: &Graph) -> Option<CliqueSeparator> {
    if g.n() < 2 {
        return None;
    }
    if !g.is_connected() {
        return split_by(g, &VertexSubset::empty());
    }
    let mut candidates: Vec<VertexSubset> = mcs_m_madj(g)
        .into_iter()
        .filter(|s| !s.is_empty() && g.is_clique(s))
        .map(VertexSubset::new)
        .collect();
    candidates.sort();
    candidates.dedup();
    candidates.iter().find_map(|q| split_by(g, q))
}

/// Recursively splits `g` along clique separators until every leaf is a
/// C-block. Each node keeps `A ∪ Q` on the left and `B ∪ Q` on the right.
pub fn build_tree(g: &Graph) -> CDecompTree {
    fn build(g: &Graph, span: VertexSubset) -> CDecompTree {
        let (h, map) = g.induced(&span).expect("span is within the host");
        match find_clique_separator(&h) {
            None => CDecompTree::Leaf { block: span },
            Some(sep) => {
                let q = sep.q.mapped(&map);
                let left = sep.a.mapped(&map).union(&q);
                let right = sep.b.mapped(&map).union(&q);
                CDecompTree::Node { separator: q, left: Box::new(build(g, left)), right: Box::new(build(g, right)) }
            }
        }
    }
    build(g, VertexSubset::full(g.n()))
}

#[derive(Debug, Error)]
pub enum ComposeError<E> {
    #[error("leaf solver failed on block {block}: {source}")]
    Leaf { block: VertexSubset, source: E },
    #[error("leaf solver returned an invalid coloring for block {block}: {source}")]
    InvalidLeaf { block: VertexSubset, source: ColoringError },
}

type Partial = BTreeMap<usize, usize>;

/// Chromatic number and proper coloring of `g` from its decomposition tree,
/// given an exact solver for the leaf blocks.
///
/// At each node the side with fewer colors is recolored: colors meeting the
/// separator are renamed to agree with the other side on it, the rest go
/// injectively to colors unused on the separator. The result therefore uses
/// exactly the maximum of the leaf chromatic numbers.
pub fn chi_compose<E, F>(g: &Graph, tree: &CDecompTree, mut leaf_chi: F) -> Result<(usize, MultiColoring), ComposeError<E>>
where
    F: FnMut(&VertexSubset, &Graph) -> Result<(usize, MultiColoring), E>,
{
    fn go<E, F>(g: &Graph, t: &CDecompTree, leaf_chi: &mut F) -> Result<(usize, Partial), ComposeError<E>>
    where
        F: FnMut(&VertexSubset, &Graph) -> Result<(usize, MultiColoring), E>,
    {
        match t {
            CDecompTree::Leaf { block } => {
                let (h, map) = g.induced(block).expect("leaf within host");
                let (k, col) = leaf_chi(block, &h).map_err(|source| ComposeError::Leaf { block: block.clone(), source })?;
                col.validate(&h, &VertexWeights::unit(h.n()), k)
                    .map_err(|source| ComposeError::InvalidLeaf { block: block.clone(), source })?;
                let single = col.as_single().expect("unit weights give single colors");
                Ok((k, map.iter().copied().zip(single).collect()))
            }
            CDecompTree::Node { separator, left, right } => {
                let l = go(g, left, leaf_chi)?;
                let r = go(g, right, leaf_chi)?;
                let ((k_big, big), (k_small, small)) = if l.0 >= r.0 { (l, r) } else { (r, l) };
                let mut rename = vec![usize::MAX; k_small];
                let mut taken = vec![false; k_big];
                for &q in separator.iter() {
                    rename[small[&q]] = big[&q];
                    taken[big[&q]] = true;
                }
                let mut free = (0..k_big).filter(|&c| !taken[c]);
                for slot in rename.iter_mut().filter(|c| **c == usize::MAX) {
                    *slot = free.next().expect("larger side has enough colors off the separator");
                }
                let mut merged = big;
                for (v, c) in small {
                    merged.entry(v).or_insert(rename[c]);
                }
                Ok((k_big, merged))
            }
        }
    }
    let (k, partial) = go(g, tree, &mut leaf_chi)?;
    let colors: Vec<usize> = (0..g.n()).map(|v| partial[&v]).collect();
    Ok((k, MultiColoring::from_single(&colors)))
}
