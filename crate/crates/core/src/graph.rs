//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is kept twice: as bitset rows for constant-time adjacency tests
//! and as sorted neighbor lists for iteration.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const WORD: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
}

/// A sorted, duplicate-free set of vertex ids of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSubset(v)
    }

    pub fn empty() -> Self {
        VertexSubset(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        VertexSubset((0..n).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSubset) -> VertexSubset {
        VertexSubset(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Maps local ids (e.g. of an induced subgraph) back through `map`.
    pub fn mapped(&self, map: &[usize]) -> VertexSubset {
        VertexSubset::new(self.0.iter().map(|&v| map[v]))
    }
}

impl Deref for VertexSubset {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSubset::new(iter)
    }
}

impl From<Vec<usize>> for VertexSubset {
    fn from(v: Vec<usize>) -> Self {
        VertexSubset::new(v)
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Serialized as `{"n": .., "edges": [[u, v], ..]}`.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr { n: self.n, edges: self.edges().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let r = Repr::deserialize(d)?;
        Graph::from_edges(r.n, &r.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph { n, words, rows: vec![0; words * n], neighbors: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_bit(u, v);
                    g.set_bit(v, u);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
    }

    fn rebuild_lists(&mut self) {
        for u in 0..self.n {
            self.neighbors[u] = (0..self.n).filter(|&v| self.has_edge(u, v)).collect();
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Bitset row of `v`; bit `u` is set iff `u` is adjacent to `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    pub fn check_subset(&self, s: &[usize]) -> Result<(), GraphError> {
        match s.iter().find(|&&v| v >= self.n) {
            Some(&vertex) => Err(GraphError::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in the order given.
    /// The returned map sends each new id back to its id in `self`.
    pub fn induced(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_subset(s)?;
        let map = s.to_vec();
        let g = Graph::from_fn(map.len(), |i, j| map[i] != map[j] && self.has_edge(map[i], map[j]));
        Ok((g, map))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSubset> {
        self.components_within(&VertexSubset::full(self.n))
    }

    /// Components of the subgraph induced by `within`, in host ids.
    pub fn components_within(&self, within: &[usize]) -> Vec<VertexSubset> {
        let mut allowed = vec![false; self.n];
        for &v in within {
            allowed[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for &start in within {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &self.neighbors[x] {
                    if allowed[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(VertexSubset::new(comp));
        }
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Empty sets and singletons are cliques.
    pub fn is_clique(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_independent(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges).expect("permutation keeps edges valid")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges: Vec<_> = self.edges().collect();
        edges.extend(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(self.n + other.n, &edges).expect("valid union")
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n;
        Graph::from_fn(self.n + other.n, |u, v| match (u < off, v < off) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - off, v - off),
            _ => true,
        })
    }
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::empty(n)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// `K_p` minus the edge `{0, 1}`.
    pub fn kp_minus_e(p: usize) -> Graph {
        Graph::from_fn(p, |u, v| !(u == 0 && v == 1))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    /// Two triangles `{0,1,2}` and `{2,3,4}` sharing vertex 2.
    pub fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn complement_of_triangle_is_edgeless() {
        assert_eq!(complete(3).complement(), edgeless(3));
    }

    #[test]
    fn c5_is_self_complementary() {
        // 0-1-2-3-4-0 complement is 0-2-4-1-3-0; relabel along that cycle
        let c = cycle(5).complement();
        let mut perm = vec![0; 5];
        for (pos, v) in [0, 2, 4, 1, 3].into_iter().enumerate() {
            perm[v] = pos;
        }
        assert_eq!(c.permuted(&perm), cycle(5));
    }

    #[test]
    fn induced_subgraphs() {
        let (p, map) = cycle(5).induced(&[1, 2, 3]).unwrap();
        assert_eq!(p, path(3));
        assert_eq!(map, vec![1, 2, 3]);
        let g = petersen();
        assert_eq!(g.induced(&(0..10).collect::<Vec<_>>()).unwrap().0, g);
        assert_eq!(kp_minus_e(4).induced(&[2, 3]).unwrap().0, complete(2));
        assert!(matches!(g.induced(&[0, 10]), Err(GraphError::VertexOutOfRange { vertex: 10, .. })));
    }

    #[test]
    fn components_ordered() {
        assert_eq!(edgeless(3).components().len(), 3);
        let g = complete(2).disjoint_union(&complete(3));
        let comps = g.components();
        assert_eq!(comps.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(petersen().components().len(), 1);
    }

    #[test]
    fn clique_checks() {
        let g = kp_minus_e(4);
        assert!(g.is_clique(&[2, 3]));
        assert!(!g.is_clique(&[0, 1]));
        assert!(g.is_clique(&[]));
        assert!(g.is_clique(&[1]));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap().m(), 1);
    }

    #[test]
    fn wide_graph_bitset_rows() {
        let g = cycle(130);
        assert!(g.has_edge(0, 129));
        assert!(g.has_edge(64, 65));
        assert!(!g.has_edge(63, 65));
        assert_eq!(g.m(), 130);
    }

    #[test]
    fn subset_ops() {
        let a = VertexSubset::new([3, 1, 2, 1]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        let b = VertexSubset::new([2, 5]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 5]);
        assert_eq!(a.intersection(&b).as_slice(), &[2]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 3]);
        assert_eq!(a.to_string(), "{1,2,3}");
    }
}
