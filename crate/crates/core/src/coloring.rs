//! Vertex weights and (multi)colorings.
//!
//! An ordinary coloring is the unit-weight case of a multicoloring: every
//! vertex receives exactly one color. Colors are `0..k`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices, graph has {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {vertex} has {got} colors, weight demands {expected}")]
    WrongCount { vertex: usize, expected: u32, got: usize },
    #[error("vertex {vertex} repeats color {color}")]
    Repeated { vertex: usize, color: usize },
    #[error("adjacent vertices {u} and {v} share color {color}")]
    Conflict { u: usize, v: usize, color: usize },
    #[error("vertex {vertex} uses color {color} outside palette 0..{k}")]
    OutOfPalette { vertex: usize, color: usize, k: usize },
    #[error("weight of vertex {0} must be at least 1")]
    ZeroWeight(usize),
}

/// Positive integer demand per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexWeights(Vec<u32>);

impl VertexWeights {
    pub fn new(w: Vec<u32>) -> Result<Self, ColoringError> {
        match w.iter().position(|&x| x == 0) {
            Some(v) => Err(ColoringError::ZeroWeight(v)),
            None => Ok(VertexWeights(w)),
        }
    }

    pub fn unit(n: usize) -> Self {
        VertexWeights(vec![1; n])
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&x| x == 1)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Weights restricted to `vertices`, in that order.
    pub fn restrict(&self, vertices: &[usize]) -> VertexWeights {
        VertexWeights(vertices.iter().map(|&v| self.0[v]).collect())
    }
}

/// Color sets per vertex, plus the palette size `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiColoring {
    sets: Vec<Vec<usize>>,
    k: usize,
}

impl MultiColoring {
    /// Builds from per-vertex color sets; each set is sorted. `k` is the
    /// palette size, i.e. one more than the largest color.
    pub fn new(mut sets: Vec<Vec<usize>>) -> Self {
        for s in &mut sets {
            s.sort_unstable();
        }
        let k = sets.iter().flatten().map(|&c| c + 1).max().unwrap_or(0);
        MultiColoring { sets, k }
    }

    /// One color per vertex.
    pub fn from_single(colors: &[usize]) -> Self {
        MultiColoring::new(colors.iter().map(|&c| vec![c]).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn colors(&self, v: usize) -> &[usize] {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// The single color of every vertex, if this is an ordinary coloring.
    pub fn as_single(&self) -> Option<Vec<usize>> {
        self.sets.iter().map(|s| if s.len() == 1 { Some(s[0]) } else { None }).collect()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut used = vec![false; self.k];
        for &c in self.sets.iter().flatten() {
            used[c] = true;
        }
        used.into_iter().filter(|&u| u).count()
    }

    /// Color classes, indexed by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, s) in self.sets.iter().enumerate() {
            for &c in s {
                out[c].push(v);
            }
        }
        out
    }

    /// Checks `|c(v)| = w(v)`, no repeated colors, disjoint sets on edges
    /// and all colors below `k`.
    pub fn validate(&self, g: &Graph, w: &VertexWeights, k: usize) -> Result<(), ColoringError> {
        if self.sets.len() != g.n() || w.len() != g.n() {
            return Err(ColoringError::WrongLength { expected: g.n(), got: self.sets.len() });
        }
        for (v, s) in self.sets.iter().enumerate() {
            if s.len() != w.get(v) as usize {
                return Err(ColoringError::WrongCount { vertex: v, expected: w.get(v), got: s.len() });
            }
            if let Some(pair) = s.windows(2).find(|p| p[0] == p[1]) {
                return Err(ColoringError::Repeated { vertex: v, color: pair[0] });
            }
            if let Some(&c) = s.iter().find(|&&c| c >= k) {
                return Err(ColoringError::OutOfPalette { vertex: v, color: c, k });
            }
        }
        for (u, v) in g.edges() {
            let (a, b) = (&self.sets[u], &self.sets[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return Err(ColoringError::Conflict { u, v, color: a[i] }),
                }
            }
        }
        Ok(())
    }

    /// JSON-friendly view: vertex id → sorted colors.
    pub fn to_map(&self) -> BTreeMap<usize, Vec<usize>> {
        self.sets.iter().cloned().enumerate().collect()
    }

    pub fn from_map(map: &BTreeMap<usize, Vec<usize>>, n: usize) -> Result<Self, ColoringError> {
        let mut sets = vec![Vec::new(); n];
        for (&v, cs) in map {
            if v >= n {
                return Err(ColoringError::WrongLength { expected: n, got: v + 1 });
            }
            sets[v] = cs.clone();
        }
        Ok(MultiColoring::new(sets))
    }
}
