//! Induced-subgraph detectors for the forbidden patterns of the two graph
//! classes, with reproducible witnesses.
//!
//! Every detector is a backtracking enumeration in lexicographic vertex
//! order, so the first witness found is deterministic. A witness lists its
//! vertices in the canonical order of its pattern (path order, cycle order,
//! or the non-adjacent pair first for `Kp - e`), which makes
//! `induced(g, witness.vertices) == witness.pattern.graph()` an exact check.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{named, Graph, VertexSubset};

/// Default vertex limit for the enumeration-based perfectness check.
pub const DEFAULT_BERGE_CUTOFF: usize = 16;

/// Largest side size the bipartite Ramsey search accepts.
pub const RAMSEY_SEARCH_CUTOFF: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DetectError {
    #[error("Kp-e needs p >= 3, got {0}")]
    PatternTooSmall(usize),
    #[error("desk-scale limit: {what} on {size} vertices exceeds cutoff {limit}")]
    DeskScaleLimit { what: &'static str, size: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no homogeneous pair of size {0} exists")]
    NoWitness(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "name", content = "size")]
pub enum Pattern {
    P5,
    CoP5,
    C5,
    /// `K_p - e` for the given `p`.
    KpMinusE(usize),
    O3,
    /// Chordless cycle of the given odd length >= 5.
    OddHole(usize),
    /// Complement of an odd hole of the given length.
    OddAntihole(usize),
}

impl Pattern {
    /// The pattern as a graph on `0..k`, in canonical witness order.
    pub fn graph(&self) -> Graph {
        match *self {
            Pattern::P5 => named::path(5),
            Pattern::CoP5 => named::path(5).complement(),
            Pattern::C5 => named::cycle(5),
            Pattern::KpMinusE(p) => named::kp_minus_e(p),
            Pattern::O3 => named::edgeless(3),
            Pattern::OddHole(len) => named::cycle(len),
            Pattern::OddAntihole(len) => named::cycle(len).complement(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::P5 => write!(f, "P5"),
            Pattern::CoP5 => write!(f, "co-P5"),
            Pattern::C5 => write!(f, "C5"),
            Pattern::KpMinusE(p) => write!(f, "K{p}-e"),
            Pattern::O3 => write!(f, "O3"),
            Pattern::OddHole(l) => write!(f, "odd hole C{l}"),
            Pattern::OddAntihole(l) => write!(f, "odd antihole co-C{l}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// True iff the listed vertices induce exactly the pattern, in order.
    pub fn verify(&self, g: &Graph) -> bool {
        let distinct = VertexSubset::new(self.vertices.iter().copied()).len() == self.vertices.len();
        distinct
            && g.induced(&self.vertices).map(|(h, _)| h == self.pattern.graph()).unwrap_or(false)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "induced {} on vertices {:?}", self.pattern, self.vertices)
    }
}

/// The two hereditary classes handled by the solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphClass {
    /// `{P5, co-P5}`-free graphs.
    P5CoP5,
    /// `{P5, K_p - e}`-free graphs.
    P5Kpe { p: usize },
}

impl GraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::P5CoP5 => "p5-cop5",
            GraphClass::P5Kpe { .. } => "p5-kpe",
        }
    }

    pub fn p(&self) -> Option<usize> {
        match self {
            GraphClass::P5CoP5 => None,
            GraphClass::P5Kpe { p } => Some(*p),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::P5CoP5 => write!(f, "{{P5, co-P5}}-free"),
            GraphClass::P5Kpe { p } => write!(f, "{{P5, K{p}-e}}-free"),
        }
    }
}

/// Induced path on `len` vertices, in path order.
fn find_induced_path(g: &Graph, len: usize) -> Option<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, len: usize) -> bool {
        if path.len() == len {
            return true;
        }
        let last = *path.last().unwrap();
        let before = &path[..path.len() - 1];
        let candidates: Vec<usize> = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&x| !path.contains(&x) && before.iter().all(|&y| !g.has_edge(x, y)))
            .collect();
        for x in candidates {
            path.push(x);
            if extend(g, path, len) {
                return true;
            }
            path.pop();
        }
        false
    }
    if len == 0 {
        return Some(Vec::new());
    }
    let mut path = Vec::with_capacity(len);
    for s in 0..g.n() {
        path.push(s);
        if extend(g, &mut path, len) {
            return Some(path);
        }
        path.pop();
    }
    None
}

/// Walks chordless cycles whose smallest vertex comes first; `accept`
/// decides on each closed cycle. Paths are cut at `max_len` vertices.
fn search_chordless_cycles(
    g: &Graph,
    max_len: usize,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        max_len: usize,
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        let inner = if path.len() > 1 { &path[1..path.len() - 1] } else { &[][..] };
        let candidates: Vec<usize> = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&x| x > s && !path.contains(&x) && inner.iter().all(|&y| !g.has_edge(x, y)))
            .collect();
        for x in candidates {
            path.push(x);
            if path.len() > 2 && g.has_edge(x, s) {
                if path.len() >= 4 && accept(path) {
                    return true;
                }
            } else if path.len() < max_len && extend(g, path, max_len, accept) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::new();
    for s in 0..g.n() {
        path.push(s);
        if extend(g, &mut path, max_len, accept) {
            return Some(path);
        }
        path.pop();
    }
    None
}

pub fn find_induced_p5(g: &Graph) -> Option<Witness> {
    find_induced_path(g, 5).map(|vertices| Witness { pattern: Pattern::P5, vertices })
}

/// co-P5 vertices are listed in the path order of the complement's P5.
pub fn find_induced_co_p5(g: &Graph) -> Option<Witness> {
    find_induced_path(&g.complement(), 5).map(|vertices| Witness { pattern: Pattern::CoP5, vertices })
}

pub fn find_induced_c5(g: &Graph) -> Option<Witness> {
    search_chordless_cycles(g, 5, &mut |c| c.len() == 5)
        .map(|vertices| Witness { pattern: Pattern::C5, vertices })
}

/// Induced `K_p - e`; the non-adjacent pair is listed first.
pub fn find_induced_kp_minus_e(g: &Graph, p: usize) -> Result<Option<Witness>, DetectError> {
    if p < 3 {
        return Err(DetectError::PatternTooSmall(p));
    }
    fn clique_in(g: &Graph, cands: &[usize], need: usize, acc: &mut Vec<usize>) -> bool {
        if acc.len() == need {
            return true;
        }
        for (i, &x) in cands.iter().enumerate() {
            if cands.len() - i < need - acc.len() {
                break;
            }
            acc.push(x);
            let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&y| g.has_edge(x, y)).collect();
            if clique_in(g, &next, need, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    for a in 0..g.n() {
        if g.degree(a) < p - 2 {
            continue;
        }
        for b in a + 1..g.n() {
            if g.has_edge(a, b) || g.degree(b) < p - 2 {
                continue;
            }
            let common: Vec<usize> = g.neighbors(a).iter().copied().filter(|&x| g.has_edge(b, x)).collect();
            let mut acc = Vec::new();
            if clique_in(g, &common, p - 2, &mut acc) {
                let mut vertices = vec![a, b];
                vertices.extend(acc);
                return Ok(Some(Witness { pattern: Pattern::KpMinusE(p), vertices }));
            }
        }
    }
    Ok(None)
}

/// Lexicographically first independent triple, if any.
pub fn find_independent_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            if let Some(w) = (v + 1..n).find(|&w| !g.has_edge(u, w) && !g.has_edge(v, w)) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

pub fn is_o3_free(g: &Graph) -> bool {
    find_independent_triple(g).is_none()
}

/// An odd hole of `g` or an odd antihole (found as a hole of the
/// complement), or `None` when `g` is Berge. Refuses graphs above `cutoff`.
pub fn find_odd_hole_or_antihole(g: &Graph, cutoff: usize) -> Result<Option<Witness>, DetectError> {
    if g.n() > cutoff {
        return Err(DetectError::DeskScaleLimit { what: "Berge check", size: g.n(), limit: cutoff });
    }
    let mut odd = |c: &[usize]| c.len() >= 5 && c.len() % 2 == 1;
    if let Some(c) = search_chordless_cycles(g, g.n(), &mut odd) {
        return Ok(Some(Witness { pattern: Pattern::OddHole(c.len()), vertices: c }));
    }
    if let Some(c) = search_chordless_cycles(&g.complement(), g.n(), &mut odd) {
        return Ok(Some(Witness { pattern: Pattern::OddAntihole(c.len()), vertices: c }));
    }
    Ok(None)
}

pub fn is_berge_small(g: &Graph, cutoff: usize) -> Result<bool, DetectError> {
    find_odd_hole_or_antihole(g, cutoff).map(|w| w.is_none())
}

/// Exactly the 5-cycle: five vertices, 2-regular, connected.
pub fn is_c5(g: &Graph) -> bool {
    g.n() == 5 && (0..5).all(|v| g.degree(v) == 2) && g.is_connected()
}

/// `Ok(())` if `g` avoids every forbidden pattern of `class`, otherwise the
/// first violation found (P5 is checked before the class's second pattern).
pub fn class_membership(g: &Graph, class: GraphClass) -> Result<(), Witness> {
    if let Some(w) = find_induced_p5(g) {
        return Err(w);
    }
    let second = match class {
        GraphClass::P5CoP5 => find_induced_co_p5(g),
        GraphClass::P5Kpe { p } => find_induced_kp_minus_e(g, p).unwrap_or_else(|e| panic!("{e}")),
    };
    match second {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

/// Largest `t` with `s * t^s <= n`, i.e. `floor((n / s)^(1/s))`.
pub fn ramsey_target(n: usize, s: usize) -> usize {
    let fits = |t: usize| {
        let mut acc: u128 = s as u128;
        for _ in 0..s {
            acc = acc.saturating_mul(t as u128);
        }
        acc <= n as u128
    };
    let mut t = 0;
    while fits(t + 1) {
        t += 1;
    }
    t
}

/// Subsets `A' ⊆ A`, `B' ⊆ B` of size `floor((n/s)^(1/s))` whose induced
/// bipartite graph is complete or empty, found by exhaustive search over
/// subsets of `A`.
///
/// `A` and `B` must partition the vertices into independent sets of equal
/// size `n > s^(s+1)`; `n` is capped at [`RAMSEY_SEARCH_CUTOFF`].
pub fn bipartite_ramsey_witness(
    g: &Graph,
    a: &VertexSubset,
    b: &VertexSubset,
    s: usize,
) -> Result<(VertexSubset, VertexSubset), DetectError> {
    let pre = |m: String| Err(DetectError::Precondition(m));
    if s == 0 {
        return pre("s must be positive".into());
    }
    g.check_subset(a).map_err(|e| DetectError::Precondition(e.to_string()))?;
    g.check_subset(b).map_err(|e| DetectError::Precondition(e.to_string()))?;
    if !a.intersection(b).is_empty() || a.len() + b.len() != g.n() {
        return pre("parts must partition the vertex set".into());
    }
    if a.len() != b.len() {
        return pre(format!("parts have sizes {} and {}", a.len(), b.len()));
    }
    if !g.is_independent(a) || !g.is_independent(b) {
        return pre("parts must be independent sets".into());
    }
    let n = a.len();
    let threshold = (s as u128).checked_pow(s as u32 + 1).unwrap_or(u128::MAX);
    if (n as u128) <= threshold {
        return pre(format!("part size {n} must exceed s^(s+1) = {threshold}"));
    }
    if n > RAMSEY_SEARCH_CUTOFF {
        return Err(DetectError::DeskScaleLimit { what: "bipartite Ramsey search", size: n, limit: RAMSEY_SEARCH_CUTOFF });
    }
    let t = ramsey_target(n, s);
    let mut chosen = Vec::with_capacity(t);
    fn search(
        g: &Graph,
        a: &[usize],
        b: &[usize],
        t: usize,
        start: usize,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if chosen.len() == t {
            for full in [true, false] {
                let side: Vec<usize> = b
                    .iter()
                    .copied()
                    .filter(|&y| chosen.iter().all(|&x| g.has_edge(x, y) == full))
                    .take(t)
                    .collect();
                if side.len() == t {
                    return Some(side);
                }
            }
            return None;
        }
        for i in start..a.len() {
            chosen.push(a[i]);
            if let Some(found) = search(g, a, b, t, i + 1, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    match search(g, a, b, t, 0, &mut chosen) {
        Some(side) => Ok((VertexSubset::new(chosen), VertexSubset::new(side))),
        None => Err(DetectError::NoWitness(t)),
    }
}
