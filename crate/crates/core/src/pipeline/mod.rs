//! End-to-end chromatic number solvers for the two graph classes.
//!
//! `{P5, co-P5}`-free graphs go through the modular decomposition: prime
//! quotients are either a 5-cycle (solved directly) or perfect (solved
//! exactly). `{P5, Kp-e}`-free graphs go through the clique-separator
//! decomposition: O3-free C-blocks are colored through a maximum matching
//! of their complement, anything else falls back to the exact solver.
//!
//! The exact solver stands in for two black boxes at desk scale (perfect
//! graph coloring and fixed-k colorability of P5-free graphs); the route
//! log in [`SolveReport`] records which blocks took which path.

pub mod generate;
pub mod verify;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::cliquesep::{build_tree, chi_compose, ComposeError};
use crate::coloring::{ColoringError, MultiColoring, VertexWeights};
use crate::detect::{class_membership, find_odd_hole_or_antihole, is_c5, is_o3_free, GraphClass, Witness, DEFAULT_BERGE_CUTOFF};
use crate::graph::{Graph, VertexSubset};
use crate::matching::chi_o3_free;
use crate::modular::{chi_w, md_tree, ChiWError};
use crate::oracle::{chi_exact, chi_w_exact, clique_number_exact, CutoffError, OracleLimits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveConfig {
    pub limits: OracleLimits,
    /// Prime quotients up to this size are checked to be Berge before they
    /// are handed to the exact solver.
    pub berge_cutoff: usize,
    /// Record wall-clock time in the report. Off by default so reports are
    /// byte-for-byte reproducible.
    pub timings: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { limits: OracleLimits::default(), berge_cutoff: DEFAULT_BERGE_CUTOFF, timings: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// O3-free C-block colored through a maximum matching of its complement.
    O3Matching,
    /// Prime quotient isomorphic to C5, solved as a weighted 5-cycle.
    PrimeC5,
    /// Perfect prime quotient, solved by the exact weighted oracle.
    PerfectExact,
    /// C-block with an independent triple, solved by the exact oracle.
    ExactFallback,
}

impl Route {
    pub fn name(&self) -> &'static str {
        match self {
            Route::O3Matching => "o3-matching",
            Route::PrimeC5 => "prime-c5",
            Route::PerfectExact => "perfect-exact",
            Route::ExactFallback => "exact-fallback",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRoute {
    /// Vertices of the C-block, or the span of the prime node.
    pub block: VertexSubset,
    /// Vertices the solver actually saw (block size or quotient size).
    pub size: usize,
    pub route: Route,
    /// Chromatic number (weighted, for quotients) of what the solver saw.
    pub chi: usize,
    /// Clique number of a fallback block.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub omega: Option<usize>,
    /// Whether a perfect quotient was confirmed Berge by enumeration.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub berge_checked: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub class: String,
    pub p: Option<usize>,
    pub n: usize,
    pub chi: usize,
    /// Vertex → sorted colors (`0..chi`).
    pub coloring: BTreeMap<usize, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub routes: Vec<BlockRoute>,
    pub tree: Value,
    pub ms: Option<f64>,
}

impl SolveReport {
    pub fn multicoloring(&self) -> MultiColoring {
        MultiColoring::from_map(&self.coloring, self.n).expect("report coloring covers 0..n")
    }

    pub fn route_counts(&self) -> BTreeMap<Route, usize> {
        let mut out = BTreeMap::new();
        for r in &self.routes {
            *out.entry(r.route).or_insert(0) += 1;
        }
        out
    }

    /// Revalidates the stored coloring against `g` (and the recorded weights).
    pub fn validate(&self, g: &Graph) -> Result<(), ColoringError> {
        let w = match &self.weights {
            Some(w) => VertexWeights::new(w.clone())?,
            None => VertexWeights::unit(g.n()),
        };
        self.multicoloring().validate(g, &w, self.chi)
    }
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("input is not {class}: {witness}")]
    NotInClass { class: GraphClass, witness: Witness },
    #[error("Kp-e needs p >= 3, got {0}")]
    InvalidP(usize),
    #[error("{context}: {source}")]
    Cutoff { context: String, source: CutoffError },
    #[error("weights cover {got} vertices, graph has {expected}")]
    WeightsMismatch { expected: usize, got: usize },
    #[error("vertex weights are only supported for p5-cop5")]
    WeightsUnsupported,
    #[error("internal contract violation: {0}")]
    Internal(String),
}

/// Weighted chromatic number of a 5-cycle with an optimal multicoloring.
///
/// Color classes of C5 have at most two vertices, and two vertices can share
/// a color iff they are non-adjacent, i.e. consecutive on the complementary
/// 5-cycle. An optimal coloring is therefore `W - M` colors where `M` is a
/// maximum `w`-capacitated matching on that cycle.
pub fn chi_w_c5(q: &Graph, w: &VertexWeights) -> (usize, MultiColoring) {
    assert!(is_c5(q), "weighted C5 solver needs a 5-cycle");
    let mut order = vec![0usize];
    while order.len() < 5 {
        let last = *order.last().unwrap();
        let next = q.neighbors(last).iter().copied().find(|v| !order.contains(v)).unwrap();
        order.push(next);
    }
    // complement cycle d0..d4: every second vertex of the cycle order
    let d: Vec<usize> = (0..5).map(|i| order[(2 * i) % 5]).collect();
    let cap: Vec<u64> = d.iter().map(|&v| u64::from(w.get(v))).collect();
    let mut best: (u64, [u64; 5]) = (0, [0; 5]);
    for t in 0..=cap[0].min(cap[1]) {
        let mut r = cap.clone();
        r[0] -= t;
        r[1] -= t;
        let mut y = [t, 0, 0, 0, 0];
        // path d1-d2-d3-d4-d0, saturated greedily from the d1 end
        for i in 1..5 {
            let j = (i + 1) % 5;
            y[i] = r[i].min(r[j]);
            r[i] -= y[i];
            r[j] -= y[i];
        }
        let total: u64 = y.iter().sum();
        if total > best.0 {
            best = (total, y);
        }
    }
    let mut sets = vec![Vec::new(); 5];
    let mut next = 0usize;
    for (i, &yi) in best.1.iter().enumerate() {
        let (a, b) = (d[i], d[(i + 1) % 5]);
        for _ in 0..yi {
            sets[a].push(next);
            sets[b].push(next);
            next += 1;
        }
    }
    for (v, set) in sets.iter_mut().enumerate() {
        while set.len() < w.get(v) as usize {
            set.push(next);
            next += 1;
        }
    }
    (next, MultiColoring::new(sets))
}

fn start_clock(cfg: &SolveConfig) -> Option<Instant> {
    cfg.timings.then(Instant::now)
}

fn elapsed_ms(t: Option<Instant>) -> Option<f64> {
    t.map(|t| t.elapsed().as_secs_f64() * 1e3)
}

/// Weighted chromatic number of a `{P5, co-P5}`-free graph (unit weights
/// when `w` is `None`).
pub fn solve_p5_cop5(g: &Graph, w: Option<&VertexWeights>, cfg: &SolveConfig) -> Result<SolveReport, SolveError> {
    let clock = start_clock(cfg);
    let weights = w.cloned().unwrap_or_else(|| VertexWeights::unit(g.n()));
    if weights.len() != g.n() {
        return Err(SolveError::WeightsMismatch { expected: g.n(), got: weights.len() });
    }
    class_membership(g, GraphClass::P5CoP5)
        .map_err(|witness| SolveError::NotInClass { class: GraphClass::P5CoP5, witness })?;
    let recorded_weights = (!weights.is_unit()).then(|| weights.as_slice().to_vec());
    if g.n() == 0 {
        return Ok(SolveReport {
            class: GraphClass::P5CoP5.name().into(),
            p: None,
            n: 0,
            chi: 0,
            coloring: BTreeMap::new(),
            weights: recorded_weights,
            routes: Vec::new(),
            tree: Value::Null,
            ms: elapsed_ms(clock),
        });
    }
    let tree = md_tree(g);
    let mut routes = Vec::new();
    let solved = chi_w(g, &tree, &weights, |span, q, wq| {
        if is_c5(q) {
            let (k, col) = chi_w_c5(q, wq);
            routes.push(BlockRoute { block: span.clone(), size: 5, route: Route::PrimeC5, chi: k, omega: None, berge_checked: None });
            return Ok((k, col));
        }
        let checked = q.n() <= cfg.berge_cutoff;
        if checked {
            if let Some(hole) = find_odd_hole_or_antihole(q, cfg.berge_cutoff).expect("within cutoff") {
                return Err(SolveError::Internal(format!(
                    "prime quotient of {span} is neither C5 nor Berge ({hole})"
                )));
            }
        }
        let (k, col) = chi_w_exact(q, wq, &cfg.limits).map_err(|source| SolveError::Cutoff {
            context: format!("perfect prime quotient on {} vertices (node {span})", q.n()),
            source,
        })?;
        routes.push(BlockRoute {
            block: span.clone(),
            size: q.n(),
            route: Route::PerfectExact,
            chi: k,
            omega: None,
            berge_checked: Some(checked),
        });
        Ok((k, col))
    });
    let (chi, coloring) = solved.map_err(|e| match e {
        ChiWError::Prime { source, .. } => source,
        other => SolveError::Internal(other.to_string()),
    })?;
    coloring.validate(g, &weights, chi).map_err(|e| SolveError::Internal(e.to_string()))?;
    Ok(SolveReport {
        class: GraphClass::P5CoP5.name().into(),
        p: None,
        n: g.n(),
        chi,
        coloring: coloring.to_map(),
        weights: recorded_weights,
        routes,
        tree: tree.to_json(),
        ms: elapsed_ms(clock),
    })
}

/// Chromatic number of a `{P5, Kp-e}`-free graph.
pub fn solve_p5_kpe(g: &Graph, p: usize, cfg: &SolveConfig) -> Result<SolveReport, SolveError> {
    let clock = start_clock(cfg);
    if p < 3 {
        return Err(SolveError::InvalidP(p));
    }
    let class = GraphClass::P5Kpe { p };
    class_membership(g, class).map_err(|witness| SolveError::NotInClass { class, witness })?;
    let tree = build_tree(g);
    let mut routes = Vec::new();
    let solved = chi_compose(g, &tree, |block, h| {
        if is_o3_free(h) {
            let (k, col) = chi_o3_free(h).expect("checked O3-free");
            routes.push(BlockRoute { block: block.clone(), size: h.n(), route: Route::O3Matching, chi: k, omega: None, berge_checked: None });
            return Ok((k, col));
        }
        let omega = clique_number_exact(h, &cfg.limits).ok().map(|(w, _)| w);
        let (k, col) = chi_exact(h, &cfg.limits).map_err(|source| SolveError::Cutoff {
            context: format!(
                "C-block {block} with an independent triple (omega = {})",
                omega.map_or_else(|| "unknown".to_string(), |w| w.to_string())
            ),
            source,
        })?;
        routes.push(BlockRoute { block: block.clone(), size: h.n(), route: Route::ExactFallback, chi: k, omega, berge_checked: None });
        Ok((k, col))
    });
    let (chi, coloring) = solved.map_err(|e| match e {
        ComposeError::Leaf { source, .. } => source,
        other => SolveError::Internal(other.to_string()),
    })?;
    coloring
        .validate(g, &VertexWeights::unit(g.n()), chi)
        .map_err(|e| SolveError::Internal(e.to_string()))?;
    Ok(SolveReport {
        class: class.name().into(),
        p: Some(p),
        n: g.n(),
        chi,
        coloring: coloring.to_map(),
        weights: None,
        routes,
        tree: serde_json::to_value(&tree).expect("tree serializes"),
        ms: elapsed_ms(clock),
    })
}

/// Dispatches on the class.
pub fn solve(g: &Graph, class: GraphClass, w: Option<&VertexWeights>, cfg: &SolveConfig) -> Result<SolveReport, SolveError> {
    match class {
        GraphClass::P5CoP5 => solve_p5_cop5(g, w, cfg),
        GraphClass::P5Kpe { p } => {
            if w.is_some_and(|w| !w.is_unit()) {
                return Err(SolveError::WeightsUnsupported);
            }
            solve_p5_kpe(g, p, cfg)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::Pattern;
    use crate::graph::named::*;

    fn cfg() -> SolveConfig {
        SolveConfig::default()
    }

    #[test]
    fn c5_via_prime_route() {
        let r = solve_p5_cop5(&cycle(5), None, &cfg()).unwrap();
        assert_eq!(r.chi, 3);
        assert_eq!(r.routes.len(), 1);
        assert_eq!(r.routes[0].route, Route::PrimeC5);
        r.validate(&cycle(5)).unwrap();
    }

    #[test]
    fn p4_via_perfect_route() {
        let r = solve_p5_cop5(&path(4), None, &cfg()).unwrap();
        assert_eq!(r.chi, 2);
        assert_eq!(r.routes[0].route, Route::PerfectExact);
        assert_eq!(r.routes[0].berge_checked, Some(true));
    }

    #[test]
    fn cograph_uses_no_prime_route() {
        let g = complete(3).join(&edgeless(2));
        let r = solve_p5_cop5(&g, None, &cfg()).unwrap();
        assert_eq!(r.chi, 4);
        assert!(r.routes.is_empty());
    }

    #[test]
    fn weighted_c5_formula() {
        let c5 = cycle(5);
        let lim = OracleLimits::default();
        for ws in [[1, 1, 1, 1, 1], [3, 1, 2, 2, 1], [5, 5, 1, 1, 1], [2, 2, 2, 2, 2], [1, 4, 1, 4, 1], [7, 1, 1, 1, 1]] {
            let w = VertexWeights::new(ws.to_vec()).unwrap();
            let (k, col) = chi_w_c5(&c5, &w);
            col.validate(&c5, &w, k).unwrap();
            assert_eq!(k, chi_w_exact(&c5, &w, &lim).unwrap().0, "{ws:?}");
        }
        // relabeled cycle
        let q = cycle(5).permuted(&[3, 0, 4, 1, 2]);
        let w = VertexWeights::new(vec![2, 3, 1, 2, 3]).unwrap();
        let (k, col) = chi_w_c5(&q, &w);
        col.validate(&q, &w, k).unwrap();
        assert_eq!(k, chi_w_exact(&q, &w, &lim).unwrap().0);
    }

    #[test]
    fn membership_violations() {
        let e = solve_p5_cop5(&path(5), None, &cfg()).unwrap_err();
        assert!(matches!(e, SolveError::NotInClass { witness: Witness { pattern: Pattern::P5, .. }, .. }));
        let e = solve_p5_kpe(&kp_minus_e(4), 4, &cfg()).unwrap_err();
        assert!(matches!(e, SolveError::NotInClass { witness: Witness { pattern: Pattern::KpMinusE(4), .. }, .. }));
        assert!(matches!(solve_p5_kpe(&cycle(5), 2, &cfg()), Err(SolveError::InvalidP(2))));
    }

    #[test]
    fn kpe_examples() {
        for n in 1..7 {
            let r = solve_p5_kpe(&complete(n), 4, &cfg()).unwrap();
            assert_eq!(r.chi, n);
            assert_eq!(r.routes.len(), 1);
            assert_eq!(r.routes[0].route, Route::O3Matching);
        }
        let r = solve_p5_kpe(&cycle(5), 4, &cfg()).unwrap();
        assert_eq!((r.chi, r.routes.len(), r.routes[0].route), (3, 1, Route::O3Matching));
        let r = solve_p5_kpe(&bowtie(), 4, &cfg()).unwrap();
        assert_eq!(r.chi, 3);
        assert_eq!(r.routes.len(), 2);
        assert!(r.routes.iter().all(|b| b.route == Route::O3Matching));
        r.validate(&bowtie()).unwrap();
    }

    #[test]
    fn kpe_fallback_route() {
        // K3,3 is {P5, K4-e}-free, has no clique separator and an independent triple
        let r = solve_p5_kpe(&complete_bipartite(3, 3), 4, &cfg()).unwrap();
        assert_eq!(r.chi, 2);
        assert_eq!(r.routes[0].route, Route::ExactFallback);
        assert_eq!(r.routes[0].omega, Some(2));
    }

    #[test]
    fn weighted_solve_records_weights() {
        let w = VertexWeights::new(vec![1, 2, 3, 1, 2]).unwrap();
        let r = solve_p5_cop5(&cycle(5), Some(&w), &cfg()).unwrap();
        assert_eq!(r.weights.as_deref(), Some(&[1, 2, 3, 1, 2][..]));
        r.validate(&cycle(5)).unwrap();
        let bad = VertexWeights::unit(4);
        assert!(matches!(solve_p5_cop5(&cycle(5), Some(&bad), &cfg()), Err(SolveError::WeightsMismatch { .. })));
    }

    #[test]
    fn empty_graph() {
        assert_eq!(solve_p5_cop5(&Graph::empty(0), None, &cfg()).unwrap().chi, 0);
        assert_eq!(solve_p5_kpe(&Graph::empty(0), 4, &cfg()).unwrap().chi, 0);
    }
}
