//! Empirical checks of the structural lemmas and oracle cross-checks.
//!
//! Every report is a plain serializable value computed from a seed, so two
//! runs with the same arguments produce identical JSON.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::Serialize;

use super::generate::{for_each_graph, gen_p5_cop5_with, gen_p5_kpe, grow_class_member, grow_hereditary, rng_from_seed};
use super::{solve_p5_cop5, solve_p5_kpe, SolveConfig};
use crate::cliquesep::build_tree;
use crate::coloring::VertexWeights;
use crate::detect::{class_membership, find_induced_p5, is_berge_small, is_c5, is_o3_free, GraphClass, DEFAULT_BERGE_CUTOFF};
use crate::graph::Graph;
use crate::modular::{is_prime, md_tree};
use crate::oracle::{chi_exact, chi_w_exact, clique_number_exact, OracleLimits};

/// Largest `n` whose prime members are enumerated exhaustively.
pub const LEMMA5_ENUMERATION_MAX: usize = 6;
/// Extension attempts per size above the enumeration range.
pub const LEMMA5_SAMPLES_PER_N: usize = 6000;
const LEMMA5_KEEP_PER_N: usize = 3000;
/// Rejection attempts per `{P5, Kp-e}` instance before growing one instead.
pub const CROSS_CHECK_REJECTION_ATTEMPTS: u64 = 5000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Count {
    pub n: usize,
    pub method: &'static str,
    pub instances: usize,
    pub berge: usize,
    pub c5: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma5Report {
    pub n_max: usize,
    pub seed: u64,
    pub per_n: Vec<Lemma5Count>,
    pub counterexamples: Vec<Graph>,
}

impl Lemma5Report {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn instances(&self) -> usize {
        self.per_n.iter().map(|c| c.instances).sum()
    }
}

fn is_prime_member(g: &Graph) -> bool {
    g.is_connected() && is_prime(g) && class_membership(g, GraphClass::P5CoP5).is_ok()
}

fn add_vertex(g: &Graph, density: f64, rng: &mut impl Rng) -> Graph {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).filter(|_| rng.gen_bool(density)).map(|u| (u, n)));
    Graph::from_edges(n + 1, &edges).expect("in range")
}

/// Connected prime `{P5, co-P5}`-free graphs on 4..=`n_max` vertices are
/// each checked to be Berge or a 5-cycle.
///
/// Sizes up to [`LEMMA5_ENUMERATION_MAX`] are enumerated over all labeled
/// graphs. Larger sizes are sampled by adding one vertex to a prime member
/// of size `n - 1`, or two vertices to one of size `n - 2` (every prime
/// graph on at least 7 vertices has a prime induced subgraph on `n - 2`).
pub fn verify_lemma5(n_max: usize, seed: u64) -> Lemma5Report {
    assert!(n_max <= DEFAULT_BERGE_CUTOFF, "n_max exceeds the Berge enumeration cutoff");
    let mut rng = rng_from_seed(seed);
    let mut per_n = Vec::new();
    let mut counterexamples = Vec::new();
    let mut primes: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    let record = |n: usize, method: &'static str, members: &[Graph], counterexamples: &mut Vec<Graph>| {
        let mut count = Lemma5Count { n, method, instances: members.len(), berge: 0, c5: 0 };
        for g in members {
            if is_c5(g) {
                count.c5 += 1;
            } else if is_berge_small(g, DEFAULT_BERGE_CUTOFF).expect("within cutoff") {
                count.berge += 1;
            } else {
                counterexamples.push(g.clone());
            }
        }
        count
    };
    for n in 4..=n_max.min(LEMMA5_ENUMERATION_MAX) {
        let mut members = Vec::new();
        for_each_graph(n, |g| {
            if is_prime_member(g) {
                members.push(g.clone());
            }
        });
        per_n.push(record(n, "enumerated", &members, &mut counterexamples));
        primes.insert(n, members);
    }
    for n in LEMMA5_ENUMERATION_MAX + 1..=n_max {
        let mut seen = BTreeSet::new();
        let mut members = Vec::new();
        for _ in 0..LEMMA5_SAMPLES_PER_N {
            let two_step = rng.gen_bool(0.5);
            let from = if two_step { &primes[&(n - 2)] } else { &primes[&(n - 1)] };
            if from.is_empty() {
                continue;
            }
            let base = &from[rng.gen_range(0..from.len())];
            let density = rng.gen_range(0.2..0.8);
            let mut g = add_vertex(base, density, &mut rng);
            if two_step {
                if class_membership(&g, GraphClass::P5CoP5).is_err() {
                    continue;
                }
                g = add_vertex(&g, density, &mut rng);
            }
            if !is_prime_member(&g) {
                continue;
            }
            let key: Vec<_> = g.edges().collect();
            if seen.insert(key) {
                members.push(g);
            }
            if members.len() >= LEMMA5_KEEP_PER_N {
                break;
            }
        }
        per_n.push(record(n, "sampled", &members, &mut counterexamples));
        primes.insert(n, members);
    }
    Lemma5Report { n_max, seed, per_n, counterexamples }
}

/// `(p+1)^(p+2) * (p-2)`, saturating.
pub fn lemma4_bound(p: usize) -> u128 {
    let base = (p as u128).saturating_add(1);
    let exp = u32::try_from(p.saturating_add(2)).unwrap_or(u32::MAX);
    base.checked_pow(exp).unwrap_or(u128::MAX).saturating_mul(p.saturating_sub(2) as u128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "side")]
pub enum Lemma4Side {
    O3Free,
    Bounded { omega: usize },
    Neither { omega: usize },
}

/// Which side of the dichotomy a C-block falls on.
pub fn lemma4_side(block: &Graph, p: usize, limits: &OracleLimits) -> Lemma4Side {
    if is_o3_free(block) {
        return Lemma4Side::O3Free;
    }
    let (omega, _) = clique_number_exact(block, limits).expect("block within clique cutoff");
    if (omega as u128) <= lemma4_bound(p) {
        Lemma4Side::Bounded { omega }
    } else {
        Lemma4Side::Neither { omega }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma4Report {
    pub p: usize,
    pub n_max: usize,
    pub seed: u64,
    pub bound: u128,
    pub graphs: usize,
    /// Sampled C-blocks with at least three vertices.
    pub blocks: usize,
    /// Blocks on one or two vertices, not counted above.
    pub trivial_blocks: usize,
    pub o3_free: usize,
    pub bounded: usize,
    pub max_block_size: usize,
    pub max_omega_with_o3: Option<usize>,
    pub violations: Vec<Graph>,
}

impl Lemma4Report {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Samples `{P5, Kp-e}`-free graphs until `samples` C-blocks on three or
/// more vertices have been classified.
pub fn verify_lemma4(p: usize, samples: usize, n_max: usize, seed: u64) -> Lemma4Report {
    assert!(p >= 3, "Kp-e needs p >= 3");
    assert!(n_max >= 3, "blocks need at least three vertices");
    let limits = OracleLimits::default();
    let mut rng = rng_from_seed(seed);
    let class = GraphClass::P5Kpe { p };
    let mut r = Lemma4Report {
        p,
        n_max,
        seed,
        bound: lemma4_bound(p),
        graphs: 0,
        blocks: 0,
        trivial_blocks: 0,
        o3_free: 0,
        bounded: 0,
        max_block_size: 0,
        max_omega_with_o3: None,
        violations: Vec::new(),
    };
    while r.blocks < samples {
        let n = rng.gen_range(3..=n_max);
        let density = rng.gen_range(0.15..0.85);
        let g = grow_class_member(n, class, density, &mut rng);
        r.graphs += 1;
        for leaf in build_tree(&g).leaves() {
            if leaf.len() < 3 {
                r.trivial_blocks += 1;
                continue;
            }
            let (h, _) = g.induced(leaf).expect("leaf within graph");
            r.blocks += 1;
            r.max_block_size = r.max_block_size.max(h.n());
            match lemma4_side(&h, p, &limits) {
                Lemma4Side::O3Free => r.o3_free += 1,
                Lemma4Side::Bounded { omega } => {
                    r.bounded += 1;
                    r.max_omega_with_o3 = Some(r.max_omega_with_o3.map_or(omega, |m| m.max(omega)));
                }
                Lemma4Side::Neither { .. } => r.violations.push(h),
            }
        }
    }
    r
}

/// `4^(omega - 1)`, saturating; `omega = 0` gives 0 (only the empty graph).
pub fn gyarfas_bound(omega: usize) -> u128 {
    if omega == 0 {
        return 0;
    }
    4u128.checked_pow(u32::try_from(omega - 1).unwrap_or(u32::MAX)).unwrap_or(u128::MAX)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GyarfasBucket {
    pub graphs: usize,
    pub max_chi: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GyarfasReport {
    pub samples: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Keyed by clique number.
    pub by_omega: BTreeMap<usize, GyarfasBucket>,
    pub violations: Vec<Graph>,
}

impl GyarfasReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Samples P5-free graphs and checks `chi <= 4^(omega - 1)` with exact
/// values of both sides.
pub fn verify_gyarfas(samples: usize, n_max: usize, seed: u64) -> GyarfasReport {
    assert!(n_max >= 1);
    let limits = OracleLimits::default();
    let mut rng = rng_from_seed(seed);
    let mut r = GyarfasReport { samples, n_max, seed, by_omega: BTreeMap::new(), violations: Vec::new() };
    for _ in 0..samples {
        let n = rng.gen_range(1..=n_max);
        let density = rng.gen_range(0.1..0.9);
        let g = grow_hereditary(n, density, 64, &mut rng, |h| find_induced_p5(h).is_none());
        let (chi, _) = chi_exact(&g, &limits).expect("sample within oracle cutoff");
        let (omega, _) = clique_number_exact(&g, &limits).expect("sample within oracle cutoff");
        let b = r.by_omega.entry(omega).or_insert(GyarfasBucket { graphs: 0, max_chi: 0 });
        b.graphs += 1;
        b.max_chi = b.max_chi.max(chi);
        if chi as u128 > gyarfas_bound(omega) {
            r.violations.push(g);
        }
    }
    r
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub class: String,
    pub graph: Graph,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub pipeline: Option<usize>,
    pub oracle: usize,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrossCheckCounts {
    pub instances: usize,
    pub agree: usize,
    pub trees_valid: usize,
    /// Instances grown vertex by vertex after rejection sampling gave up.
    pub grown: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheckReport {
    pub seed: u64,
    pub n_max: usize,
    pub weighted_n_max: usize,
    pub by_class: BTreeMap<String, CrossCheckCounts>,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.by_class.values().all(|c| c.agree == c.instances && c.trees_valid == c.instances)
    }
}

/// Pipelines against the exact oracle on generated class members:
/// `count` unweighted `{P5, co-P5}`-free graphs, `count` weighted ones
/// (weights in 1..=3, `n <= weighted_n_max`), and `count` graphs each for
/// `{P5, K4-e}` and `{P5, K5-e}`. Every decomposition tree built along the
/// way goes through its validator.
pub fn cross_check(count: usize, n_max: usize, weighted_n_max: usize, seed: u64) -> CrossCheckReport {
    let cfg = SolveConfig::default();
    let limits = cfg.limits;
    let mut rng = rng_from_seed(seed);
    let mut by_class: BTreeMap<String, CrossCheckCounts> = BTreeMap::new();
    let mut mismatches = Vec::new();

    let mut check = |key: &str, g: &Graph, w: Option<&VertexWeights>, solved: Option<usize>, oracle: usize, tree_ok: bool, grown: bool, note: String| {
        let c = by_class.entry(key.to_string()).or_default();
        c.instances += 1;
        c.grown += usize::from(grown);
        c.trees_valid += usize::from(tree_ok);
        if solved == Some(oracle) {
            c.agree += 1;
        } else {
            mismatches.push(Mismatch {
                class: key.to_string(),
                graph: g.clone(),
                weights: w.map(|w| w.as_slice().to_vec()),
                pipeline: solved,
                oracle,
                note,
            });
        }
    };

    for _ in 0..count {
        let n = rng.gen_range(1..=n_max);
        let g = gen_p5_cop5_with(n, &mut rng);
        let tree_ok = md_tree(&g).validate(&g).is_ok();
        let oracle = chi_exact(&g, &limits).expect("within cutoff").0;
        let (solved, note) = match solve_p5_cop5(&g, None, &cfg) {
            Ok(r) => (Some(r.chi), String::new()),
            Err(e) => (None, e.to_string()),
        };
        check("p5-cop5", &g, None, solved, oracle, tree_ok, false, note);
    }
    for _ in 0..count {
        let n = rng.gen_range(1..=weighted_n_max);
        let g = gen_p5_cop5_with(n, &mut rng);
        let w = VertexWeights::new((0..n).map(|_| rng.gen_range(1..=3)).collect()).expect("positive");
        let tree_ok = md_tree(&g).validate(&g).is_ok();
        let oracle = chi_w_exact(&g, &w, &limits).expect("within cutoff").0;
        let (solved, note) = match solve_p5_cop5(&g, Some(&w), &cfg) {
            Ok(r) => (Some(r.chi), String::new()),
            Err(e) => (None, e.to_string()),
        };
        check("p5-cop5-weighted", &g, Some(&w), solved, oracle, tree_ok, false, note);
    }
    for p in [4usize, 5] {
        for _ in 0..count {
            let n = rng.gen_range(1..=n_max);
            let density = rng.gen_range(0.1..0.9);
            let (g, grown) = match gen_p5_kpe(n, p, rng.gen(), density, CROSS_CHECK_REJECTION_ATTEMPTS) {
                Ok(x) => (x.graph, false),
                // mid densities stall at n = 10
                Err(_) => (grow_class_member(n, GraphClass::P5Kpe { p }, density, &mut rng), true),
            };
            let key = format!("p5-k{p}e");
            let tree_ok = build_tree(&g).validate(&g).is_ok();
            let oracle = chi_exact(&g, &limits).expect("within cutoff").0;
            let (solved, note) = match solve_p5_kpe(&g, p, &cfg) {
                Ok(r) => (Some(r.chi), String::new()),
                Err(e) => (None, e.to_string()),
            };
            check(&key, &g, None, solved, oracle, tree_ok, grown, note);
        }
    }
    CrossCheckReport { seed, n_max, weighted_n_max, by_class, mismatches }
}
