//! Random instances of the two classes.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::detect::{class_membership, GraphClass};
use crate::graph::{named, Graph};
use crate::modular::is_prime;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Replaces vertex `i` of `host` by `parts[i]`. Vertices of `parts[0]` come
/// first, then `parts[1]`, and so on.
pub fn substitute(host: &Graph, parts: &[Graph]) -> Graph {
    assert_eq!(host.n(), parts.len(), "one part per host vertex");
    let mut offset = Vec::with_capacity(parts.len());
    let mut n = 0;
    for p in parts {
        offset.push(n);
        n += p.n();
    }
    let mut edges = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        edges.extend(p.edges().map(|(u, v)| (u + offset[i], v + offset[i])));
    }
    for (a, b) in host.edges() {
        for u in 0..parts[a].n() {
            for v in 0..parts[b].n() {
                edges.push((u + offset[a], v + offset[b]));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("substitution keeps vertices in range")
}

/// All labeled graphs on `n` vertices, `n <= 7`, passed to `f` one at a time.
pub fn for_each_graph(n: usize, mut f: impl FnMut(&Graph)) {
    assert!(n <= 7, "labeled enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        f(&Graph::from_edges(n, &edges).expect("enumerated edges are valid"));
    }
}

/// Labeled prime `{P5, co-P5}`-free graphs on 4 to 6 vertices.
pub fn prime_pool() -> &'static [Graph] {
    static POOL: OnceLock<Vec<Graph>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = Vec::new();
        for n in 4..=6 {
            for_each_graph(n, |g| {
                if g.is_connected() && is_prime(g) && class_membership(g, GraphClass::P5CoP5).is_ok() {
                    pool.push(g.clone());
                }
            });
        }
        pool
    })
}

fn random_composition(n: usize, k: usize, rng: &mut impl Rng) -> Vec<usize> {
    // k positive parts summing to n
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts = cuts[..k - 1].to_vec();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(k);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        out.push(c - prev);
        prev = c;
    }
    out
}

fn grow_cop5(n: usize, rng: &mut impl Rng) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let pool = prime_pool();
    // 0: parallel, 1: series, 2: C5, 3: pool member
    let kind = loop {
        let k = rng.gen_range(0..4);
        if k < 2 || n >= 5 || (k == 3 && n >= 4) {
            break k;
        }
    };
    let host = match kind {
        0 | 1 => {
            let k = rng.gen_range(2..=n.min(4));
            if kind == 0 {
                named::edgeless(k)
            } else {
                named::complete(k)
            }
        }
        2 => named::cycle(5),
        _ => loop {
            let g = &pool[rng.gen_range(0..pool.len())];
            if g.n() <= n {
                break g.clone();
            }
        },
    };
    let sizes = random_composition(n, host.n(), rng);
    let parts: Vec<Graph> = sizes.into_iter().map(|s| grow_cop5(s, rng)).collect();
    substitute(&host, &parts)
}

fn relabel(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// A random `{P5, co-P5}`-free graph on `n` vertices, built by substituting
/// class members into the vertices of prime members, edgeless graphs, or
/// cliques, then relabeled at random.
pub fn gen_p5_cop5(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = rng_from_seed(seed);
    gen_p5_cop5_with(n, &mut rng)
}

pub fn gen_p5_cop5_with(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let g = relabel(&grow_cop5(n, rng), rng);
        if class_membership(&g, GraphClass::P5CoP5).is_ok() {
            return g;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Generated {
    pub graph: Graph,
    pub attempts: u64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("no {class} graph on {n} vertices after {attempts} attempts at density {density}; try a lower or higher density")]
    Timeout { class: String, n: usize, density: f64, attempts: u64 },
}

pub const DEFAULT_MAX_ATTEMPTS: u64 = 200_000;

pub fn gnp(n: usize, density: f64, rng: &mut impl Rng) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(density))
}

/// Rejection sampling: `G(n, density)` graphs until one is `{P5, Kp-e}`-free.
pub fn gen_p5_kpe(n: usize, p: usize, seed: u64, density: f64, max_attempts: u64) -> Result<Generated, GenError> {
    assert!(n >= 1 && p >= 3, "need n >= 1 and p >= 3");
    assert!((0.0..=1.0).contains(&density), "density must lie in [0, 1]");
    let mut rng = rng_from_seed(seed);
    let class = GraphClass::P5Kpe { p };
    for attempts in 1..=max_attempts {
        let g = gnp(n, density, &mut rng);
        if class_membership(&g, class).is_ok() {
            return Ok(Generated { graph: g, attempts });
        }
    }
    Err(GenError::Timeout { class: format!("{class}"), n, density, attempts: max_attempts })
}

/// Grows a graph one vertex at a time, redrawing the new vertex's
/// neighborhood until `accept` holds. After `tries` failures the vertex is
/// added isolated, so `accept` should be hereditary and tolerate isolated
/// vertices (true for every class defined by connected forbidden graphs).
pub fn grow_hereditary(
    n: usize,
    density: f64,
    tries: usize,
    rng: &mut impl Rng,
    accept: impl Fn(&Graph) -> bool,
) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        for _ in 0..tries {
            let extra: Vec<_> = (0..v).filter(|_| rng.gen_bool(density)).map(|u| (u, v)).collect();
            let mut trial = edges.clone();
            trial.extend_from_slice(&extra);
            if accept(&Graph::from_edges(v + 1, &trial).expect("in range")) {
                edges = trial;
                break;
            }
        }
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Class member of any size grown vertex by vertex; used where whole-graph
/// rejection is too slow (larger `n`, dense samples).
pub fn grow_class_member(n: usize, class: GraphClass, density: f64, rng: &mut impl Rng) -> Graph {
    grow_hereditary(n, density, 64, rng, |g| class_membership(g, class).is_ok())
}
