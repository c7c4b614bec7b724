//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every instance comes from a fixed seed, and every expected value
//! comes from the exact oracle.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use p5color::cliquesep::{build_tree, chi_compose, find_clique_separator};
use p5color::coloring::VertexWeights;
use p5color::detect::GraphClass;
use p5color::graph::{named, Graph};
use p5color::matching::{chi_o3_free, max_matching};
use p5color::modular::md_tree;
use p5color::oracle::{chi_exact, chi_w_exact, max_matching_bruteforce, OracleLimits};
use p5color::pipeline::generate::{gen_p5_cop5, gen_p5_cop5_with, gen_p5_kpe, gnp, grow_class_member, rng_from_seed};
use p5color::pipeline::verify::{cross_check, verify_gyarfas, verify_lemma4, verify_lemma5};
use p5color::pipeline::{solve_p5_cop5, solve_p5_kpe, Route, SolveConfig};

const SEED: u64 = 0x5eed_2024;
const TIME_BUDGET: Duration = Duration::from_secs(300);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

#[derive(Default)]
struct TreeTally {
    checked: usize,
    failed: usize,
}

impl TreeTally {
    fn add(&mut self, ok: bool) {
        self.checked += 1;
        self.failed += usize::from(!ok);
    }
}

fn criterion1(trees: &mut TreeTally) -> Outcome {
    let cfg = SolveConfig::default();
    let lim = cfg.limits;
    let mut rng = rng_from_seed(SEED);
    let mut bad = Vec::new();
    let mut routes: BTreeMap<Route, usize> = BTreeMap::new();

    let cop5 = 500;
    for i in 0..cop5 {
        let g = gen_p5_cop5_with(rng.gen_range(1..=10), &mut rng);
        trees.add(md_tree(&g).validate(&g).is_ok());
        let truth = chi_exact(&g, &lim).unwrap().0;
        match solve_p5_cop5(&g, None, &cfg) {
            Ok(r) if r.chi == truth && r.validate(&g).is_ok() => {
                for (k, v) in r.route_counts() {
                    *routes.entry(k).or_default() += v;
                }
            }
            other => bad.push(format!("cop5#{i}: {:?} vs {truth}", other.map(|r| r.chi))),
        }
    }

    let per_p = 500;
    for p in [4usize, 5] {
        for i in 0..per_p {
            let n = rng.gen_range(1..=10);
            let density = rng.gen_range(0.1..0.9);
            let g = match gen_p5_kpe(n, p, rng.gen(), density, 5000) {
                Ok(x) => x.graph,
                Err(_) => grow_class_member(n, GraphClass::P5Kpe { p }, density, &mut rng),
            };
            trees.add(build_tree(&g).validate(&g).is_ok());
            let truth = chi_exact(&g, &lim).unwrap().0;
            match solve_p5_kpe(&g, p, &cfg) {
                Ok(r) if r.chi == truth && r.validate(&g).is_ok() => {
                    for (k, v) in r.route_counts() {
                        *routes.entry(k).or_default() += v;
                    }
                }
                other => bad.push(format!("k{p}e#{i}: {:?} vs {truth}", other.map(|r| r.chi))),
            }
        }
    }
    let routes: Vec<String> = routes.iter().map(|(k, v)| format!("{}={v}", k.name())).collect();
    outcome(
        bad.is_empty(),
        format!(
            "{cop5} {{P5,co-P5}}-free + {per_p} {{P5,K4-e}}-free + {per_p} {{P5,K5-e}}-free graphs, n<=10, {} mismatches; routes {}{}",
            bad.len(),
            routes.join(" "),
            first(&bad)
        ),
    )
}

fn criterion2(trees: &mut TreeTally) -> Outcome {
    let cfg = SolveConfig::default();
    let mut rng = rng_from_seed(SEED ^ 2);
    let count = 200;
    let mut bad = Vec::new();
    for i in 0..count {
        let n = rng.gen_range(1..=8);
        let g = gen_p5_cop5_with(n, &mut rng);
        let w = VertexWeights::new((0..n).map(|_| rng.gen_range(1..=3)).collect()).unwrap();
        trees.add(md_tree(&g).validate(&g).is_ok());
        let truth = chi_w_exact(&g, &w, &cfg.limits).unwrap().0;
        match solve_p5_cop5(&g, Some(&w), &cfg) {
            Ok(r) if r.chi == truth && r.validate(&g).is_ok() => {}
            other => bad.push(format!("#{i}: {:?} vs {truth}", other.map(|r| r.chi))),
        }
    }
    outcome(bad.is_empty(), format!("{count} weighted graphs, n<=8, weights in 1..3, {} mismatches{}", bad.len(), first(&bad)))
}

fn criterion3(trees: &mut TreeTally) -> Outcome {
    let lim = OracleLimits::default();
    let mut rng = rng_from_seed(SEED ^ 3);
    let target = 200;
    let (mut found, mut drawn, mut bad) = (0, 0, Vec::new());
    let mut nonempty = 0;
    while found < target {
        drawn += 1;
        let n = rng.gen_range(3..=10);
        let g = gnp(n, rng.gen_range(0.2..0.8), &mut rng);
        // only connected graphs, so every separator is a nonempty clique
        if !g.is_connected() {
            continue;
        }
        let Some(sep) = find_clique_separator(&g) else {
            continue;
        };
        found += 1;
        nonempty += usize::from(!sep.q.is_empty());
        let tree = build_tree(&g);
        trees.add(tree.validate(&g).is_ok());
        let truth = chi_exact(&g, &lim).unwrap().0;
        match chi_compose(&g, &tree, |_, h| chi_exact(h, &lim)) {
            Ok((k, col)) if k == truth && col.validate(&g, &VertexWeights::unit(n), k).is_ok() => {}
            other => bad.push(format!("#{found}: {:?} vs {truth}", other.map(|x| x.0))),
        }
    }
    outcome(
        bad.is_empty() && nonempty == target,
        format!("{target} connected graphs with a clique separator (of {drawn} drawn), n<=10, {} mismatches{}", bad.len(), first(&bad)),
    )
}

fn triangle_free(n: usize, keep: f64, rng: &mut impl Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in pairs {
        if rng.gen_bool(keep) && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn criterion4() -> Outcome {
    let lim = OracleLimits::default();
    let mut rng = rng_from_seed(SEED ^ 4);
    let count = 200;
    let mut bad = Vec::new();
    let mut largest = 0;
    for i in 0..count {
        let n = rng.gen_range(1..=14);
        let g = triangle_free(n, rng.gen_range(0.1..1.0), &mut rng).complement();
        largest = largest.max(n);
        let truth = chi_exact(&g, &lim).unwrap().0;
        match chi_o3_free(&g) {
            Ok((k, col))
                if k == truth
                    && col.classes().iter().all(|c| c.len() <= 2)
                    && col.validate(&g, &VertexWeights::unit(n), k).is_ok() => {}
            other => bad.push(format!("#{i}: {:?} vs {truth}", other.map(|x| x.0))),
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} O3-free graphs, n<=14 (largest {largest}), {} mismatches, classes of size <=2{}", bad.len(), first(&bad)),
    )
}

fn criterion5() -> Outcome {
    let lim = OracleLimits::default();
    let mut rng = rng_from_seed(SEED ^ 5);
    let count = 500;
    let mut bad = Vec::new();
    for i in 0..count {
        let g = gnp(rng.gen_range(0..=12), rng.gen_range(0.05..0.95), &mut rng);
        let m = max_matching(&g);
        let truth = max_matching_bruteforce(&g, &lim).unwrap();
        if m.size() != truth || !m.is_valid_for(&g) {
            bad.push(format!("#{i}: {} vs {truth}", m.size()));
        }
    }
    let petersen = max_matching(&named::petersen()).size();
    outcome(
        bad.is_empty() && petersen == 5,
        format!("{count} random graphs, n<=12, {} mismatches; Petersen -> {petersen}{}", bad.len(), first(&bad)),
    )
}

fn criterion6() -> Outcome {
    let r = verify_lemma5(9, SEED);
    let sizes: Vec<String> = r.per_n.iter().map(|c| format!("n={}:{}({})", c.n, c.instances, c.method)).collect();
    let covered = r.per_n.len() == 6 && r.per_n.iter().all(|c| c.instances > 0);
    let c5: usize = r.per_n.iter().map(|c| c.c5).sum();
    outcome(
        r.holds() && covered,
        format!(
            "{} connected prime {{P5,co-P5}}-free graphs [{}], {} C5, {} counterexamples",
            r.instances(),
            sizes.join(" "),
            c5,
            r.counterexamples.len()
        ),
    )
}

fn criterion7() -> Outcome {
    let r = verify_lemma4(4, 200, 12, SEED);
    outcome(
        r.holds() && r.blocks >= 200,
        format!(
            "{} C-blocks (>=3 vertices) from {} graphs, n<=12: {} O3-free, {} with an independent triple and omega<={} <= bound {}, {} violations",
            r.blocks,
            r.graphs,
            r.o3_free,
            r.bounded,
            r.max_omega_with_o3.map_or_else(|| "-".to_string(), |w| w.to_string()),
            r.bound,
            r.violations.len()
        ),
    )
}

fn criterion8() -> Outcome {
    let r = verify_gyarfas(500, 12, SEED);
    let spread: Vec<String> = r.by_omega.iter().map(|(w, b)| format!("w{w}:{}/chi<={}", b.graphs, b.max_chi)).collect();
    outcome(
        r.holds(),
        format!("{} P5-free graphs, n<=12 [{}], {} violations", r.samples, spread.join(" "), r.violations.len()),
    )
}

fn criterion9(trees: &TreeTally) -> Outcome {
    outcome(
        trees.failed == 0 && trees.checked > 0,
        format!("{} decomposition trees from criteria 1-3 validated, {} failed", trees.checked, trees.failed),
    )
}

fn criterion10() -> Outcome {
    let run = || {
        let cfg = SolveConfig::default();
        let mut out = String::new();
        for seed in 0..25u64 {
            let g = gen_p5_cop5(1 + (seed as usize % 12), seed);
            out += &serde_json::to_string(&solve_p5_cop5(&g, None, &cfg).unwrap()).unwrap();
            let k = gen_p5_kpe(9, 4, seed, 0.3, 100_000).unwrap();
            out += &serde_json::to_string(&solve_p5_kpe(&k.graph, 4, &cfg).unwrap()).unwrap();
        }
        out += &serde_json::to_string(&verify_lemma5(7, 9)).unwrap();
        out += &serde_json::to_string(&verify_lemma4(4, 40, 10, 9)).unwrap();
        out += &serde_json::to_string(&verify_gyarfas(40, 10, 9)).unwrap();
        out += &serde_json::to_string(&cross_check(20, 9, 7, 9)).unwrap();
        out
    };
    let cli = || {
        let dir = std::env::temp_dir().join(format!("p5color-acceptance-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let g = dir.join("g.col");
        let mut sink = Vec::new();
        let gen = ["p5color", "generate", "--class", "p5-cop5", "--n", "11", "--seed", "3", "--output", g.to_str().unwrap()];
        assert_eq!(p5color::cli::run(gen, &mut sink, &mut Vec::new()), 0);
        let mut out = std::fs::read(&g).unwrap();
        assert_eq!(p5color::cli::run(["p5color", "solve", "--class", "p5-cop5", "--input", g.to_str().unwrap()], &mut out, &mut Vec::new()), 0);
        std::fs::remove_dir_all(&dir).ok();
        out
    };
    let (a, b) = (run(), run());
    let (c, d) = (cli(), cli());
    outcome(
        a == b && c == d,
        format!("library reports ({} bytes) and CLI generate+solve output ({} bytes) identical across two runs", a.len(), c.len()),
    )
}

fn first(bad: &[String]) -> String {
    bad.first().map(|b| format!("; first: {b}")).unwrap_or_default()
}

fn main() {
    let start = Instant::now();
    let mut trees = TreeTally::default();
    let mut results = vec![
        ("oracle equivalence, unweighted", criterion1(&mut trees)),
        ("oracle equivalence, weighted", criterion2(&mut trees)),
        ("clique-separator composition", criterion3(&mut trees)),
        ("O3-free reduction", criterion4()),
        ("blossom correctness", criterion5()),
        ("prime {P5,co-P5}-free graphs are Berge or C5", criterion6()),
        ("C-block dichotomy, p=4", criterion7()),
        ("chi <= 4^(omega-1) on P5-free graphs", criterion8()),
    ];
    results.push(("structural validators", criterion9(&trees)));
    results.push(("determinism", criterion10()));

    let elapsed = start.elapsed();
    let in_budget = elapsed < TIME_BUDGET;
    results[0].1.detail += &format!("; full acceptance run {:.1}s (budget {}s)", elapsed.as_secs_f64(), TIME_BUDGET.as_secs());
    results[0].1.pass &= in_budget;

    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("criterion {:>2} [{}] {}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, name, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
