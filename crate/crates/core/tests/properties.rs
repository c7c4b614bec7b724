//! Invariants checked against brute-force oracles on small random graphs.

use std::collections::BTreeSet;

use proptest::prelude::*;

use p5color::cliquesep::{build_tree, chi_compose, find_clique_separator};
use p5color::coloring::VertexWeights;
use p5color::detect::{
    find_independent_triple, find_induced_c5, find_induced_co_p5, find_induced_kp_minus_e, find_induced_p5,
    find_odd_hole_or_antihole, is_berge_small, Pattern,
};
use p5color::graph::{named, Graph};
use p5color::io::{parse_graph, write_graph, Format};
use p5color::matching::{chi_o3_free, max_matching};
use p5color::modular::{chi_w, is_module, md_tree, MDTree};
use p5color::oracle::{chi_exact, chi_w_exact, max_matching_bruteforce, OracleLimits};
use p5color::pipeline::{solve_p5_cop5, SolveConfig, SolveReport};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn dense_or_sparse(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.05f64..0.95, any::<u64>()).prop_map(|(n, d, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        Graph::from_fn(n, |_, _| rng.gen_bool(d))
    })
}

/// Next permutation in lexicographic order; false after the last one.
fn next_perm(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            cur.push(v);
            if rec(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::new(), f)
}

/// Generic induced-subgraph isomorphism by trying every subset and ordering.
fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let k = h.n();
    if k > g.n() {
        return false;
    }
    subsets(g.n(), k, &mut |s| {
        let mut perm: Vec<usize> = (0..k).collect();
        loop {
            if (0..k).all(|a| (a + 1..k).all(|b| h.has_edge(a, b) == g.has_edge(s[perm[a]], s[perm[b]]))) {
                return true;
            }
            if !next_perm(&mut perm) {
                return false;
            }
        }
    })
}

fn has_clique_separator_brute(g: &Graph) -> bool {
    let n = g.n();
    (0..1u32 << n).any(|mask| {
        let q: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if !g.is_clique(&q) {
            return false;
        }
        let rest: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        g.components_within(&rest).len() >= 2
    })
}

fn md_signature(t: &MDTree, map: &[usize], out: &mut BTreeSet<(String, Vec<usize>)>) {
    let mut span: Vec<usize> = t.span().iter().map(|&v| map[v]).collect();
    span.sort_unstable();
    out.insert((t.kind().to_string(), span));
    for c in t.children() {
        md_signature(c, map, out);
    }
}

fn o3_free_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    // complements of triangle-free graphs built by greedy random edge insertion
    (1..=max_n, any::<u64>(), 0.1f64..1.0).prop_map(|(n, seed, keep)| {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        pairs.shuffle(&mut rng);
        let mut adj = vec![vec![false; n]; n];
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if rng.gen_bool(keep) && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap().complement()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn format_round_trip(g in graph_strategy(14)) {
        for f in [Format::Dimacs, Format::EdgeList] {
            let back = parse_graph(&write_graph(&g, f), f).unwrap();
            prop_assert_eq!(&back, &g);
        }
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(16)) {
        let c = g.complement();
        prop_assert_eq!(c.m() + g.m(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_subgraph_matches_adjacency(g in graph_strategy(12), pick in proptest::collection::vec(any::<bool>(), 12)) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| pick[v]).collect();
        let (h, map) = g.induced(&s).unwrap();
        prop_assert_eq!(&map, &s);
        for a in 0..h.n() {
            for b in 0..h.n() {
                if a != b {
                    prop_assert_eq!(h.has_edge(a, b), g.has_edge(map[a], map[b]));
                }
            }
        }
    }

    #[test]
    fn detectors_agree_with_brute_force(g in dense_or_sparse(8)) {
        let cases: [(Pattern, Option<p5color::detect::Witness>); 5] = [
            (Pattern::P5, find_induced_p5(&g)),
            (Pattern::CoP5, find_induced_co_p5(&g)),
            (Pattern::C5, find_induced_c5(&g)),
            (Pattern::KpMinusE(4), find_induced_kp_minus_e(&g, 4).unwrap()),
            (Pattern::KpMinusE(5), find_induced_kp_minus_e(&g, 5).unwrap()),
        ];
        for (pat, found) in cases {
            prop_assert_eq!(found.is_some(), contains_induced(&g, &pat.graph()), "{}", pat);
            if let Some(w) = found {
                prop_assert!(w.verify(&g));
            }
        }
        prop_assert_eq!(find_independent_triple(&g).is_some(), contains_induced(&g, &named::edgeless(3)));
        let odd = [5usize, 7].iter().any(|&k| {
            contains_induced(&g, &named::cycle(k)) || contains_induced(&g, &named::cycle(k).complement())
        });
        let found = find_odd_hole_or_antihole(&g, 16).unwrap();
        prop_assert_eq!(found.is_some(), odd);
        prop_assert_eq!(is_berge_small(&g, 16).unwrap(), !odd);
        if let Some(w) = found {
            prop_assert!(w.verify(&g));
        }
    }

    #[test]
    fn clique_separator_exists_iff_brute_force(g in dense_or_sparse(9)) {
        let found = find_clique_separator(&g);
        prop_assert_eq!(found.is_some(), has_clique_separator_brute(&g));
        if let Some(s) = found {
            prop_assert!(g.is_clique(&s.q));
            prop_assert!(!s.a.is_empty() && !s.b.is_empty());
            prop_assert!(s.a.iter().all(|&x| s.b.iter().all(|&y| !g.has_edge(x, y))));
        }
        let t = build_tree(&g);
        prop_assert!(t.validate(&g).is_ok());
    }

    #[test]
    fn clique_composition_matches_exact(g in dense_or_sparse(10)) {
        let lim = OracleLimits::default();
        let tree = build_tree(&g);
        let (k, col) = chi_compose(&g, &tree, |_, h| chi_exact(h, &lim)).unwrap();
        prop_assert_eq!(k, chi_exact(&g, &lim).unwrap().0);
        prop_assert!(col.validate(&g, &VertexWeights::unit(g.n()), k).is_ok());
    }

    #[test]
    fn md_tree_valid_and_relabeling_invariant(g in dense_or_sparse(10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let t = md_tree(&g);
        prop_assert!(t.validate(&g).is_ok());
        for node in t.children() {
            prop_assert!(is_module(&g, &node.span()));
        }
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&perm);
        let identity: Vec<usize> = (0..g.n()).collect();
        let (mut a, mut b) = (BTreeSet::new(), BTreeSet::new());
        md_signature(&t, &perm, &mut a);
        md_signature(&md_tree(&h), &identity, &mut b);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn weighted_composition_matches_exact(g in dense_or_sparse(8), ws in proptest::collection::vec(1u32..=3, 8)) {
        let lim = OracleLimits::default();
        let w = VertexWeights::new(ws[..g.n()].to_vec()).unwrap();
        let tree = md_tree(&g);
        let (k, col) = chi_w(&g, &tree, &w, |_, q, wq| chi_w_exact(q, wq, &lim)).unwrap();
        prop_assert_eq!(k, chi_w_exact(&g, &w, &lim).unwrap().0);
        prop_assert!(col.validate(&g, &w, k).is_ok());
    }

    #[test]
    fn blossom_matches_brute_force(g in dense_or_sparse(12)) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        prop_assert_eq!(m.size(), max_matching_bruteforce(&g, &OracleLimits::default()).unwrap());
    }

    #[test]
    fn o3_free_coloring_matches_exact(g in o3_free_strategy(12)) {
        let (k, col) = chi_o3_free(&g).unwrap();
        prop_assert_eq!(k, chi_exact(&g, &OracleLimits::default()).unwrap().0);
        prop_assert!(col.classes().iter().all(|c| c.len() <= 2));
        prop_assert!(col.validate(&g, &VertexWeights::unit(g.n()), k).is_ok());
    }

    #[test]
    fn report_survives_json(seed in any::<u64>(), n in 1usize..12) {
        let g = p5color::pipeline::generate::gen_p5_cop5(n, seed);
        let r = solve_p5_cop5(&g, None, &SolveConfig::default()).unwrap();
        let back: SolveReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert!(back.validate(&g).is_ok());
        prop_assert_eq!(back, r);
    }
}
