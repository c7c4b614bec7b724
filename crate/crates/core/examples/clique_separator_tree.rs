//! Clique-separator decomposition of the bowtie plus a pendant path, and the
//! chromatic number assembled from exact leaf colorings.

use p5color::cliquesep::{build_tree, chi_compose, find_clique_separator};
use p5color::graph::Graph;
use p5color::oracle::{chi_exact, OracleLimits};

fn main() {
    // triangles {0,1,2} and {2,3,4}, K4 on {4,5,6,7}, pendant 8 on 7
    let g = Graph::from_edges(
        9,
        &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (7, 8)],
    )
    .unwrap();

    let sep = find_clique_separator(&g).expect("g has a clique separator");
    println!("first separator: Q = {}, A = {}, B = {}", sep.q, sep.a, sep.b);

    let tree = build_tree(&g);
    tree.validate(&g).expect("valid decomposition tree");
    println!("{}", serde_json::to_string_pretty(&tree).unwrap());
    for leaf in tree.leaves() {
        println!("C-block {leaf}");
    }

    let limits = OracleLimits::default();
    let (k, coloring) = chi_compose(&g, &tree, |block, h| {
        let r = chi_exact(h, &limits);
        if let Ok((k, _)) = &r {
            println!("  chi({block}) = {k}");
        }
        r
    })
    .unwrap();
    println!("chi = {k} (exact: {})", chi_exact(&g, &limits).unwrap().0);
    println!("coloring: {:?}", coloring.as_single().unwrap());
}
