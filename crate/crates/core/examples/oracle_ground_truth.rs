//! Exact values from the brute-force oracle, and what happens past a cutoff.

use p5color::coloring::VertexWeights;
use p5color::graph::named;
use p5color::oracle::{chi_exact, chi_w_exact, clique_number_exact, dsatur_greedy, independence_number_exact, OracleLimits};

fn main() {
    let limits = OracleLimits::default();
    for (name, g) in [("C5", named::cycle(5)), ("C7", named::cycle(7)), ("Petersen", named::petersen()), ("K6", named::complete(6))] {
        let (chi, _) = chi_exact(&g, &limits).unwrap();
        let (omega, clique) = clique_number_exact(&g, &limits).unwrap();
        let (alpha, _) = independence_number_exact(&g, &limits).unwrap();
        let greedy = dsatur_greedy(&g).iter().max().map_or(0, |c| c + 1);
        println!("{name:<9} chi={chi} omega={omega} {clique:?} alpha={alpha} dsatur={greedy}");
    }

    let w = VertexWeights::new(vec![3, 1, 2, 2, 1]).unwrap();
    let (k, col) = chi_w_exact(&named::cycle(5), &w, &limits).unwrap();
    println!("C5 with weights {:?}: chi_w = {k}, sets {:?}", w.as_slice(), col.sets());

    let tight = OracleLimits { chi_n: 8, ..limits };
    match chi_exact(&named::petersen(), &tight) {
        Ok(_) => unreachable!(),
        Err(e) => println!("with chi_n = 8: {e}"),
    }
}
