//! Modular decomposition and weighted coloring of a graph built by
//! substituting small graphs into the vertices of a C5.

use p5color::coloring::VertexWeights;
use p5color::graph::named;
use p5color::modular::{chi_w, md_tree, MDTree};
use p5color::oracle::{chi_w_exact, OracleLimits};
use p5color::pipeline::generate::substitute;

fn show(t: &MDTree, depth: usize) {
    println!("{:indent$}{} {}", "", t.kind(), t.span(), indent = 2 * depth);
    for c in t.children() {
        show(c, depth + 1);
    }
}

fn main() {
    let parts = [named::complete(2), named::edgeless(2), named::path(4), named::complete(1), named::cycle(5)];
    let g = substitute(&named::cycle(5), &parts);
    let tree = md_tree(&g);
    tree.validate(&g).expect("valid modular decomposition");
    show(&tree, 0);

    let w = VertexWeights::new((0..g.n()).map(|v| 1 + (v % 3) as u32).collect()).unwrap();
    let limits = OracleLimits::default();
    let (k, col) = chi_w(&g, &tree, &w, |span, q, wq| {
        println!("prime node {span}: quotient on {} vertices, weights {:?}", q.n(), wq.as_slice());
        chi_w_exact(q, wq, &limits)
    })
    .unwrap();
    col.validate(&g, &w, k).unwrap();
    println!("chi_w = {k}");
    println!("colors of vertex 0: {:?}", col.colors(0));
}
