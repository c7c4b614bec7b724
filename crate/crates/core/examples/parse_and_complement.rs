//! Read a DIMACS graph, print basic statistics and its complement as an edge list.
//!
//!     cargo run --example parse_and_complement -- crates/core/examples/data/c5.col

use std::path::PathBuf;

use p5color::io::{parse_graph, write_graph, Format};

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/c5.col")));
    let text = std::fs::read_to_string(&path).expect("readable input");
    let g = parse_graph(&text, Format::from_path(&path)).unwrap_or_else(|e| {
        eprintln!("{}: {e}", path.display());
        std::process::exit(3);
    });
    println!("n = {}, m = {}, connected = {}", g.n(), g.m(), g.is_connected());
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    println!("degrees: {degrees:?}");

    let co = g.complement();
    println!("complement has {} edges:", co.m());
    print!("{}", write_graph(&co, Format::EdgeList));
    assert_eq!(co.complement(), g);
}
