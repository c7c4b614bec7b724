//! Small runs of the structural checks; the CLI `verify` subcommand runs
//! the same functions at larger sizes.

use p5color::pipeline::verify::{cross_check, verify_gyarfas, verify_lemma4, verify_lemma5};

fn main() {
    let l5 = verify_lemma5(8, 0);
    for c in &l5.per_n {
        println!("prime n={} ({}): {} graphs, {} Berge, {} C5", c.n, c.method, c.instances, c.berge, c.c5);
    }
    println!("counterexamples: {}", l5.counterexamples.len());

    let l4 = verify_lemma4(4, 100, 10, 0);
    println!(
        "blocks: {} ({} O3-free, {} with an independent triple, max omega there {:?}, bound {})",
        l4.blocks, l4.o3_free, l4.bounded, l4.max_omega_with_o3, l4.bound
    );

    let gy = verify_gyarfas(100, 10, 0);
    for (omega, b) in &gy.by_omega {
        println!("omega {omega}: {} graphs, max chi {}", b.graphs, b.max_chi);
    }

    let cc = cross_check(50, 9, 7, 0);
    println!("{}", serde_json::to_string_pretty(&cc.by_class).unwrap());
    assert!(l5.holds() && l4.holds() && gy.holds() && cc.holds());
}
