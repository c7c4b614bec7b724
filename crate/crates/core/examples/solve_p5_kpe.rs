//! Solve {P5, Kp-e}-free graphs and show how C-blocks were routed.

use p5color::graph::named;
use p5color::pipeline::generate::gen_p5_kpe;
use p5color::pipeline::{solve_p5_kpe, SolveConfig, SolveError};

fn main() {
    let cfg = SolveConfig::default();
    for (p, seed, density) in [(4, 1, 0.3), (5, 2, 0.5), (4, 3, 0.2)] {
        let gen = gen_p5_kpe(12, p, seed, density, 1_000_000).unwrap();
        let r = solve_p5_kpe(&gen.graph, p, &cfg).unwrap();
        println!("p = {p}, density {density}: accepted after {} attempts, chi = {}", gen.attempts, r.chi);
        for b in &r.routes {
            println!("  {:<14} block {} chi {} omega {:?}", b.route.name(), b.block, b.chi, b.omega);
        }
    }

    match solve_p5_kpe(&named::kp_minus_e(4), 4, &cfg) {
        Err(SolveError::NotInClass { witness, .. }) => println!("K4-e rejected: {witness}"),
        other => panic!("unexpected {other:?}"),
    }
}
