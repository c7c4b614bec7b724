//! Solve a generated {P5, co-P5}-free graph, weighted and unweighted, and
//! print the report.

use p5color::coloring::VertexWeights;
use p5color::oracle::{chi_exact, OracleLimits};
use p5color::pipeline::generate::gen_p5_cop5;
use p5color::pipeline::{solve_p5_cop5, SolveConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7u64);
    let g = gen_p5_cop5(14, seed);
    let cfg = SolveConfig::default();

    let r = solve_p5_cop5(&g, None, &cfg).unwrap();
    println!("n = {}, m = {}, chi = {}", g.n(), g.m(), r.chi);
    for b in &r.routes {
        println!("  {:<14} node {} (quotient size {}, chi_w {})", b.route.name(), b.block, b.size, b.chi);
    }
    assert_eq!(r.chi, chi_exact(&g, &OracleLimits::default()).unwrap().0);
    r.validate(&g).unwrap();

    let w = VertexWeights::new((0..g.n()).map(|v| 1 + (v % 2) as u32).collect()).unwrap();
    let rw = solve_p5_cop5(&g, Some(&w), &cfg).unwrap();
    println!("with weights 1,2,1,2,...: chi_w = {}", rw.chi);
    println!("{}", serde_json::to_string(&rw).unwrap());
}
