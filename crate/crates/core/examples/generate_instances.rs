//! Write a few generated instances in both formats to a temporary directory.

use p5color::detect::{class_membership, GraphClass};
use p5color::io::{parse_graph, write_graph, Format};
use p5color::pipeline::generate::{gen_p5_cop5, gen_p5_kpe};

fn main() {
    let dir = std::env::temp_dir().join("p5color-instances");
    std::fs::create_dir_all(&dir).unwrap();
    for seed in 0..3u64 {
        let g = gen_p5_cop5(10 + seed as usize, seed);
        let path = dir.join(format!("cop5-{seed}.col"));
        std::fs::write(&path, write_graph(&g, Format::Dimacs)).unwrap();
        println!("{}: n={} m={}", path.display(), g.n(), g.m());

        let k = gen_p5_kpe(10, 4, seed, 0.3, 100_000).unwrap();
        let path = dir.join(format!("k4e-{seed}.txt"));
        std::fs::write(&path, write_graph(&k.graph, Format::EdgeList)).unwrap();
        println!("{}: n={} m={} after {} attempts", path.display(), k.graph.n(), k.graph.m(), k.attempts);

        let back = parse_graph(&std::fs::read_to_string(&path).unwrap(), Format::EdgeList).unwrap();
        assert_eq!(back, k.graph);
        assert!(class_membership(&back, GraphClass::P5Kpe { p: 4 }).is_ok());
    }
}
