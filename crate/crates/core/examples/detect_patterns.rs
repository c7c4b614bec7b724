//! Search a few named graphs for the forbidden patterns of both classes.

use p5color::detect::{
    class_membership, find_independent_triple, find_induced_c5, find_induced_co_p5, find_induced_kp_minus_e,
    find_induced_p5, find_odd_hole_or_antihole, GraphClass, DEFAULT_BERGE_CUTOFF,
};
use p5color::graph::named;

fn main() {
    let cases = [
        ("C5", named::cycle(5)),
        ("P5", named::path(5)),
        ("C7", named::cycle(7)),
        ("K4-e", named::kp_minus_e(4)),
        ("Petersen", named::petersen()),
        ("K3,3", named::complete_bipartite(3, 3)),
    ];
    for (name, g) in &cases {
        println!("== {name}");
        let show = |label: &str, w: Option<p5color::detect::Witness>| match w {
            Some(w) => {
                assert!(w.verify(g));
                println!("  {label:<14} {w}");
            }
            None => println!("  {label:<14} none"),
        };
        show("P5", find_induced_p5(g));
        show("co-P5", find_induced_co_p5(g));
        show("C5", find_induced_c5(g));
        show("K4-e", find_induced_kp_minus_e(g, 4).unwrap());
        show("odd (anti)hole", find_odd_hole_or_antihole(g, DEFAULT_BERGE_CUTOFF).unwrap());
        println!("  O3             {:?}", find_independent_triple(g));
        for class in [GraphClass::P5CoP5, GraphClass::P5Kpe { p: 4 }] {
            match class_membership(g, class) {
                Ok(()) => println!("  member of {class}"),
                Err(w) => println!("  not {class}: {w}"),
            }
        }
    }
}
