//! Maximum matchings with the blossom algorithm, and O3-free coloring through
//! a matching of the complement.

use p5color::graph::{named, Graph};
use p5color::matching::{chi_o3_free, max_matching};
use p5color::oracle::{chi_exact, max_matching_bruteforce, OracleLimits};

fn main() {
    let limits = OracleLimits::default();
    let p = named::petersen();
    let m = max_matching(&p);
    println!("Petersen: matching of size {} {:?}", m.size(), m.edges());
    assert_eq!(m.size(), max_matching_bruteforce(&p, &limits).unwrap());

    // complement of C7 has no independent triple
    let g: Graph = named::cycle(7).complement();
    let (k, col) = chi_o3_free(&g).unwrap();
    println!("co-C7: chi = {k} = n - nu(C7) = 7 - {}", max_matching(&named::cycle(7)).size());
    println!("classes: {:?}", col.classes());
    assert_eq!(k, chi_exact(&g, &limits).unwrap().0);

    match chi_o3_free(&named::path(5)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("P5: {e}"),
    }
}
