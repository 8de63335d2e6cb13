//! Classifies every bipartite graph between two labelled triples and lists
//! the perfect-matching-free classes with five and six edges.
//!
//! ```bash
//! cargo run --example bipartite_fact
//! ```

use hypermatch::lemmas::{bipartite_class, bipartite_class_representative, verify_bipartite_fact};
use hypermatch::LinkGraph;

fn main() {
    let v = verify_bipartite_fact();
    println!(
        "{} graphs, PM-free maximum {:?} edges",
        v.universe_size, v.max_observed
    );
    for c in &v.classes {
        println!(
            "{}: {} edges, {} labelled copies, degrees {:?} / {:?}",
            c.name, c.edge_count, c.labelled_count, c.left_degrees, c.right_degrees
        );
    }
    let rep = bipartite_class_representative("B_{033}").expect("class exists");
    println!("B_{{033}} representative: {:?}", rep.pairs());

    let link = LinkGraph::new(
        &[7, 8, 9, 10, 11, 12],
        [(7, 10), (7, 11), (7, 12), (8, 10), (8, 11), (8, 12)],
    )
    .expect("valid pairs");
    println!(
        "relabelled copy is {:?}",
        bipartite_class(&link, &[7, 8, 9], &[10, 11, 12])
    );
}
