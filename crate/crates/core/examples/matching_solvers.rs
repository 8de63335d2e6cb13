//! Runs the exact matching solvers side by side on random and structured
//! hosts, including the 3-partite and bipartite specialisations.
//!
//! ```bash
//! cargo run --release --example matching_solvers
//! ```

use hypermatch::constructions::h12;
use hypermatch::matching::{
    bipartite_pm, has_perfect_matching, has_pm_3partite, max_matching, max_matching_bnb,
    max_matching_dp,
};
use hypermatch::{Hypergraph3, LinkGraph, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(hypermatch::DEFAULT_SEED);
    for n in [9, 12, 15] {
        let h = Hypergraph3::random(n, 0.15, &mut rng);
        let (bnb, stats) = max_matching_bnb(&h, None);
        println!(
            "random n={n} m={}: dp {} bnb {} ({} nodes)",
            h.edge_count(),
            max_matching_dp(&h).len(),
            bnb.len(),
            stats.nodes
        );
    }

    let g = h12(24, 4, 3)?.graph;
    let m = max_matching(&g);
    println!(
        "H^{{1,2}}_{{24,4,3}}: max matching {} {:?}",
        m.size, m.edges
    );
    println!("perfect matching: {}", has_perfect_matching(&g)?.is_some());

    let cells = [(0, 0, 0), (1, 1, 1), (0, 1, 1), (1, 0, 1)];
    println!(
        "3-partite cells {cells:?}: PM {}",
        has_pm_3partite(&cells, 2)?
    );

    let link = LinkGraph::new(
        &[0, 1, 2, 3, 4, 5],
        [(0, 3), (0, 4), (1, 3), (1, 4), (2, 5)],
    )?;
    println!(
        "bipartite link PM: {}",
        bipartite_pm(&link, &[0, 1, 2], &[3, 4, 5])?
    );
    Ok(())
}
