//! Degree split, absorber search, a disjoint absorber family and absorption
//! of a leftover set on a dense random host.
//!
//! ```bash
//! cargo run --release --example absorbing_pipeline
//! ```

use hypermatch::absorbing::{
    absorb, build_family, degree_split, find_absorbers, AbsorberSearch, FamilyOptions,
};
use hypermatch::{Hypergraph3, Result, DEFAULT_SEED};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let h = Hypergraph3::random(60, 0.8, &mut rng);
    let split = degree_split(&h, 0.05)?;
    println!(
        "host: n={} m={} sigma2={:?}; W' {} U' {}; hypothesis {}",
        h.n(),
        h.edge_count(),
        h.sigma2(),
        split.low.len(),
        split.high.len(),
        split.sigma2_hypothesis
    );

    let opts = AbsorberSearch {
        want: 3,
        ..Default::default()
    };
    for t in find_absorbers(&h, &[0, 1, 2], &opts, &mut rng)? {
        println!("absorber for {{0, 1, 2}}: {t:?}");
    }

    let family = build_family(&h, 20, 2, &FamilyOptions::default())?;
    println!(
        "family: {} absorbers, coverage {:.2} (min {})",
        family.sets.len(),
        family.coverage.fraction,
        family.coverage.min_count
    );
    let used = family.vertices();
    let leftover: Vec<usize> = (0..h.n()).filter(|v| !used.contains(v)).take(6).collect();
    let out = absorb(&h, &family, &leftover, DEFAULT_SEED)?;
    for r in &out.routes {
        println!("{:?} -> absorber {}", r.triple, r.absorber);
    }
    println!(
        "matching of {} edges covers {} vertices",
        out.certificate.size,
        out.certificate.covered.len()
    );
    Ok(())
}
