//! Runs each finite lemma verifier once and prints its verdict.
//!
//! ```bash
//! cargo run --release --example finite_lemmas -- 200000
//! ```

use hypermatch::lemmas::{verify_by_id, LemmaParams, SearchMode, LEMMA_IDS};
use hypermatch::{Result, DEFAULT_SEED};

fn main() -> Result<()> {
    let samples = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(100_000);
    for id in LEMMA_IDS {
        let v = verify_by_id(
            id,
            LemmaParams::default(),
            SearchMode::Auto { seed: DEFAULT_SEED },
        )?;
        println!(
            "{id:<15} {:>9} configs  max {:>3?} / bound {:>3}  {}",
            v.universe_size,
            v.max_observed,
            v.bound,
            if v.holds() { "holds" } else { "FAILS" }
        );
    }
    let mode = SearchMode::Randomized {
        samples,
        seed: DEFAULT_SEED,
    };
    for (id, p) in [
        (
            "intersect-6n",
            LemmaParams {
                n: Some(8),
                ..Default::default()
            },
        ),
        (
            "ab-8a",
            LemmaParams {
                a: Some(4),
                b: Some(4),
                ..Default::default()
            },
        ),
        (
            "aharoni-howard",
            LemmaParams {
                n: Some(3),
                s: Some(3),
                ..Default::default()
            },
        ),
    ] {
        let v = verify_by_id(id, p, mode)?;
        println!(
            "{id:<15} {samples} samples  max {:?} / bound {}",
            v.max_observed, v.bound
        );
        if let Some(w) = v.witnesses.first() {
            print!("{}", w.to_edge_list());
        }
    }
    Ok(())
}
