//! Builds the extremal families and compares brute-force `sigma_2` with the
//! closed forms.
//!
//! ```bash
//! cargo run --example constructions
//! ```

use hypermatch::constructions::{h12, h12_sigma2_formula, h_ell, sigma2_formula_h_ell, Family};
use hypermatch::Result;

fn main() -> Result<()> {
    let (n, s) = (18, 4);
    println!(
        "{:<18} {:>6} {:>8} {:>8}",
        "family", "edges", "sigma2", "formula"
    );
    for ell in 1..=3 {
        let inst = h_ell(n, s, ell)?;
        println!(
            "{:<18} {:>6} {:>8} {:>8}",
            inst.family.label(),
            inst.graph.edge_count(),
            inst.graph.sigma2().unwrap_or(0),
            sigma2_formula_h_ell(n, s, ell)?
        );
    }
    for (x, y) in [(3, 1), (2, 2), (0, 4)] {
        let inst = h12(15, x, y)?;
        println!(
            "{:<18} {:>6} {:>8} {:>8}",
            inst.family.label(),
            inst.graph.edge_count(),
            inst.graph.sigma2().unwrap_or(0),
            h12_sigma2_formula(15, x, y)?.unwrap_or(0)
        );
    }

    let fam = Family::H12 { n: 15, x: 3, y: 1 };
    let inst = fam.build()?;
    for b in &inst.partition.blocks {
        let d = inst.graph.degree(b.start)?;
        println!("block {} = {:?}, degree {d}", b.name, b.vertices());
    }
    Ok(())
}
