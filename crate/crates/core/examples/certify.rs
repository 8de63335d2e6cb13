//! Certifies the `sigma_2`-maximising `H^{1,2}_{n,x,y}` as a counterexample:
//! `sigma_2` above the threshold, no perfect matching, not inside `H^2`.
//!
//! ```bash
//! cargo run --release --example certify -- 30
//! ```

use hypermatch::extremal::certify_counterexample;
use hypermatch::Result;

fn main() -> Result<()> {
    let orders: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let orders = if orders.is_empty() {
        vec![15, 21, 30]
    } else {
        orders
    };
    for n in orders {
        let r = certify_counterexample(n)?;
        println!("n = {n}: H^{{1,2}}_{{{n},{},{}}}", r.x, r.y);
        println!(
            "  sigma2 {} (pair {:?}) vs threshold {}",
            r.sigma2, r.sigma2_pair, r.threshold
        );
        println!(
            "  max matching {} < {} ({:?})",
            r.max_matching,
            n / 3,
            r.matching_method
        );
        println!(
            "  independence number {} <= {}",
            r.independence_number,
            n / 3
        );
        println!(
            "  closed form {} agrees: {}",
            r.closed_form_max, r.closed_form_agrees
        );
        println!("  all conditions hold: {}", r.all_conditions_hold);
    }
    Ok(())
}
