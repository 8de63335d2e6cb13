//! Sweeps `sigma_2(H^{1,2}_{n,x,y})` over the parameter triangle and prints
//! the maximisers next to the candidate points and the closed form.
//!
//! ```bash
//! cargo run --release --example sweep -- 45
//! ```

use hypermatch::extremal::{candidate_points, closed_form_max, sweep_max_sigma2};
use hypermatch::Result;

fn main() -> Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(30);
    let sweep = sweep_max_sigma2(n)?;
    println!("n = {n}: max sigma2 {} at {:?}", sweep.max, sweep.argmax);
    println!("closed form: {}", closed_form_max(n)?);
    for c in candidate_points(n)? {
        println!(
            "  {:?}({}) = {}{}",
            c.formula,
            c.x,
            c.value,
            if c.in_range { "" } else { " (out of range)" }
        );
    }
    let line: Vec<String> = sweep
        .rows
        .iter()
        .filter(|r| r.x + r.y + 1 == n / 3)
        .map(|r| format!("{}:{}", r.x, r.sigma2.unwrap_or(0)))
        .collect();
    println!("on y = n/3 - x - 1: {}", line.join(" "));
    Ok(())
}
