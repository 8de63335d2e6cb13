//! Writes an annotated edge list, parses it back and reads the block
//! annotations.
//!
//! ```bash
//! cargo run --example edge_list_io
//! ```

use hypermatch::constructions::h12;
use hypermatch::io::{parse_edge_list, write_annotated, write_edge_list};
use hypermatch::{Hypergraph3, Result};

fn main() -> Result<()> {
    let inst = h12(12, 1, 1)?;
    let text = write_annotated(&inst.graph, &inst.partition, &["H^{1,2}_{12,1,1}".into()]);
    println!("{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));

    let back = parse_edge_list(&text)?;
    assert_eq!(back.graph, inst.graph);
    for b in &back.blocks {
        println!("block {} has {} vertices", b.name, b.len);
    }

    let h = Hypergraph3::new(6, [[5, 1, 0], [2, 4, 3]])?;
    print!("{}", write_edge_list(&h));
    println!("{:?}", parse_edge_list("3 1\n0 1 5\n").err());
    Ok(())
}
