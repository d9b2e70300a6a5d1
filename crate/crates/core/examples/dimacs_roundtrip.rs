//! Read a graph in the DIMACS edge format, kernelize it, and print the
//! kernel together with its JSON report.
//!
//! ```text
//! cargo run --example dimacs_roundtrip [graph.col] [pattern]
//! ```

use twinkernel::graph::min_twin_cover;
use twinkernel::io::{emit_graph, parse_graph, read_graph, resolve_pattern, to_json, StatsReport};
use twinkernel::kernel::kernelize;
use twinkernel::Guards;

const SAMPLE: &str = "\
c two triangles sharing an edge, plus a pendant path
p edge 6 7
e 1 2
e 1 3
e 2 3
e 2 4
e 3 4
e 4 5
e 5 6
";

fn main() -> twinkernel::Result<()> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => read_graph(path.as_ref())?,
        None => parse_graph(SAMPLE)?,
    };
    let h = resolve_pattern(&args.next().unwrap_or_else(|| "K3".into()))?;

    let text = emit_graph(&g);
    assert_eq!(parse_graph(&text)?, g);
    print!("input:\n{text}");

    let result = kernelize(&g, &h);
    match result.graph() {
        Some(k) => print!("\nkernel:\n{}", emit_graph(k)),
        None => println!("\nTRIVIAL-NO"),
    }
    let cover = min_twin_cover(&g, &Guards::default()).ok().map(|c| c.len());
    println!("\n{}", to_json(&StatsReport::new(&g, &h, &result, cover))?);
    Ok(())
}
