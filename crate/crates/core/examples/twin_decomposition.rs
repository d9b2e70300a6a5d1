//! Twin classes, a minimum twin cover, and the pattern parameters that drive
//! the kernel.
//!
//! ```text
//! cargo run --example twin_decomposition
//! ```

use twinkernel::graph::{min_twin_cover, pattern_analyze, twin_decomposition, Graph};
use twinkernel::Guards;

fn main() -> twinkernel::Result<()> {
    // A 5-cycle with two extra twins glued onto vertex 0: {0, 5, 6} all share
    // the closed neighborhood {0, 1, 4, 5, 6}.
    let mut g = Graph::cycle(5);
    for t in [5, 6] {
        g.add_vertex(t);
        for w in [0, 1, 4] {
            g.add_edge(t, w)?;
        }
    }
    g.add_edge(5, 6)?;

    let pi = twin_decomposition(&g);
    println!("{} vertices, {} edges, {} twin classes", g.vertex_count(), g.edge_count(), pi.len());
    for class in pi.classes() {
        println!("  {class:?}");
    }

    let cover = min_twin_cover(&g, &Guards::default())?;
    println!("minimum twin cover: {:?} (k = {})", cover.vertices, cover.len());

    for (name, h) in [("K3", Graph::complete(3)), ("C5", Graph::cycle(5)), ("petersen", Graph::petersen())] {
        let p = pattern_analyze(&h)?;
        println!("{name:>8}: |V| = {}, max degree = {}, clique number = {}", p.color_count(), p.max_degree(), p.clique_number());
    }
    match pattern_analyze(&Graph::cycle(4)) {
        Err(e) => println!("C4 rejected: {e}"),
        Ok(_) => unreachable!("C4 is bipartite"),
    }
    Ok(())
}
