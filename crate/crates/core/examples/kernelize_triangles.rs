//! Watch each reduction rule fire while a graph is kernelized.
//!
//! ```text
//! cargo run --example kernelize_triangles
//! ```

use twinkernel::graph::{pattern_analyze, Graph};
use twinkernel::kernel::{kernelize_with, KernelOutcome, RuleApplication};

fn main() -> twinkernel::Result<()> {
    let h = pattern_analyze(&Graph::complete(3))?;

    // Five disjoint triangles, plus a 5-cycle hanging off the first one.
    let mut g = (0..5).fold(Graph::new(), |acc, _| acc.disjoint_union(&Graph::complete(3)));
    g = g.disjoint_union(&Graph::cycle(5));
    g.add_edge(0, 15)?;

    let result = kernelize_with(&g, &h, |step, now| {
        let what = match step {
            RuleApplication::Rule2 { from, to, removed } => {
                format!("rule 2 cut {} edges between {from:?} and {to:?}", removed.len())
            }
            RuleApplication::Rule3 { removed } => format!("rule 3 dropped isolated {removed:?}"),
        };
        println!("{what:<55} -> {} vertices, {} edges", now.vertex_count(), now.edge_count());
    });

    match &result.outcome {
        KernelOutcome::Kernel(k) => println!("\nkernel: {} vertices, {} edges", k.vertex_count(), k.edge_count()),
        KernelOutcome::TrivialNo => println!("\ntrivial no-instance"),
    }
    println!("{:#?}", result.stats);
    Ok(())
}
