//! OR-compose several 2-3-coloring instances into one 3-coloring instance
//! and read the selected input back out of a coloring.
//!
//! ```text
//! cargo run --release --example cross_composition
//! ```

use twinkernel::compose::{
    colors_from_plain, compose, list_to_plain, selector_a_witness, selector_b_witness,
    TriangleSplitInstance,
};
use twinkernel::graph::{pattern_analyze, Graph};
use twinkernel::oracle::{find_2_3_coloring, find_h_coloring};
use twinkernel::Guards;

fn main() -> twinkernel::Result<()> {
    let blocked = |u: usize| (0..3).map(move |v| (u, v));
    // Only the third input has a coloring: its u_1 sees just two triangle
    // vertices.
    let inputs = vec![
        TriangleSplitInstance::new(2, 1, blocked(0).collect())?,
        TriangleSplitInstance::new(2, 1, blocked(1).collect())?,
        TriangleSplitInstance::new(2, 1, vec![(0, 0), (1, 1), (1, 2)])?,
        TriangleSplitInstance::new(2, 1, blocked(0).chain(blocked(1)).collect())?,
    ];
    for (i, x) in inputs.iter().enumerate() {
        let ok = find_2_3_coloring(x, &Guards::default())?.is_some();
        println!("input {i}: {} cross edges, 2-3-colorable: {ok}", x.cross_edges().len());
    }

    let (inst, layout) = compose(&inputs)?;
    let (plain, palette) = list_to_plain(&inst);
    println!(
        "\ncomposed: {} list vertices, {} gadgets, plain graph {} vertices / {} edges",
        inst.vertex_count(),
        layout.gadgets.len(),
        plain.vertex_count(),
        plain.edge_count()
    );
    println!("{:#?}", layout.terms);

    let k3 = pattern_analyze(&Graph::complete(3))?;
    match find_h_coloring(&plain, &k3, &Guards::unlimited())? {
        Some(f) => {
            let colors = colors_from_plain(&f.map, palette);
            let i = selector_a_witness(&layout, &colors);
            let j = selector_b_witness(&layout, &colors);
            println!("3-colorable; row selector {i:?}, column selector {j:?}");
            if let (Some(i), Some(j)) = (i, j) {
                println!("selected input {}", i * layout.sqrt_t + j);
            }
        }
        None => println!("not 3-colorable"),
    }
    Ok(())
}
