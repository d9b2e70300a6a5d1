//! Kernel sizes for q-Coloring on graphs with a small twin cover but many
//! vertices.
//!
//! ```text
//! cargo run --release --example q_coloring_kernel [extra-vertices]
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twinkernel::graph::{min_twin_cover, pattern_analyze, Graph};
use twinkernel::kernel::{kernel_size_bound, kernelize};
use twinkernel::oracle::find_h_coloring;
use twinkernel::Guards;

/// A clique on `k` cover vertices plus `extra` vertices, each adjacent to a
/// random nonempty subset of the cover. Vertices outside the cover form an
/// independent set, so the cover is a twin cover.
fn cover_family(k: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::complete(k);
    for v in k..k + extra {
        g.add_vertex(v);
        let mask: u32 = rng.gen_range(1..1 << k);
        for c in (0..k).filter(|c| mask >> c & 1 == 1) {
            g.add_edge(v, c).unwrap();
        }
    }
    g
}

fn main() -> twinkernel::Result<()> {
    let extra: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(300);
    for q in [3, 4] {
        let h = pattern_analyze(&Graph::complete(q))?;
        println!("K{q}:");
        for k in 2..=4 {
            let g = cover_family(k, extra, 7 + k as u64);
            let cover = min_twin_cover(&g, &Guards::unlimited())?.len();
            let result = kernelize(&g, &h);
            let bound = kernel_size_bound(cover, &h).value;
            let outcome = match result.graph() {
                Some(kg) => {
                    let colorable = find_h_coloring(kg, &h, &Guards::unlimited())?.is_some();
                    format!("kernel {:>3} vertices, colorable: {colorable}", kg.vertex_count())
                }
                None => "trivial no-instance".to_string(),
            };
            println!(
                "  k={cover} n={:>4} -> {outcome} (bound {bound}), {:.1} ms",
                g.vertex_count(),
                result.stats.elapsed_ms
            );
        }
    }
    Ok(())
}
