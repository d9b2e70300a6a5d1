//! Build a blocking gadget and tabulate which port colorings extend.
//!
//! ```text
//! cargo run --example blocking_gadget -- 1 3 2
//! ```

use twinkernel::compose::{build_blocking_gadget, ColorList};
use twinkernel::oracle::find_list_3_coloring;
use twinkernel::Guards;

fn main() -> twinkernel::Result<()> {
    let mut target: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if target.is_empty() {
        target = vec![1, 2];
    }
    let gadget = build_blocking_gadget(&target)?;
    println!(
        "target {target:?}: {} vertices, {} edges, ports {:?}",
        gadget.instance.vertex_count(),
        gadget.instance.graph().edge_count(),
        gadget.ports
    );
    for v in gadget.instance.graph().vertices() {
        let list: Vec<u8> = gadget.instance.list(v).colors().collect();
        println!("  {v:>3} {:<8} {list:?}", gadget.instance.label(v).unwrap_or(""));
    }

    let m = target.len();
    let mut mismatches = 0;
    for code in 0..3usize.pow(m as u32) {
        let ports: Vec<u8> = (0..m).map(|i| (code / 3usize.pow(i as u32) % 3) as u8 + 1).collect();
        let mut inst = gadget.instance.clone();
        for (&p, &c) in gadget.ports.iter().zip(&ports) {
            inst.set_list(p, ColorList::single(c));
        }
        let extends = find_list_3_coloring(&inst, &Guards::unlimited())?.is_some();
        let wanted = ports.iter().zip(&target).any(|(a, b)| a == b);
        if extends != wanted {
            mismatches += 1;
        }
        println!("  ports {ports:?}: {}", if extends { "extends" } else { "blocked" });
    }
    println!("{mismatches} mismatches");
    Ok(())
}
