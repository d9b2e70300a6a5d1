//! Incremental GF(2) elimination: which constraints are implied by others.
//!
//! ```text
//! cargo run --example span_membership
//! ```

use twinkernel::constraints::build_all_constraints;
use twinkernel::gf2::{in_span, GF2Basis, GF2Constraint, Monomial, Var};
use twinkernel::graph::{pattern_analyze, twin_decomposition, Graph};

fn main() -> twinkernel::Result<()> {
    let x = |v, c| Monomial::new([Var::new(v, c)]);
    let a = GF2Constraint::from_monomials([x(0, 0), x(1, 1)]);
    let b = GF2Constraint::from_monomials([x(1, 1), x(2, 0)]);
    let sum = a.add(&b);
    println!("a = {a}\nb = {b}\na + b = {sum}");
    println!("a + b in span(a, b): {}", in_span(&sum, [&a, &b]));
    let c = GF2Constraint::single(Monomial::new([Var::new(0, 0), Var::new(2, 0)]));
    println!("{c} in span(a, b): {}", in_span(&c, [&a, &b]));

    // Rank of the full constraint family of a wheel against K3.
    let mut wheel = Graph::cycle(6);
    wheel.add_vertex(6);
    for v in 0..6 {
        wheel.add_edge(6, v)?;
    }
    let h = pattern_analyze(&Graph::complete(3))?;
    let sets = build_all_constraints(&wheel, &h, &twin_decomposition(&wheel));
    let mut basis = GF2Basis::with_degree_bound(h.max_degree());
    let mut total = 0;
    for c in sets.iter().flat_map(|s| s.iter()) {
        basis.insert(c);
        total += 1;
    }
    println!(
        "\nwheel W6 against K3: {total} constraints, rank {}, {} distinct monomials",
        basis.rank(),
        basis.monomial_count()
    );
    Ok(())
}
