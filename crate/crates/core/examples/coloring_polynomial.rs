//! The GF(2) polynomial that is odd exactly on rainbow choices, and the
//! constraint families built from it for one twin class.
//!
//! ```text
//! cargo run --example coloring_polynomial
//! ```

use twinkernel::constraints::{
    build_coloring_polynomial, build_constraints_for_class, evaluate, ConstraintKind,
    PartialChoiceAssignment,
};
use twinkernel::graph::{pattern_analyze, Graph};

fn main() -> twinkernel::Result<()> {
    let p = build_coloring_polynomial(3);
    println!("p(y) for q = 3 has {} monomials of degree {}:", p.len(), p.degree());
    println!("  {p}");

    let cases = [
        ("rows pick 0, 1, 2", vec![(0, 0), (1, 1), (2, 2)]),
        ("rows pick 0, 0, 2", vec![(0, 0), (1, 0), (2, 2)]),
        ("rows pick 2, 0, 1", vec![(0, 2), (1, 0), (2, 1)]),
        ("row 0 picks 1 only", vec![(0, 1)]),
    ];
    for (name, pairs) in cases {
        let a = PartialChoiceAssignment::from_pairs(pairs);
        println!("  {name:<20} -> {}", u8::from(evaluate(&p, &a)));
    }

    // Center of a star K1,3 against K3: its three leaves may not use all
    // three colors, which is one TypeP constraint.
    let star = Graph::star(3);
    let h = pattern_analyze(&Graph::complete(3))?;
    let set = build_constraints_for_class(&star, &h, &[0]);
    println!("\nL({{0}}, K1,3) against K3: {} constraints", set.len());
    for t in &set.constraints {
        let tag = match &t.kind {
            ConstraintKind::TypeP { s, x } => format!("P S={s:?} X={x:?}"),
            ConstraintKind::TypeQ { s, x } => format!("Q S={s:?} x={x:?}"),
        };
        println!("  {tag:<28} {}", t.constraint);
    }
    Ok(())
}
