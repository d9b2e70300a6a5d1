use std::collections::BTreeSet;

use proptest::prelude::*;

use twinkernel::gf2::{
    add_to_basis, in_span, monomial_count_bound, GF2Basis, GF2Constraint, Monomial, Var,
};

/// Variables `c[v, c]` for `v < 4`, `c < 2`.
fn var(i: usize) -> Var {
    Var::new(i / 2, i % 2)
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..8usize, 0..=3).prop_map(|vs| Monomial::new(vs.into_iter().map(var)))
}

fn arb_constraint() -> impl Strategy<Value = GF2Constraint> {
    proptest::collection::vec(arb_monomial(), 0..=4).prop_map(GF2Constraint::from_monomials)
}

fn subset_sum(gens: &[GF2Constraint], mask: u32) -> GF2Constraint {
    gens.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .fold(GF2Constraint::zero(), |acc, (_, g)| acc.add(g))
}

proptest! {
    #[test]
    fn in_span_matches_enumeration(
        gens in proptest::collection::vec(arb_constraint(), 0..=10),
        target in arb_constraint(),
        mask in any::<u32>(),
        use_sum in any::<bool>(),
    ) {
        let target = if use_sum { subset_sum(&gens, mask) } else { target };
        let enumerated = (0u32..1 << gens.len()).any(|m| subset_sum(&gens, m) == target);
        prop_assert_eq!(in_span(&target, &gens), enumerated);
    }

    #[test]
    fn span_members_vanish_where_generators_vanish(
        gens in proptest::collection::vec(arb_constraint(), 0..=8),
        mask in any::<u32>(),
    ) {
        let target = subset_sum(&gens, mask);
        prop_assert!(in_span(&target, &gens));
        for assignment in 0u32..256 {
            let value = |v: Var| assignment >> (2 * v.vertex + v.color) & 1 == 1;
            if gens.iter().all(|g| !g.evaluate(value)) {
                prop_assert!(!target.evaluate(value));
            }
        }
    }

    #[test]
    fn rank_is_bounded_by_monomials(gens in proptest::collection::vec(arb_constraint(), 0..=12)) {
        let mut basis = GF2Basis::with_degree_bound(3);
        for g in &gens {
            basis.insert(g);
        }
        let distinct: BTreeSet<&Monomial> = gens.iter().flat_map(|g| g.monomials()).collect();
        prop_assert!(basis.rank() <= distinct.len());
        prop_assert!(monomial_count_bound(8, 3).admits(distinct.len() as u128));
    }

    #[test]
    fn reinserting_accepted_rows_is_rejected(gens in proptest::collection::vec(arb_constraint(), 0..=12)) {
        let mut basis = GF2Basis::new();
        let mut accepted = Vec::new();
        for g in &gens {
            let (next, ok) = add_to_basis(basis, g);
            basis = next;
            if ok {
                accepted.push(g.clone());
            }
        }
        prop_assert_eq!(basis.rank(), accepted.len());
        for g in &accepted {
            let (next, ok) = add_to_basis(basis, g);
            basis = next;
            prop_assert!(!ok);
        }
    }

    #[test]
    fn squares_collapse(vs in proptest::collection::vec(0..8usize, 0..6)) {
        let once: BTreeSet<usize> = vs.iter().copied().collect();
        let doubled = Monomial::new(vs.iter().chain(vs.iter()).map(|&i| var(i)));
        prop_assert_eq!(doubled.degree(), once.len());
    }
}

#[test]
fn stated_span_examples() {
    let a = GF2Constraint::single(Monomial::new([var(0)]));
    let b = GF2Constraint::single(Monomial::new([var(1)]));
    assert!(in_span(&a, [&a, &b]));
    assert!(in_span(&GF2Constraint::zero(), [&a]));
    let ab = GF2Constraint::single(Monomial::new([var(0), var(1)]));
    assert!(!in_span(&ab, [&a, &b]));
    assert!(in_span(&a.add(&b), [&a, &b]));
}

#[test]
fn monomial_bound_examples() {
    assert_eq!(monomial_count_bound(3, 2).value, 10);
    assert_eq!(monomial_count_bound(1, 1).value, 2);
    assert_eq!(monomial_count_bound(5, 0).value, 2);
    assert!(monomial_count_bound(u64::MAX, 9).saturated);
}
