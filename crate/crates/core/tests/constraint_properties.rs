mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use common::{all_h_colorings, arb_graph};
use twinkernel::constraints::{
    build_all_constraints, build_constraints_for_class, count_all_constraints, ConstraintSet,
};
use twinkernel::gf2::Var;
use twinkernel::graph::{pattern_analyze, twin_decomposition, Graph, PatternGraph, VertexId};
use twinkernel::oracle::find_h_coloring;
use twinkernel::Guards;

fn patterns() -> Vec<PatternGraph> {
    [Graph::complete(3), Graph::complete(4), Graph::cycle(5)]
        .iter()
        .map(|h| pattern_analyze(h).unwrap())
        .collect()
}

fn satisfies(set: &ConstraintSet, f: &BTreeMap<VertexId, usize>) -> bool {
    set.iter()
        .all(|c| !c.evaluate(|v: Var| f.get(&v.vertex) == Some(&v.color)))
}

/// Whether `f` on `G − P` extends to the clique `P`, by trying every color
/// tuple for its members.
fn extends(g: &Graph, h: &PatternGraph, class: &[VertexId], f: &BTreeMap<VertexId, usize>) -> bool {
    let q = h.color_count();
    (0..q.pow(class.len() as u32)).any(|code| {
        let colors: Vec<usize> = (0..class.len()).map(|i| code / q.pow(i as u32) % q).collect();
        class.iter().zip(&colors).enumerate().all(|(i, (&v, &c))| {
            colors[..i].iter().all(|&d| h.adjacent(c, d))
                && g.neighbors(v).iter().all(|w| f.get(w).is_none_or(|&d| h.adjacent(c, d)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn proper_colorings_satisfy_everything(g in arb_graph(9)) {
        for h in patterns() {
            let pi = twin_decomposition(&g);
            let sets = build_all_constraints(&g, &h, &pi);
            if let Some(f) = find_h_coloring(&g, &h, &Guards::default()).unwrap() {
                for set in &sets {
                    prop_assert!(satisfies(set, &f.map));
                }
            }
        }
    }

    #[test]
    fn constraints_decide_extension(g in arb_graph(9)) {
        for h in patterns() {
            let pi = twin_decomposition(&g);
            // Larger classes are rejected outright before constraints matter.
            for class in pi.classes().iter().filter(|p| p.len() <= h.clique_number()) {
                let set = build_constraints_for_class(&g, &h, class);
                let rest: BTreeSet<VertexId> =
                    g.vertices().filter(|v| !class.contains(v)).collect();
                for f in all_h_colorings(&g.induced_subgraph(&rest), &h) {
                    prop_assert_eq!(satisfies(&set, &f), extends(&g, &h, class, &f));
                }
            }
        }
    }

    #[test]
    fn constraints_are_local_and_low_degree(g in arb_graph(9)) {
        for h in patterns() {
            let pi = twin_decomposition(&g);
            let sets = build_all_constraints(&g, &h, &pi);
            let total: usize = sets.iter().map(ConstraintSet::len).sum();
            prop_assert_eq!(count_all_constraints(&g, &h, &pi), total as u128);
            for set in &sets {
                let nbhd = g.set_neighborhood(&set.owner);
                for c in set.iter() {
                    prop_assert!(c.degree() <= h.max_degree());
                    prop_assert!(c.variables().iter().all(|v| nbhd.contains(&v.vertex)));
                }
            }
        }
    }
}

#[test]
fn edgeless_graph_has_no_constraints() {
    for h in patterns() {
        let g = Graph::empty(5);
        let sets = build_all_constraints(&g, &h, &twin_decomposition(&g));
        assert!(sets.iter().all(ConstraintSet::is_empty));
    }
}
