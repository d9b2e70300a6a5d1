mod common;

use proptest::prelude::*;

use common::{brute_h_colorable, brute_list_colorable};
use twinkernel::compose::{
    build_blocking_gadget, colors_from_plain, compose, generate_tsd_instance, list_to_plain,
    BlockingGadget, ColorList, ListColoringInstance, TriangleSplitInstance,
};
use twinkernel::graph::{pattern_analyze, Graph};
use twinkernel::oracle::{find_2_3_coloring, find_h_coloring, find_list_3_coloring};
use twinkernel::Guards;

fn extends(gadget: &BlockingGadget, ports: &[u8]) -> bool {
    let mut inst = gadget.instance.clone();
    for (&p, &c) in gadget.ports.iter().zip(ports) {
        inst.set_list(p, ColorList::single(c));
    }
    find_list_3_coloring(&inst, &Guards::default()).unwrap().is_some()
}

fn plain_colorable(inst: &ListColoringInstance) -> bool {
    let (g, _) = list_to_plain(inst);
    brute_h_colorable(&g, &pattern_analyze(&Graph::complete(3)).unwrap())
}

fn arb_list_instance() -> impl Strategy<Value = ListColoringInstance> {
    (1..=10usize).prop_flat_map(|n| {
        (
            proptest::collection::vec(1..8u8, n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(masks, bits)| {
                let mut inst = ListColoringInstance::new();
                for mask in masks {
                    inst.add_vertex(ColorList::from_mask(mask));
                }
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                for ((u, v), b) in pairs.zip(bits) {
                    if b {
                        inst.add_edge(u, v).unwrap();
                    }
                }
                inst
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn plain_conversion_preserves_colorability(inst in arb_list_instance()) {
        prop_assert_eq!(plain_colorable(&inst), brute_list_colorable(&inst));
    }

    #[test]
    fn plain_colorings_translate_back(inst in arb_list_instance()) {
        let (g, palette) = list_to_plain(&inst);
        let k3 = pattern_analyze(&Graph::complete(3)).unwrap();
        if let Some(f) = find_h_coloring(&g, &k3, &Guards::default()).unwrap() {
            let colors = colors_from_plain(&f.map, palette);
            prop_assert!(inst.is_proper(&colors));
        }
    }
}

#[test]
fn single_port_gadget() {
    let gadget = build_blocking_gadget(&[2]).unwrap();
    assert!(extends(&gadget, &[2]));
    assert!(!extends(&gadget, &[1]));
    assert!(!extends(&gadget, &[3]));
}

#[test]
fn two_port_gadget() {
    let gadget = build_blocking_gadget(&[1, 2]).unwrap();
    assert!(extends(&gadget, &[1, 3]));
    assert!(!extends(&gadget, &[3, 3]));
}

#[test]
fn three_port_gadget_exhaustive() {
    let target = [2, 2, 2];
    let gadget = build_blocking_gadget(&target).unwrap();
    assert!(gadget.instance.vertex_count() <= 6 * 3 + 2);
    for code in 0..27 {
        let ports: Vec<u8> = (0..3).map(|i| (code / 3u32.pow(i) % 3) as u8 + 1).collect();
        let expected = ports.iter().zip(&target).any(|(a, b)| a == b);
        assert_eq!(extends(&gadget, &ports), expected, "ports {ports:?}");
    }
}

#[test]
fn empty_target_is_rejected() {
    assert!(build_blocking_gadget(&[]).is_err());
    assert!(build_blocking_gadget(&[4]).is_err());
}

#[test]
fn plain_conversion_examples() {
    let mut free = ListColoringInstance::new();
    free.add_vertex(ColorList::ALL);
    let (g, palette) = list_to_plain(&free);
    assert_eq!(g.vertex_count(), 4);
    assert!(palette.iter().all(|&c| !g.has_edge(0, c)));
    assert!(plain_colorable(&free));

    let mut fixed = ListColoringInstance::new();
    fixed.add_vertex(ColorList::single(2));
    let (g, [c1, c2, c3]) = list_to_plain(&fixed);
    assert!(g.has_edge(0, c1) && g.has_edge(0, c3) && !g.has_edge(0, c2));
    assert!(plain_colorable(&fixed));

    let mut clash = ListColoringInstance::new();
    let u = clash.add_vertex(ColorList::single(1));
    let v = clash.add_vertex(ColorList::single(1));
    clash.add_edge(u, v).unwrap();
    assert!(!plain_colorable(&clash));
}

#[test]
fn generator_extremes_and_determinism() {
    let sparse = generate_tsd_instance(1, 1, 0.0, 3);
    assert!(sparse.cross_edges().is_empty());
    assert!(find_2_3_coloring(&sparse, &Guards::default()).unwrap().is_some());
    let dense = generate_tsd_instance(1, 1, 1.0, 3);
    assert_eq!(dense.cross_edges().len(), 3);
    assert!(find_2_3_coloring(&dense, &Guards::default()).unwrap().is_none());
    assert_eq!(generate_tsd_instance(3, 2, 0.5, 7), generate_tsd_instance(3, 2, 0.5, 7));
}

#[test]
fn lone_input_composes_to_colorable_instance() {
    let input = TriangleSplitInstance::new(1, 1, vec![]).unwrap();
    let (inst, layout) = compose(&[input]).unwrap();
    assert_eq!(layout.sqrt_t, 1);
    let guards = Guards::unlimited();
    assert!(find_list_3_coloring(&inst, &guards).unwrap().is_some());
}

#[test]
fn composition_follows_the_or_of_its_inputs() {
    let yes = TriangleSplitInstance::new(1, 1, vec![]).unwrap();
    let no = TriangleSplitInstance::new(1, 1, vec![(0, 0), (0, 1), (0, 2)]).unwrap();
    let guards = Guards::unlimited();
    for bundle in [
        vec![no.clone(), no.clone(), yes.clone(), no.clone()],
        vec![no.clone(), no.clone(), no.clone(), no.clone()],
    ] {
        let expected = bundle.contains(&yes);
        let (inst, _) = compose(&bundle).unwrap();
        let (g, palette) = list_to_plain(&inst);
        let k3 = pattern_analyze(&Graph::complete(3)).unwrap();
        let found = find_h_coloring(&g, &k3, &guards).unwrap();
        assert_eq!(found.is_some(), expected);
        if let Some(f) = found {
            assert!(inst.is_proper(&colors_from_plain(&f.map, palette)));
        }
    }
}

#[test]
fn compose_validates_inputs() {
    assert!(compose(&[]).is_err());
    let a = TriangleSplitInstance::new(1, 1, vec![]).unwrap();
    let b = TriangleSplitInstance::new(2, 1, vec![]).unwrap();
    assert!(compose(&[a, b]).is_err());
}
