//! Reference oracles written independently of the library's solvers.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use twinkernel::compose::ListColoringInstance;
use twinkernel::graph::{Graph, PatternGraph, VertexId};

/// Whether a homomorphism `g → h` exists, by plain backtracking in vertex
/// order with a check against already-placed neighbors.
pub fn brute_h_colorable(g: &Graph, h: &PatternGraph) -> bool {
    let verts: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let earlier: Vec<Vec<usize>> = verts
        .iter()
        .enumerate()
        .map(|(i, &v)| g.neighbors(v).iter().map(|w| index[w]).filter(|&j| j < i).collect())
        .collect();
    let mut f = vec![0usize; verts.len()];
    fn go(i: usize, f: &mut [usize], earlier: &[Vec<usize>], h: &PatternGraph) -> bool {
        if i == f.len() {
            return true;
        }
        for c in 0..h.color_count() {
            if earlier[i].iter().all(|&j| h.adjacent(f[j], c)) {
                f[i] = c;
                if go(i + 1, f, earlier, h) {
                    return true;
                }
            }
        }
        false
    }
    go(0, &mut f, &earlier, h)
}

/// Whether the list instance has a proper list coloring, by backtracking.
pub fn brute_list_colorable(inst: &ListColoringInstance) -> bool {
    let g = inst.graph();
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut colors: BTreeMap<VertexId, u8> = BTreeMap::new();
    fn go(
        i: usize,
        verts: &[VertexId],
        inst: &ListColoringInstance,
        colors: &mut BTreeMap<VertexId, u8>,
    ) -> bool {
        let Some(&v) = verts.get(i) else { return true };
        for c in inst.list(v).colors() {
            if inst.graph().neighbors(v).iter().all(|w| colors.get(w) != Some(&c)) {
                colors.insert(v, c);
                if go(i + 1, verts, inst, colors) {
                    return true;
                }
                colors.remove(&v);
            }
        }
        false
    }
    go(0, &verts, inst, &mut colors)
}

/// Twin classes by comparing closed neighborhoods pairwise.
pub fn brute_twin_classes(g: &Graph) -> Vec<Vec<VertexId>> {
    let closed = |v: VertexId| {
        let mut n: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
        n.push(v);
        n.sort();
        n
    };
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for v in g.vertices() {
        match classes.iter_mut().find(|c| closed(c[0]) == closed(v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
}

/// Smallest vertex set meeting every edge between non-twins, by subset
/// enumeration in order of size.
pub fn brute_min_twin_cover(g: &Graph) -> usize {
    let verts: Vec<VertexId> = g.vertices().collect();
    let hard: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| !same_closed(g, u, v))
        .map(|(u, v)| {
            (
                verts.binary_search(&u).unwrap(),
                verts.binary_search(&v).unwrap(),
            )
        })
        .collect();
    let n = verts.len();
    (0..=n)
        .find(|&k| {
            (0u32..1 << n)
                .filter(|s| s.count_ones() as usize == k)
                .any(|s| hard.iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        })
        .unwrap()
}

fn same_closed(g: &Graph, u: VertexId, v: VertexId) -> bool {
    let mut a = g.neighbors(u).clone();
    a.insert(u);
    let mut b = g.neighbors(v).clone();
    b.insert(v);
    a == b
}

/// The labeled graph on `0..n` whose edges are the set bits of `code`, in
/// lexicographic pair order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Every labeled graph on `0..n`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |code| graph_from_code(n, code))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Proptest strategy for labeled graphs on `0..n` with `n ≤ max_n`.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), b) in pairs.zip(bits) {
                if b {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

/// Every map `V(g) → V(h)` that is a homomorphism, by enumeration.
pub fn all_h_colorings(g: &Graph, h: &PatternGraph) -> Vec<BTreeMap<VertexId, usize>> {
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut out = Vec::new();
    let mut f = BTreeMap::new();
    fn go(
        i: usize,
        verts: &[VertexId],
        g: &Graph,
        h: &PatternGraph,
        f: &mut BTreeMap<VertexId, usize>,
        out: &mut Vec<BTreeMap<VertexId, usize>>,
    ) {
        let Some(&v) = verts.get(i) else {
            out.push(f.clone());
            return;
        };
        for c in 0..h.color_count() {
            if g.neighbors(v).iter().all(|w| f.get(w).is_none_or(|&d| h.adjacent(c, d))) {
                f.insert(v, c);
                go(i + 1, verts, g, h, f, out);
                f.remove(&v);
            }
        }
    }
    go(0, &verts, g, h, &mut f, &mut out);
    out
}
