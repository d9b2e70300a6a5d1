//! Blocking gadgets, the cross-composition into list 3-coloring, and the
//! reduction from list 3-coloring to plain 3-coloring.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::guards::Guards;
use crate::oracle::find_list_3_coloring;

pub const LAYOUT_VERSION: u32 = 1;

/// A subset of the palette `{1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorList(u8);

impl ColorList {
    pub const ALL: ColorList = ColorList(0b111);
    pub const EMPTY: ColorList = ColorList(0);

    /// Panics on colors outside `1..=3`.
    pub fn new(colors: &[u8]) -> Self {
        ColorList(colors.iter().fold(0, |m, &c| {
            assert!((1..=3).contains(&c), "color {c} is outside 1..=3");
            m | 1 << (c - 1)
        }))
    }

    pub fn single(c: u8) -> Self {
        Self::new(&[c])
    }

    pub fn from_mask(mask: u8) -> Self {
        ColorList(mask & 0b111)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, c: u8) -> bool {
        (1..=3).contains(&c) && self.0 & 1 << (c - 1) != 0
    }

    pub fn colors(self) -> impl Iterator<Item = u8> {
        (1..=3).filter(move |&c| self.contains(c))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    fn map(self, sigma: &[u8; 4]) -> Self {
        ColorList(self.colors().fold(0, |m, c| m | 1 << (sigma[c as usize] - 1)))
    }
}

/// A graph with a list `L(v) ⊆ {1, 2, 3}` on every vertex. Vertices are
/// numbered densely in creation order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListColoringInstance {
    graph: Graph,
    lists: BTreeMap<VertexId, ColorList>,
    labels: BTreeMap<VertexId, String>,
}

impl ListColoringInstance {
    pub fn new() -> Self {
        Self::default()
    }

    /// Pairs `graph` with `lists`, which must cover exactly its vertices.
    pub fn from_parts(graph: Graph, lists: BTreeMap<VertexId, ColorList>) -> Result<Self> {
        if !graph.vertices().eq(lists.keys().copied()) {
            return Err(Error::InvalidInput(
                "lists must be given for exactly the vertices of the graph".into(),
            ));
        }
        Ok(ListColoringInstance {
            graph,
            lists,
            labels: BTreeMap::new(),
        })
    }

    pub fn add_vertex(&mut self, list: ColorList) -> VertexId {
        let v = self.graph.vertices().last().map_or(0, |v| v + 1);
        self.graph.add_vertex(v);
        self.lists.insert(v, list);
        v
    }

    pub fn add_labeled_vertex(&mut self, list: ColorList, label: impl Into<String>) -> VertexId {
        let v = self.add_vertex(list);
        self.labels.insert(v, label.into());
        v
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        self.graph.add_edge(u, v)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Panics if `v` is not a vertex.
    pub fn list(&self, v: VertexId) -> ColorList {
        self.lists[&v]
    }

    pub fn set_list(&mut self, v: VertexId, list: ColorList) {
        assert!(self.lists.contains_key(&v), "unknown vertex {v}");
        self.lists.insert(v, list);
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, String> {
        &self.labels
    }

    /// Whether `coloring` is proper and respects every list.
    pub fn is_proper(&self, coloring: &BTreeMap<VertexId, u8>) -> bool {
        self.graph.vertices().all(|v| {
            coloring
                .get(&v)
                .is_some_and(|&c| self.lists[&v].contains(c))
        }) && self.graph.edges().all(|(u, v)| coloring[&u] != coloring[&v])
    }
}

/// A 2-3-coloring instance: an independent set `u_0 … u_{m−1}`, triangles
/// `{v_{3k}, v_{3k+1}, v_{3k+2}}` for `k < n`, and cross edges `(ℓ, k)`
/// joining `u_ℓ` to `v_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleSplitInstance {
    m: usize,
    n: usize,
    cross_edges: Vec<(usize, usize)>,
}

impl TriangleSplitInstance {
    pub fn new(m: usize, n: usize, mut cross_edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = cross_edges.iter().find(|&&(u, v)| u >= m || v >= 3 * n) {
            return Err(Error::InvalidInput(format!(
                "cross edge ({u}, {v}) is outside {m} independent and {} triangle vertices",
                3 * n
            )));
        }
        cross_edges.sort_unstable();
        cross_edges.dedup();
        Ok(TriangleSplitInstance { m, n, cross_edges })
    }

    /// Size of the independent set.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of triangles.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cross_edges(&self) -> &[(usize, usize)] {
        &self.cross_edges
    }

    pub fn has_cross_edge(&self, u: usize, v: usize) -> bool {
        self.cross_edges.binary_search(&(u, v)).is_ok()
    }

    /// The graph with `u_ℓ = ℓ` and `v_k = m + k`.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.m + 3 * self.n);
        for k in 0..self.n {
            let base = self.m + 3 * k;
            for (a, b) in [(0, 1), (1, 2), (0, 2)] {
                g.add_edge(base + a, base + b).unwrap();
            }
        }
        for &(u, v) in &self.cross_edges {
            g.add_edge(u, self.m + v).unwrap();
        }
        g
    }

    /// Lists `{1, 2}` on `U` and `{1, 2, 3}` on the triangles.
    pub fn to_list_instance(&self) -> ListColoringInstance {
        let g = self.to_graph();
        let lists = g
            .vertices()
            .map(|v| {
                let list = if v < self.m {
                    ColorList::new(&[1, 2])
                } else {
                    ColorList::ALL
                };
                (v, list)
            })
            .collect();
        ListColoringInstance::from_parts(g, lists).expect("lists cover the graph")
    }
}

/// Random cross edges, each present with probability `density` (clamped to
/// `[0, 1]`). Deterministic in `seed`.
pub fn generate_tsd_instance(m: usize, n: usize, density: f64, seed: u64) -> TriangleSplitInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = density.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..3 * n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    TriangleSplitInstance::new(m, n, edges).expect("generated edges are in range")
}

/// A list instance with ports `π_1 … π_m` such that a coloring of the ports
/// extends to the whole instance exactly when some `π_i` gets `target[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingGadget {
    pub instance: ListColoringInstance,
    pub ports: Vec<VertexId>,
    pub target: Vec<u8>,
}

/// Vertices of a gadget for `target`, ports included.
pub fn gadget_size(target: &[u8]) -> usize {
    let sigma = canonical_order(target);
    let port_cost: usize = target
        .iter()
        .map(|&c| match sigma_inverse(&sigma, c) {
            1 => 4,
            2 => 5,
            _ => 6,
        })
        .sum();
    port_cost + target.len() + 1
}

pub fn build_blocking_gadget(target: &[u8]) -> Result<BlockingGadget> {
    validate_target(target)?;
    let mut instance = ListColoringInstance::new();
    let ports = attach_gadget(&mut instance, target, "gadget");
    Ok(BlockingGadget {
        instance,
        ports,
        target: target.to_vec(),
    })
}

fn validate_target(target: &[u8]) -> Result<()> {
    if target.is_empty() {
        return Err(Error::InvalidInput("a blocking gadget needs at least one port".into()));
    }
    if let Some(c) = target.iter().find(|c| !(1..=3).contains(*c)) {
        return Err(Error::InvalidInput(format!("target color {c} is outside 1..=3")));
    }
    Ok(())
}

/// `sigma[k]` is the real color playing canonical color `k`: the most
/// frequent target color becomes 1, ties broken by color.
fn canonical_order(target: &[u8]) -> [u8; 4] {
    let mut colors = [1u8, 2, 3];
    colors.sort_by_key(|&c| (std::cmp::Reverse(target.iter().filter(|&&t| t == c).count()), c));
    [0, colors[0], colors[1], colors[2]]
}

fn sigma_inverse(sigma: &[u8; 4], real: u8) -> u8 {
    (1..=3).find(|&k| sigma[k as usize] == real).unwrap()
}

/// Adds a blocking gadget for `target` to `inst` and returns its ports, which
/// carry the full palette.
fn attach_gadget(inst: &mut ListColoringInstance, target: &[u8], name: &str) -> Vec<VertexId> {
    let sigma = canonical_order(target);
    let add = |inst: &mut ListColoringInstance, colors: &[u8], label: String| {
        inst.add_labeled_vertex(ColorList::new(colors).map(&sigma), format!("{name}.{label}"))
    };

    // Detector per port: flag y_i can be 2 exactly when π_i has the target
    // color (in canonical colors).
    let mut ports = Vec::with_capacity(target.len());
    let mut flags = Vec::with_capacity(target.len());
    for (i, &c) in target.iter().enumerate() {
        let pi = add(inst, &[1, 2, 3], format!("pi{}", i + 1));
        let y = add(inst, &[1, 2], format!("y{}", i + 1));
        let edge = |inst: &mut ListColoringInstance, a, b| {
            inst.add_edge(a, b).unwrap();
        };
        match sigma_inverse(&sigma, c) {
            1 => {
                let f = add(inst, &[2, 3], format!("d{}a", i + 1));
                edge(inst, pi, y);
                edge(inst, pi, f);
                edge(inst, y, f);
            }
            2 => {
                let x = add(inst, &[1, 2], format!("d{}a", i + 1));
                let z = add(inst, &[1, 3], format!("d{}b", i + 1));
                edge(inst, pi, x);
                edge(inst, pi, z);
                edge(inst, y, x);
                edge(inst, x, z);
            }
            _ => {
                let e1 = add(inst, &[1, 2], format!("d{}a", i + 1));
                let e2 = add(inst, &[1, 3], format!("d{}b", i + 1));
                let e3 = add(inst, &[2, 3], format!("d{}c", i + 1));
                edge(inst, pi, e1);
                edge(inst, pi, e2);
                edge(inst, y, e3);
                edge(inst, e1, e2);
                edge(inst, e2, e3);
            }
        }
        ports.push(pi);
        flags.push(y);
    }

    // Chain r_0 = 3, …, r_m = 2; a guard that sees r_{i−1}, y_i, r_i lets the
    // chain switch from 3 to 2 only where y_i = 2.
    let m = target.len();
    let chain: Vec<VertexId> = (0..=m)
        .map(|i| {
            let list: &[u8] = match i {
                0 => &[3],
                _ if i == m => &[2],
                _ => &[2, 3],
            };
            add(inst, list, format!("r{i}"))
        })
        .collect();
    for (i, &y) in flags.iter().enumerate() {
        let g = add(inst, &[1, 2, 3], format!("g{}", i + 1));
        for w in [chain[i], y, chain[i + 1]] {
            inst.add_edge(g, w).unwrap();
        }
    }
    ports
}

/// Adds a gadget for `target` and joins port `i` to `hosts[i]`, which forbids
/// the hosts from taking exactly the colors `target`.
fn forbid(
    inst: &mut ListColoringInstance,
    hosts: &[VertexId],
    target: &[u8],
    name: String,
) -> Vec<VertexId> {
    let ports = attach_gadget(inst, target, &name);
    for (&h, &p) in hosts.iter().zip(&ports) {
        inst.add_edge(h, p).unwrap();
    }
    ports
}

/// Exhaustively checks the gadget contract for `target`; returns how many of
/// the `3^m` port colorings behaved as required.
pub fn check_blocking_gadget(target: &[u8], guards: &Guards) -> Result<(usize, usize)> {
    let gadget = build_blocking_gadget(target)?;
    let m = target.len();
    let total = 3usize.pow(m as u32);
    let mut passed = 0;
    for code in 0..total {
        let f: Vec<u8> = (0..m).map(|i| (code / 3usize.pow(i as u32) % 3) as u8 + 1).collect();
        let mut inst = gadget.instance.clone();
        for (&p, &c) in gadget.ports.iter().zip(&f) {
            inst.set_list(p, ColorList::single(c));
        }
        let extends = find_list_3_coloring(&inst, guards)?.is_some();
        let expected = f.iter().zip(target).any(|(a, b)| a == b);
        passed += usize::from(extends == expected);
    }
    Ok((passed, total))
}

/// One gadget of a composed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetRecord {
    /// Construction step (5 to 8) that added it.
    pub step: u8,
    pub target: Vec<u8>,
    pub hosts: Vec<VertexId>,
    pub ports: Vec<VertexId>,
    pub vertices: usize,
}

/// Closed-form vertex counts of the composed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeTerms {
    pub s_vertices: usize,
    pub t_vertices: usize,
    pub selector_vertices: usize,
    pub step5_vertices: usize,
    pub step6_vertices: usize,
    pub step7_gadgets: usize,
    pub step7_vertices: usize,
    pub step8_gadgets: usize,
    pub step8_vertices: usize,
    /// Part of the total that does not grow with `√t` (one chain end per
    /// selector gadget).
    pub constant_vertices: usize,
    pub total: usize,
}

impl SizeTerms {
    pub fn new(q: usize, m: usize, n: usize) -> Self {
        let step5 = gadget_size(&vec![2; q]);
        let step7_targets = step7_targets();
        let step8_targets = step8_targets();
        let per7: usize = step7_targets.iter().map(|t| gadget_size(t)).sum();
        let per8: usize = step8_targets.iter().map(|t| gadget_size(t)).sum();
        let cells7 = q * m * (3 * n).saturating_sub(1);
        let mut terms = SizeTerms {
            s_vertices: q * m * 3 * n,
            t_vertices: q * 3 * n,
            selector_vertices: 2 * q,
            step5_vertices: step5,
            step6_vertices: step5,
            step7_gadgets: cells7 * step7_targets.len(),
            step7_vertices: cells7 * per7,
            step8_gadgets: q * n * step8_targets.len(),
            step8_vertices: q * n * per8,
            constant_vertices: 2,
            total: 0,
        };
        terms.total = terms.s_vertices
            + terms.t_vertices
            + terms.selector_vertices
            + terms.step5_vertices
            + terms.step6_vertices
            + terms.step7_vertices
            + terms.step8_vertices;
        terms
    }

    /// Vertices whose number is proportional to `√t`.
    pub fn proportional(&self) -> usize {
        self.total - self.constant_vertices
    }
}

fn step7_targets() -> Vec<Vec<u8>> {
    vec![vec![1, 2, 1], vec![2, 1, 1]]
}

fn step8_targets() -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for c1 in 1..=3 {
        for c2 in 1..=3 {
            for c3 in 1..=3 {
                if c1 == c2 || c2 == c3 || c1 == c3 {
                    out.push(vec![c1, c2, c3, 1]);
                }
            }
        }
    }
    out
}

/// Where every part of a composed instance lives. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionLayout {
    pub version: u32,
    /// Number of inputs before padding.
    pub inputs: usize,
    pub sqrt_t: usize,
    pub m: usize,
    pub n: usize,
    /// `s[i][k][ℓ]`.
    pub s_vertices: Vec<Vec<Vec<VertexId>>>,
    /// `t[j][k]`.
    pub t_vertices: Vec<Vec<VertexId>>,
    pub a_vertices: Vec<VertexId>,
    pub b_vertices: Vec<VertexId>,
    pub gadgets: Vec<GadgetRecord>,
    pub terms: SizeTerms,
    /// Palette triangle `C1, C2, C3`, once converted to a plain graph.
    pub palette: Option<[VertexId; 3]>,
}

/// Builds the list instance whose answer is the OR of the inputs. Inputs are
/// padded to a square count with copies of the first one and arranged as
/// `X[i][j] = inputs[i·√t + j]`.
pub fn compose(
    inputs: &[TriangleSplitInstance],
) -> Result<(ListColoringInstance, CompositionLayout)> {
    let first = inputs
        .first()
        .ok_or_else(|| Error::InvalidInput("composition needs at least one input".into()))?;
    let (m, n) = (first.m, first.n);
    if let Some(pos) = inputs.iter().position(|x| (x.m, x.n) != (m, n)) {
        return Err(Error::InvalidInput(format!(
            "input {pos} has m={}, n={}, but input 0 has m={m}, n={n}",
            inputs[pos].m, inputs[pos].n
        )));
    }
    let q = (1..).find(|q| q * q >= inputs.len()).unwrap();
    let x = |i: usize, j: usize| inputs.get(i * q + j).unwrap_or(first);

    let mut inst = ListColoringInstance::new();
    let mut gadgets = Vec::new();
    let both = ColorList::new(&[1, 2]);

    let s: Vec<Vec<Vec<VertexId>>> = (0..q)
        .map(|i| {
            (0..3 * n)
                .map(|k| {
                    (0..m)
                        .map(|l| inst.add_labeled_vertex(both, format!("s[{i},{k},{l}]")))
                        .collect()
                })
                .collect()
        })
        .collect();
    let t: Vec<Vec<VertexId>> = (0..q)
        .map(|j| {
            (0..3 * n)
                .map(|k| inst.add_labeled_vertex(ColorList::ALL, format!("t[{j},{k}]")))
                .collect()
        })
        .collect();
    for i in 0..q {
        for j in 0..q {
            for &(l, k) in x(i, j).cross_edges() {
                inst.add_edge(s[i][k][l], t[j][k])?;
            }
        }
    }
    let a: Vec<VertexId> = (0..q)
        .map(|i| inst.add_labeled_vertex(both, format!("a[{i}]")))
        .collect();
    let b: Vec<VertexId> = (0..q)
        .map(|j| inst.add_labeled_vertex(both, format!("b[{j}]")))
        .collect();

    let mut add_gadget = |inst: &mut ListColoringInstance, step: u8, hosts: Vec<VertexId>, target: Vec<u8>| {
        let before = inst.vertex_count();
        let name = format!("G{}", gadgets.len());
        let ports = forbid(inst, &hosts, &target, name);
        gadgets.push(GadgetRecord {
            step,
            target,
            hosts,
            ports,
            vertices: inst.vertex_count() - before,
        });
    };

    add_gadget(&mut inst, 5, a.clone(), vec![2; q]);
    add_gadget(&mut inst, 6, b.clone(), vec![2; q]);
    for i in 0..q {
        for l in 0..m {
            for k in 0..(3 * n).saturating_sub(1) {
                for target in step7_targets() {
                    add_gadget(&mut inst, 7, vec![s[i][k][l], s[i][k + 1][l], a[i]], target);
                }
            }
        }
    }
    for j in 0..q {
        for k in 0..n {
            for target in step8_targets() {
                let hosts = vec![t[j][3 * k], t[j][3 * k + 1], t[j][3 * k + 2], b[j]];
                add_gadget(&mut inst, 8, hosts, target);
            }
        }
    }

    let terms = SizeTerms::new(q, m, n);
    debug_assert_eq!(terms.total, inst.vertex_count());
    let layout = CompositionLayout {
        version: LAYOUT_VERSION,
        inputs: inputs.len(),
        sqrt_t: q,
        m,
        n,
        s_vertices: s,
        t_vertices: t,
        a_vertices: a,
        b_vertices: b,
        gadgets,
        terms,
        palette: None,
    };
    Ok((inst, layout))
}

/// Plain graph that is 3-colorable exactly when `inst` is list 3-colorable:
/// a triangle `C1, C2, C3` is appended after the last vertex and `v` is
/// joined to `C_i` whenever `i ∉ L(v)`. Returns the graph and the palette.
pub fn list_to_plain(inst: &ListColoringInstance) -> (Graph, [VertexId; 3]) {
    let mut g = inst.graph().clone();
    let base = g.vertices().last().map_or(0, |v| v + 1);
    let palette = [base, base + 1, base + 2];
    for &c in &palette {
        g.add_vertex(c);
    }
    g.add_edge(palette[0], palette[1]).unwrap();
    g.add_edge(palette[1], palette[2]).unwrap();
    g.add_edge(palette[0], palette[2]).unwrap();
    for v in inst.graph().vertices() {
        let list = inst.list(v);
        for c in 1..=3u8 {
            if !list.contains(c) {
                g.add_edge(v, palette[c as usize - 1]).unwrap();
            }
        }
    }
    (g, palette)
}

/// Reads a 3-coloring of a [`list_to_plain`] graph back as list colors: the
/// color class of `C_i` becomes color `i`.
pub fn colors_from_plain(
    coloring: &BTreeMap<VertexId, usize>,
    palette: [VertexId; 3],
) -> BTreeMap<VertexId, u8> {
    let mut rename = BTreeMap::new();
    for (i, c) in palette.iter().enumerate() {
        rename.insert(coloring[c], i as u8 + 1);
    }
    coloring
        .iter()
        .filter(|(v, _)| !palette.contains(v))
        .map(|(&v, c)| (v, rename[c]))
        .collect()
}

/// Some `i` such that every copy column of `S_i` is constant under
/// `coloring`.
pub fn selector_a_witness(layout: &CompositionLayout, coloring: &BTreeMap<VertexId, u8>) -> Option<usize> {
    (0..layout.sqrt_t).find(|&i| {
        (0..layout.m).all(|l| {
            let col: Vec<u8> = layout.s_vertices[i].iter().map(|row| coloring[&row[l]]).collect();
            col.windows(2).all(|w| w[0] == w[1])
        })
    })
}

/// Some `j` such that every triple of `T_j` is colorful under `coloring`.
pub fn selector_b_witness(layout: &CompositionLayout, coloring: &BTreeMap<VertexId, u8>) -> Option<usize> {
    (0..layout.sqrt_t).find(|&j| {
        layout.t_vertices[j].chunks(3).all(|tri| {
            let (a, b, c) = (coloring[&tri[0]], coloring[&tri[1]], coloring[&tri[2]]);
            a != b && b != c && a != c
        })
    })
}
