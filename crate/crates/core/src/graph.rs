//! Simple undirected graphs, target (pattern) graphs, twin decompositions and
//! twin covers.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::guards::Guards;

pub type VertexId = usize;

/// Index of a vertex of the pattern graph H, i.e. a color.
pub type ColorId = usize;

/// A finite simple undirected graph with stable vertex identifiers.
///
/// Removing vertices never renames the remaining ones, so a kernel computed
/// from a graph is literally a subgraph of it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Self::empty(n);
        for u in 0..n {
            g.insert_edge_unchecked(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.insert_edge_unchecked(u - 1, u);
        }
        g
    }

    /// Star with center `0` and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.insert_edge_unchecked(0, v);
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.insert_edge_unchecked(i, (i + 1) % 5);
            g.insert_edge_unchecked(i, i + 5);
            g.insert_edge_unchecked(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted past the largest
    /// identifier of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.adj.keys().next_back().map_or(0, |&v| v + 1);
        let mut g = self.clone();
        for (&v, nbrs) in &other.adj {
            g.adj
                .insert(v + offset, nbrs.iter().map(|&w| w + offset).collect());
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeSet::new());
        true
    }

    /// Adds `{u, v}`; returns whether the edge is new.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop on vertex {u}")));
        }
        for w in [u, v] {
            if !self.adj.contains_key(&w) {
                return Err(Error::InvalidInput(format!("unknown vertex {w}")));
            }
        }
        Ok(self.insert_edge_unchecked(u, v))
    }

    fn insert_edge_unchecked(&mut self, u: VertexId, v: VertexId) -> bool {
        let new = self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
        new
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        let removed = self.adj.get_mut(&u).is_some_and(|n| n.remove(&v));
        if removed {
            self.adj.get_mut(&v).unwrap().remove(&u);
        }
        removed
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        match self.adj.remove(&v) {
            Some(nbrs) => {
                for w in nbrs {
                    self.adj.get_mut(&w).unwrap().remove(&v);
                }
                true
            }
            None => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Open neighborhood. Panics on an unknown vertex.
    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[&v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Sorted closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: VertexId) -> Vec<VertexId> {
        let nbrs = &self.adj[&v];
        let mut out = Vec::with_capacity(nbrs.len() + 1);
        let mut placed = false;
        for &w in nbrs {
            if !placed && v < w {
                out.push(v);
                placed = true;
            }
            out.push(w);
        }
        if !placed {
            out.push(v);
        }
        out
    }

    /// True twins: `N[u] = N[v]`. A vertex is its own twin.
    pub fn are_twins(&self, u: VertexId, v: VertexId) -> bool {
        if u == v {
            return true;
        }
        if !self.has_edge(u, v) {
            return false;
        }
        let nu = &self.adj[&u];
        let nv = &self.adj[&v];
        nu.len() == nv.len()
            && nu.iter().filter(|&&w| w != v).eq(nv.iter().filter(|&&w| w != u))
    }

    /// Open neighborhood of a vertex set: `N(S) = (∪ N(v)) \ S`.
    pub fn set_neighborhood<'a>(
        &self,
        set: impl IntoIterator<Item = &'a VertexId>,
    ) -> BTreeSet<VertexId> {
        let set: BTreeSet<VertexId> = set.into_iter().copied().collect();
        set.iter()
            .flat_map(|v| self.adj[v].iter().copied())
            .filter(|w| !set.contains(w))
            .collect()
    }

    /// Edges with one endpoint in `a` and the other in `b`.
    pub fn edges_between(&self, a: &[VertexId], b: &[VertexId]) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for &u in a {
            for &v in b {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Graph {
        Graph {
            adj: self
                .adj
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, nbrs)| (v, nbrs.intersection(keep).copied().collect()))
                .collect(),
        }
    }

    /// `V(self) ⊆ V(other)` and `E(self) ⊆ E(other)`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices().all(|v| other.contains_vertex(v))
            && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Renumbers the vertices to `0..n` in increasing order of their ids.
    pub fn relabeled_dense(&self) -> (Graph, Vec<VertexId>) {
        let order: Vec<VertexId> = self.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::empty(order.len());
        for (u, v) in self.edges() {
            g.insert_edge_unchecked(index[&u], index[&v]);
        }
        (g, order)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: BTreeMap<VertexId, bool> = BTreeMap::new();
        for start in self.vertices() {
            if side.contains_key(&start) {
                continue;
            }
            side.insert(start, false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let su = side[&u];
                for &w in &self.adj[&u] {
                    match side.get(&w) {
                        Some(&sw) if sw == su => return false,
                        Some(_) => {}
                        None => {
                            side.insert(w, !su);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        true
    }
}

/// Partition of `V(G)` into maximal classes of true twins.
///
/// Classes are sorted internally and ordered by their smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinDecomposition {
    classes: Vec<Vec<VertexId>>,
    class_of: BTreeMap<VertexId, usize>,
}

impl TwinDecomposition {
    fn from_classes(mut classes: Vec<Vec<VertexId>>) -> Self {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_unstable_by_key(|c| c[0]);
        let class_of = classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&v| (v, i)))
            .collect();
        TwinDecomposition { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: VertexId) -> Option<usize> {
        self.class_of.get(&v).copied()
    }

    pub fn largest_class(&self) -> usize {
        self.classes.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Groups vertices by their sorted closed neighborhoods.
pub fn twin_decomposition(g: &Graph) -> TwinDecomposition {
    let mut keyed: Vec<(Vec<VertexId>, VertexId)> = g
        .vertices()
        .map(|v| (g.closed_neighborhood(v), v))
        .collect();
    keyed.sort_unstable();
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for i in 0..keyed.len() {
        if i > 0 && keyed[i].0 == keyed[i - 1].0 {
            classes.last_mut().unwrap().push(keyed[i].1);
        } else {
            classes.push(vec![keyed[i].1]);
        }
    }
    TwinDecomposition::from_classes(classes)
}

/// A set `X` such that every edge has an endpoint in `X` or joins twins.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwinCover {
    pub vertices: BTreeSet<VertexId>,
}

impl TwinCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

pub fn is_twin_cover(g: &Graph, s: &BTreeSet<VertexId>) -> Result<bool> {
    if let Some(v) = s.iter().find(|&&v| !g.contains_vertex(v)) {
        return Err(Error::InvalidInput(format!("unknown vertex {v} in twin cover")));
    }
    Ok(g
        .edges()
        .all(|(u, v)| s.contains(&u) || s.contains(&v) || g.are_twins(u, v)))
}

/// Exact minimum twin cover by branching on uncovered non-twin edges.
///
/// Only meant for measuring the parameter on small instances; refuses graphs
/// above `guards.twin_cover` vertices.
pub fn min_twin_cover(g: &Graph, guards: &Guards) -> Result<TwinCover> {
    if g.vertex_count() > guards.twin_cover {
        return Err(Error::Capacity {
            what: "minimum twin cover",
            size: g.vertex_count(),
            limit: guards.twin_cover,
        });
    }
    // A twin cover is exactly a vertex cover of the non-twin edges.
    let (dense, order) = g.relabeled_dense();
    let hard_edges: Vec<(usize, usize)> = dense
        .edges()
        .filter(|&(u, v)| !dense.are_twins(u, v))
        .collect();

    // Start from the trivial cover: every endpoint of a non-twin edge.
    let mut best = vec![false; dense.vertex_count()];
    for &(u, v) in &hard_edges {
        best[u] = true;
        best[v] = true;
    }
    let mut best_size = best.iter().filter(|&&b| b).count();
    let mut chosen = vec![false; dense.vertex_count()];
    branch_cover(&hard_edges, &mut chosen, 0, &mut best, &mut best_size);

    Ok(TwinCover {
        vertices: best
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| order[i])
            .collect(),
    })
}

fn branch_cover(
    edges: &[(usize, usize)],
    chosen: &mut [bool],
    size: usize,
    best: &mut Vec<bool>,
    best_size: &mut usize,
) {
    // Greedy matching on the uncovered edges is a lower bound on what is
    // still needed.
    let mut matched = vec![false; chosen.len()];
    let mut lower = 0;
    let mut first_uncovered = None;
    for &(u, v) in edges {
        if chosen[u] || chosen[v] {
            continue;
        }
        first_uncovered.get_or_insert((u, v));
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            lower += 1;
        }
    }
    let Some((u, v)) = first_uncovered else {
        if size < *best_size {
            *best_size = size;
            best.copy_from_slice(chosen);
        }
        return;
    };
    if size + lower >= *best_size {
        return;
    }
    for w in [u, v] {
        chosen[w] = true;
        branch_cover(edges, chosen, size + 1, best, best_size);
        chosen[w] = false;
    }
}

/// The fixed target graph H together with the quantities the kernel needs.
///
/// Colors are the indices `0..|V(H)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternGraph {
    graph: Graph,
    adjacency: Vec<u64>,
    max_degree: usize,
    clique_number: usize,
    is_bipartite: bool,
}

/// Largest pattern graph supported; colors are packed into `u64` masks.
pub const MAX_PATTERN_VERTICES: usize = 64;

/// Validates and analyzes a pattern graph.
///
/// Bipartite patterns are rejected: H-Coloring is polynomial-time solvable
/// for them. Vertex ids are renumbered densely, so colors are positions.
pub fn pattern_analyze(h: &Graph) -> Result<PatternGraph> {
    if h.vertex_count() > MAX_PATTERN_VERTICES {
        return Err(Error::InvalidPattern(format!(
            "pattern has {} vertices, at most {MAX_PATTERN_VERTICES} are supported",
            h.vertex_count()
        )));
    }
    // `Graph` cannot hold self-loops, so a looped pattern never gets here.
    let (graph, _) = h.relabeled_dense();
    let is_bipartite = graph.is_bipartite();
    if is_bipartite {
        return Err(Error::InvalidPattern(
            "pattern is bipartite; H-Coloring is polynomial-time solvable for bipartite H"
                .to_string(),
        ));
    }
    let adjacency: Vec<u64> = graph
        .vertices()
        .map(|c| graph.neighbors(c).iter().fold(0u64, |m, &d| m | 1 << d))
        .collect();
    let all = mask_of_first(graph.vertex_count());
    let clique_number = max_clique_in(&adjacency, all);
    Ok(PatternGraph {
        max_degree: graph.max_degree(),
        graph,
        adjacency,
        clique_number,
        is_bipartite,
    })
}

fn mask_of_first(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn max_clique_in(adjacency: &[u64], candidates: u64) -> usize {
    fn go(adjacency: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        go(adjacency, cand & adjacency[v], size + 1, best);
        go(adjacency, cand & !(1u64 << v), size, best);
    }
    let mut best = 0;
    go(adjacency, candidates, 0, &mut best);
    best
}

impl PatternGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `|V(H)|`.
    pub fn color_count(&self) -> usize {
        self.adjacency.len()
    }

    /// `Δ(H)`.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `ω(H)`.
    pub fn clique_number(&self) -> usize {
        self.clique_number
    }

    pub fn is_bipartite(&self) -> bool {
        self.is_bipartite
    }

    pub fn all_colors(&self) -> u64 {
        mask_of_first(self.color_count())
    }

    /// Neighbors of color `c` in H as a bit mask.
    pub fn neighbor_mask(&self, c: ColorId) -> u64 {
        self.adjacency[c]
    }

    pub fn adjacent(&self, a: ColorId, b: ColorId) -> bool {
        self.adjacency[a] >> b & 1 == 1
    }

    /// `ω(H[Y])` for the vertex subset encoded by `mask`.
    pub fn clique_number_of(&self, mask: u64) -> usize {
        max_clique_in(&self.adjacency, mask & self.all_colors())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[VertexId]) -> BTreeSet<VertexId> {
        vs.iter().copied().collect()
    }

    #[test]
    fn triangle_is_one_class() {
        let d = twin_decomposition(&Graph::complete(3));
        assert_eq!(d.classes(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn path_endpoints_are_false_twins_only() {
        let d = twin_decomposition(&Graph::path(3));
        assert_eq!(d.classes(), &[vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn k4_minus_edge() {
        // u = 0, v = 1 lose their edge; x = 2, y = 3 keep degree 3.
        let mut g = Graph::complete(4);
        g.remove_edge(0, 1);
        let d = twin_decomposition(&g);
        assert_eq!(d.classes(), &[vec![0], vec![1], vec![2, 3]]);
    }

    #[test]
    fn empty_graph_has_no_classes() {
        assert!(twin_decomposition(&Graph::new()).is_empty());
    }

    #[test]
    fn twin_cover_examples() {
        assert!(is_twin_cover(&Graph::complete(3), &set(&[])).unwrap());
        assert!(is_twin_cover(&Graph::path(3), &set(&[1])).unwrap());
        assert!(!is_twin_cover(&Graph::path(3), &set(&[])).unwrap());
        assert!(matches!(
            is_twin_cover(&Graph::path(3), &set(&[7])),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn min_twin_cover_examples() {
        let g = Guards::default();
        assert_eq!(min_twin_cover(&Graph::complete(5), &g).unwrap().len(), 0);
        assert_eq!(
            min_twin_cover(&Graph::star(3), &g).unwrap().vertices,
            set(&[0])
        );
        assert_eq!(min_twin_cover(&Graph::cycle(5), &g).unwrap().len(), 3);
    }

    #[test]
    fn min_twin_cover_respects_guard() {
        let err = min_twin_cover(&Graph::empty(40), &Guards::default()).unwrap_err();
        assert!(matches!(err, Error::Capacity { size: 40, limit: 30, .. }));
    }

    #[test]
    fn pattern_examples() {
        let k3 = pattern_analyze(&Graph::complete(3)).unwrap();
        assert_eq!((k3.max_degree(), k3.clique_number()), (2, 3));
        let c5 = pattern_analyze(&Graph::cycle(5)).unwrap();
        assert_eq!((c5.max_degree(), c5.clique_number()), (2, 2));
        let p = pattern_analyze(&Graph::petersen()).unwrap();
        assert_eq!((p.max_degree(), p.clique_number()), (3, 2));
        assert!(!p.is_bipartite());
    }

    #[test]
    fn bipartite_pattern_rejected() {
        let err = pattern_analyze(&Graph::cycle(4)).unwrap_err();
        assert!(err.to_string().contains("polynomial-time"));
    }

    #[test]
    fn self_loops_rejected_at_construction() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn clique_number_of_subsets() {
        let k3 = pattern_analyze(&Graph::complete(3)).unwrap();
        assert_eq!(k3.clique_number_of(k3.neighbor_mask(0)), 2);
        assert_eq!(k3.clique_number_of(0), 0);
    }

    #[test]
    fn removal_keeps_ids() {
        let mut g = Graph::path(4);
        g.remove_vertex(1);
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(2, 3)]);
        assert!(g.is_subgraph_of(&Graph::path(4)));
    }
}
