//! Exhaustive application of the three reduction rules.

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use serde::Serialize;

use crate::constraints::{ConstraintBuilder, ConstraintKind, TaggedConstraint};
use crate::gf2::{CountBound, GF2Basis, GF2Constraint};
use crate::graph::{twin_decomposition, Graph, PatternGraph, TwinDecomposition, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    Kernel(Graph),
    /// Some twin class is larger than `ω(H)`, so no H-coloring exists.
    TrivialNo,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct KernelStats {
    pub input_vertices: usize,
    pub input_edges: usize,
    /// Vertices of the output; `ω(H)+1` for a trivial no-instance, the size
    /// of the canonical clique that witnesses it.
    pub kernel_vertices: usize,
    pub kernel_edges: usize,
    pub rule1_fired: bool,
    pub rule2_applications: usize,
    pub rule3_applications: usize,
    pub removed_edges: usize,
    pub removed_vertices: usize,
    pub span_tests: usize,
    /// Span tests settled without building a basis.
    pub span_tests_without_basis: usize,
    pub max_basis_rank: usize,
    pub max_basis_monomials: usize,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelResult {
    pub outcome: KernelOutcome,
    pub stats: KernelStats,
}

impl KernelResult {
    pub fn graph(&self) -> Option<&Graph> {
        match &self.outcome {
            KernelOutcome::Kernel(g) => Some(g),
            KernelOutcome::TrivialNo => None,
        }
    }

    pub fn is_trivial_no(&self) -> bool {
        self.outcome == KernelOutcome::TrivialNo
    }
}

/// One successful rule application, reported to kernelization observers
/// together with the graph it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleApplication {
    /// Edges between classes `from` and `to` were removed.
    Rule2 {
        from: Vec<VertexId>,
        to: Vec<VertexId>,
        removed: Vec<(VertexId, VertexId)>,
    },
    /// An isolated class was deleted.
    Rule3 { removed: Vec<VertexId> },
}

/// Whether some class is larger than `ω(H)`.
pub fn rule1_trivial_no(_g: &Graph, h: &PatternGraph, pi: &TwinDecomposition) -> bool {
    pi.largest_class() > h.clique_number()
}

/// Removes `E(p1, p2)` when every constraint of `L(p1, g)` lies in the span
/// of `L_Π(g ∖ F)`.
pub fn rule2_try_remove_edges(
    g: &Graph,
    h: &PatternGraph,
    pi: &TwinDecomposition,
    p1: &[VertexId],
    p2: &[VertexId],
) -> Option<Graph> {
    let builder = ConstraintBuilder::new(h);
    let snapshot = Snapshot::new(g, pi);
    let i = pi.class_of(p1[0])?;
    let j = pi.class_of(p2[0])?;
    let mut stats = KernelStats::default();
    if i == j || snapshot.nbhds[i].binary_search(&p2[0]).is_err() {
        return None;
    }
    snapshot
        .rule2_applies(&builder, i, j, &mut stats)
        .then(|| remove_between(g, p1, p2).0)
}

/// Deletes the first isolated class of size at most `ω(H)`.
pub fn rule3_remove_isolated_clique(
    g: &Graph,
    h: &PatternGraph,
    pi: &TwinDecomposition,
) -> Option<Graph> {
    isolated_class(g, h, pi).map(|p| {
        let mut out = g.clone();
        for &v in p {
            out.remove_vertex(v);
        }
        out
    })
}

fn isolated_class<'a>(
    g: &Graph,
    h: &PatternGraph,
    pi: &'a TwinDecomposition,
) -> Option<&'a Vec<VertexId>> {
    pi.classes().iter().find(|p| {
        p.len() <= h.clique_number() && g.degree(p[0]) + 1 == p.len()
    })
}

fn remove_between(g: &Graph, p1: &[VertexId], p2: &[VertexId]) -> (Graph, Vec<(VertexId, VertexId)>) {
    let mut out = g.clone();
    let removed = g.edges_between(p1, p2);
    for &(u, v) in &removed {
        out.remove_edge(u, v);
    }
    (out, removed)
}

/// Runs the rules to a fixpoint.
pub fn kernelize(g: &Graph, h: &PatternGraph) -> KernelResult {
    kernelize_with(g, h, |_, _| {})
}

/// [`kernelize`], calling `observer` after every successful rule application.
pub fn kernelize_with(
    g: &Graph,
    h: &PatternGraph,
    mut observer: impl FnMut(&RuleApplication, &Graph),
) -> KernelResult {
    let start = Instant::now();
    let builder = ConstraintBuilder::new(h);
    let mut stats = KernelStats {
        input_vertices: g.vertex_count(),
        input_edges: g.edge_count(),
        ..KernelStats::default()
    };
    let mut g = g.clone();

    let outcome = 'pass: loop {
        let pi = twin_decomposition(&g);
        if rule1_trivial_no(&g, h, &pi) {
            stats.rule1_fired = true;
            break KernelOutcome::TrivialNo;
        }

        if let Some(p) = isolated_class(&g, h, &pi) {
            let p = p.clone();
            for &v in &p {
                g.remove_vertex(v);
            }
            stats.rule3_applications += 1;
            stats.removed_vertices += p.len();
            observer(&RuleApplication::Rule3 { removed: p }, &g);
            continue;
        }

        let snapshot = Snapshot::new(&g, &pi);
        for (i, j) in snapshot.candidates(&builder) {
            if snapshot.rule2_applies(&builder, i, j, &mut stats) {
                let (from, to) = (&pi.classes()[i], &pi.classes()[j]);
                let (next, removed) = remove_between(&g, from, to);
                g = next;
                stats.rule2_applications += 1;
                stats.removed_edges += removed.len();
                observer(
                    &RuleApplication::Rule2 {
                        from: from.clone(),
                        to: to.clone(),
                        removed,
                    },
                    &g,
                );
                continue 'pass;
            }
        }
        break KernelOutcome::Kernel(g);
    };

    match &outcome {
        KernelOutcome::Kernel(k) => {
            stats.kernel_vertices = k.vertex_count();
            stats.kernel_edges = k.edge_count();
        }
        KernelOutcome::TrivialNo => {
            stats.kernel_vertices = h.clique_number() + 1;
            stats.kernel_edges = stats.kernel_vertices * (stats.kernel_vertices - 1) / 2;
        }
    }
    stats.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    KernelResult { outcome, stats }
}

/// `((k·|V(H)|)^Δ(H) + 1)·(Δ(H)+1)² + k`, the vertex bound on the kernel of a
/// graph with a twin cover of size `k`.
pub fn kernel_size_bound(k: usize, h: &PatternGraph) -> CountBound {
    let delta = h.max_degree() as u128;
    let value = (k as u128)
        .checked_mul(h.color_count() as u128)
        .and_then(|b| b.checked_pow(delta as u32))
        .and_then(|a| a.checked_add(1))
        .and_then(|a| a.checked_mul((delta + 1) * (delta + 1)))
        .and_then(|a| a.checked_add(k as u128));
    CountBound::checked(value)
}

/// Twin classes of one graph together with their open neighborhoods.
struct Snapshot<'a> {
    pi: &'a TwinDecomposition,
    nbhds: Vec<Vec<VertexId>>,
}

impl<'a> Snapshot<'a> {
    fn new(g: &Graph, pi: &'a TwinDecomposition) -> Self {
        let nbhds = pi
            .classes()
            .iter()
            .map(|p| g.set_neighborhood(p).into_iter().collect())
            .collect();
        Snapshot { pi, nbhds }
    }

    fn class(&self, i: usize) -> &[VertexId] {
        &self.pi.classes()[i]
    }

    /// Ordered pairs of adjacent classes, cheapest span test first.
    fn candidates(&self, builder: &ConstraintBuilder) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (i, nbhd) in self.nbhds.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &w in nbhd {
                let j = self.pi.class_of(w).expect("neighbor belongs to a class");
                if seen.insert(j) {
                    let cost = builder.count_touching(
                        self.class(i).len(),
                        nbhd.len(),
                        self.class(j).len(),
                    );
                    pairs.push((cost, self.class(i)[0], self.class(j)[0], i, j));
                }
            }
        }
        pairs.sort_unstable();
        pairs.into_iter().map(|(_, _, _, i, j)| (i, j)).collect()
    }

    /// `N(Q)` after removing all edges between classes `i` and `j`.
    fn nbhd_without(&self, q: usize, i: usize, j: usize) -> Vec<VertexId> {
        let other = if q == i {
            j
        } else if q == j {
            i
        } else {
            return self.nbhds[q].clone();
        };
        let drop = self.class(other);
        self.nbhds[q]
            .iter()
            .copied()
            .filter(|v| drop.binary_search(v).is_err())
            .collect()
    }

    fn rule2_applies(
        &self,
        builder: &ConstraintBuilder,
        i: usize,
        j: usize,
        stats: &mut KernelStats,
    ) -> bool {
        stats.span_tests += 1;
        let touched = self.class(j);
        // Constraints of L(P′) avoiding P″ survive the removal unchanged.
        let targets = builder.constraints_for(self.class(i), &self.nbhds[i], |s| {
            s.iter().any(|v| touched.binary_search(v).is_ok())
        });
        let after: Vec<Vec<VertexId>> = (0..self.nbhds.len())
            .map(|q| self.nbhd_without(q, i, j))
            .collect();

        let remaining: Vec<&TaggedConstraint> = targets
            .constraints
            .iter()
            .filter(|t| !self.literally_present(builder, &after, t))
            .collect();
        if remaining.is_empty() {
            stats.span_tests_without_basis += 1;
            return true;
        }

        let mut basis = GF2Basis::with_degree_bound(builder.pattern().max_degree());
        let mut seen: HashSet<GF2Constraint> = HashSet::new();
        for (q, nbhd) in after.iter().enumerate() {
            for t in builder.constraints_for(self.class(q), nbhd, |_| true).constraints {
                if seen.insert(t.constraint.clone()) {
                    basis.insert(&t.constraint);
                }
            }
        }
        stats.max_basis_rank = stats.max_basis_rank.max(basis.rank());
        stats.max_basis_monomials = stats.max_basis_monomials.max(basis.monomial_count());
        remaining.iter().all(|t| basis.contains(&t.constraint))
    }

    /// Whether `t` itself is generated by some class after the removal.
    fn literally_present(
        &self,
        builder: &ConstraintBuilder,
        after: &[Vec<VertexId>],
        t: &TaggedConstraint,
    ) -> bool {
        let s = t.kind.support();
        after.iter().enumerate().any(|(q, nbhd)| {
            s.iter().all(|v| nbhd.binary_search(v).is_ok())
                && match &t.kind {
                    ConstraintKind::TypeP { .. } => true,
                    ConstraintKind::TypeQ { x, .. } => {
                        builder.sequence_blocks(x, self.class(q).len())
                    }
                }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pattern_analyze;

    fn k3() -> PatternGraph {
        pattern_analyze(&Graph::complete(3)).unwrap()
    }

    #[test]
    fn rule1_examples() {
        let h = k3();
        let g = Graph::complete(4);
        assert!(rule1_trivial_no(&g, &h, &twin_decomposition(&g)));
        let g = Graph::complete(3);
        assert!(!rule1_trivial_no(&g, &h, &twin_decomposition(&g)));
        let c5 = pattern_analyze(&Graph::cycle(5)).unwrap();
        let g = Graph::cycle(5);
        assert!(!rule1_trivial_no(&g, &c5, &twin_decomposition(&g)));
    }

    #[test]
    fn rule3_examples() {
        let h = k3();
        let g = Graph::complete(3);
        let out = rule3_remove_isolated_clique(&g, &h, &twin_decomposition(&g)).unwrap();
        assert!(out.is_empty());

        let g = Graph::complete(4);
        assert!(rule3_remove_isolated_clique(&g, &h, &twin_decomposition(&g)).is_none());

        let g = Graph::cycle(5).disjoint_union(&Graph::empty(1));
        let out = rule3_remove_isolated_clique(&g, &h, &twin_decomposition(&g)).unwrap();
        assert_eq!(out.vertex_count(), 5);
        assert!(!out.contains_vertex(5));
    }

    #[test]
    fn rule2_on_single_class_never_applies() {
        let h = k3();
        let g = Graph::path(2);
        let pi = twin_decomposition(&g);
        assert_eq!(pi.len(), 1);
        assert!(rule2_try_remove_edges(&g, &h, &pi, &[0, 1], &[0, 1]).is_none());
    }

    #[test]
    fn rule2_removes_pendant_edge() {
        // A leaf has no constraints of its own, so its edge can go.
        let h = k3();
        let g = Graph::path(3);
        let pi = twin_decomposition(&g);
        let out = rule2_try_remove_edges(&g, &h, &pi, &[0], &[1]).unwrap();
        assert!(!out.has_edge(0, 1));
        assert!(out.has_edge(1, 2));
    }

    #[test]
    fn kernelize_examples() {
        let h = k3();
        let mut five = Graph::new();
        for _ in 0..5 {
            five = five.disjoint_union(&Graph::complete(3));
        }
        let r = kernelize(&five, &h);
        assert!(r.graph().unwrap().is_empty());
        assert_eq!(r.stats.rule3_applications, 5);

        let g = Graph::complete(4).disjoint_union(&Graph::cycle(5));
        let r = kernelize(&g, &h);
        assert!(r.is_trivial_no());
        assert_eq!(r.stats.kernel_vertices, 4);

        let r = kernelize(&Graph::new(), &h);
        assert_eq!(r.graph(), Some(&Graph::new()));
        assert_eq!(r.stats.rule2_applications + r.stats.rule3_applications, 0);
    }

    #[test]
    fn odd_wheel_keeps_a_nonempty_subgraph() {
        let h = k3();
        let mut g = Graph::cycle(5);
        g.add_vertex(5);
        for v in 0..5 {
            g.add_edge(5, v).unwrap();
        }
        let r = kernelize(&g, &h);
        let k = r.graph().unwrap();
        assert!(k.is_subgraph_of(&g));
        assert!(!k.is_empty());
    }

    #[test]
    fn size_bound_examples() {
        let h = k3();
        assert_eq!(kernel_size_bound(0, &h).value, 9);
        assert_eq!(kernel_size_bound(2, &h).value, 335);
        let k4 = pattern_analyze(&Graph::complete(4)).unwrap();
        assert_eq!(kernel_size_bound(1, &k4).value, 1041);
    }
}
