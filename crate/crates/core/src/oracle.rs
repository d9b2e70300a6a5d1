//! Exact exponential solvers used as ground truth.
//!
//! All of them run one list-homomorphism search: every vertex carries a
//! bitmask of admissible target vertices, fixing a vertex prunes its
//! neighbors' masks, forced vertices propagate, and independent parts of the
//! remaining graph are solved separately.

use std::collections::BTreeMap;

use crate::compose::{ListColoringInstance, TriangleSplitInstance};
use crate::error::{Error, Result};
use crate::graph::{ColorId, Graph, PatternGraph, VertexId};
use crate::guards::Guards;

/// A total map `V(G) → V(H)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: BTreeMap<VertexId, ColorId>,
}

impl Homomorphism {
    pub fn get(&self, v: VertexId) -> Option<ColorId> {
        self.map.get(&v).copied()
    }
}

/// Some homomorphism from `g` to the pattern, or `None`.
pub fn find_h_coloring(
    g: &Graph,
    h: &PatternGraph,
    guards: &Guards,
) -> Result<Option<Homomorphism>> {
    check_guard("H-coloring search", g.vertex_count(), guards.h_coloring)?;
    let (dense, order) = g.relabeled_dense();
    let targets = (0..h.color_count()).map(|c| h.neighbor_mask(c)).collect();
    let domains = vec![h.all_colors(); dense.vertex_count()];
    Ok(ListHomSearch::new(&dense, targets, domains)
        .solve()
        .map(|colors| Homomorphism {
            map: order.into_iter().zip(colors).collect(),
        }))
}

/// Edge-by-edge check of `f`.
pub fn verify_h_coloring(g: &Graph, h: &PatternGraph, f: &Homomorphism) -> Result<bool> {
    for v in g.vertices() {
        match f.get(v) {
            None => return Err(Error::InvalidInput(format!("vertex {v} is not mapped"))),
            Some(c) if c >= h.color_count() => {
                return Err(Error::InvalidInput(format!(
                    "vertex {v} maps to {c}, which is not a pattern vertex"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(g
        .edges()
        .all(|(u, v)| h.adjacent(f.map[&u], f.map[&v])))
}

/// A proper coloring with colors `1..=3` drawn from each vertex's list.
pub fn find_list_3_coloring(
    inst: &ListColoringInstance,
    guards: &Guards,
) -> Result<Option<BTreeMap<VertexId, u8>>> {
    let g = inst.graph();
    if g.vertices().any(|v| inst.list(v).is_empty()) {
        return Ok(None);
    }
    check_guard("list 3-coloring search", g.vertex_count(), guards.list_coloring)?;
    let (dense, order) = g.relabeled_dense();
    let domains = order.iter().map(|&v| u64::from(inst.list(v).mask())).collect();
    Ok(ListHomSearch::new(&dense, triangle_targets(), domains)
        .solve()
        .map(|colors| {
            order
                .into_iter()
                .zip(colors)
                .map(|(v, c)| (v, c as u8 + 1))
                .collect()
        }))
}

/// A proper 3-coloring with `U` restricted to colors `{1, 2}`. The returned
/// vector lists `u_0 … u_{m−1}` followed by `v_0 … v_{3n−1}`.
pub fn find_2_3_coloring(
    inst: &TriangleSplitInstance,
    guards: &Guards,
) -> Result<Option<Vec<u8>>> {
    let lists = inst.to_list_instance();
    Ok(find_list_3_coloring(&lists, guards)?.map(|c| c.into_values().collect()))
}

/// Whether `g` has a proper 3-coloring.
pub fn is_3_colorable(g: &Graph, guards: &Guards) -> Result<bool> {
    check_guard("3-coloring search", g.vertex_count(), guards.h_coloring)?;
    let (dense, _) = g.relabeled_dense();
    let domains = vec![0b111; dense.vertex_count()];
    Ok(ListHomSearch::new(&dense, triangle_targets(), domains)
        .solve()
        .is_some())
}

fn triangle_targets() -> Vec<u64> {
    vec![0b110, 0b101, 0b011]
}

fn check_guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::Capacity { what, size, limit })
    } else {
        Ok(())
    }
}

/// Backtracking search for a list homomorphism from a dense graph into a
/// target given by per-vertex neighbor masks.
struct ListHomSearch {
    adj: Vec<Vec<usize>>,
    targets: Vec<u64>,
    domains: Vec<u64>,
    trail: Vec<(usize, u64)>,
    queue: Vec<usize>,
}

impl ListHomSearch {
    fn new(g: &Graph, targets: Vec<u64>, domains: Vec<u64>) -> Self {
        let adj = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().copied().collect())
            .collect();
        ListHomSearch {
            adj,
            targets,
            domains,
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn solve(mut self) -> Option<Vec<ColorId>> {
        let n = self.adj.len();
        if self.domains.contains(&0) {
            return None;
        }
        self.queue = (0..n).filter(|&v| self.domains[v].count_ones() == 1).collect();
        if !self.propagate() {
            return None;
        }
        let all: Vec<usize> = (0..n).collect();
        if !self.solve_set(&all) {
            return None;
        }
        Some(
            self.domains
                .iter()
                .map(|d| d.trailing_zeros() as ColorId)
                .collect(),
        )
    }

    fn set_domain(&mut self, v: usize, d: u64) {
        self.trail.push((v, self.domains[v]));
        self.domains[v] = d;
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, d) = self.trail.pop().unwrap();
            self.domains[v] = d;
        }
    }

    /// Prunes neighbors of every queued fixed vertex until nothing changes.
    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop() {
            let allowed = self.targets[self.domains[v].trailing_zeros() as usize];
            for i in 0..self.adj[v].len() {
                let w = self.adj[v][i];
                let d = self.domains[w] & allowed;
                if d == self.domains[w] {
                    continue;
                }
                if d == 0 {
                    self.queue.clear();
                    return false;
                }
                self.set_domain(w, d);
                if d.count_ones() == 1 {
                    self.queue.push(w);
                }
            }
        }
        true
    }

    /// Decides every open vertex of `verts`, one connected part at a time.
    fn solve_set(&mut self, verts: &[usize]) -> bool {
        let mut parts = self.open_components(verts);
        parts.sort_by_key(Vec::len);
        parts.into_iter().all(|part| self.solve_component(&part))
    }

    fn solve_component(&mut self, part: &[usize]) -> bool {
        let v = *part
            .iter()
            .min_by_key(|&&v| {
                (
                    self.domains[v].count_ones(),
                    std::cmp::Reverse(self.adj[v].len()),
                    v,
                )
            })
            .unwrap();
        let mut choices = self.domains[v];
        while choices != 0 {
            let c = choices.trailing_zeros();
            choices &= choices - 1;
            let mark = self.trail.len();
            self.set_domain(v, 1 << c);
            self.queue.push(v);
            if self.propagate() && self.solve_set(part) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    /// Connected components of the vertices of `verts` that are not yet
    /// fixed.
    fn open_components(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let is_open = |v: usize| self.domains[v].count_ones() > 1;
        let mut member = vec![false; self.adj.len()];
        for &v in verts {
            member[v] = is_open(v);
        }
        let mut parts = Vec::new();
        for &start in verts {
            if !member[start] {
                continue;
            }
            member[start] = false;
            let mut part = vec![start];
            let mut i = 0;
            while i < part.len() {
                for &w in &self.adj[part[i]] {
                    if member[w] {
                        member[w] = false;
                        part.push(w);
                    }
                }
                i += 1;
            }
            parts.push(part);
        }
        parts
    }
}
