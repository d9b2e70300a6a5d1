//! The coloring polynomial and the per-class constraint families `L(P, G)`.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::gf2::{CountBound, GF2Constraint, Monomial, Var};
use crate::graph::{ColorId, Graph, PatternGraph, TwinDecomposition, VertexId};

/// 0/1 values for indicator variables `y[row, color]` with at most one color
/// chosen per row. Rows not mentioned have all variables 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialChoiceAssignment {
    chosen: BTreeMap<usize, ColorId>,
}

impl PartialChoiceAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, ColorId)>) -> Self {
        let mut a = Self::new();
        for (row, color) in pairs {
            a.choose(row, color);
        }
        a
    }

    /// Sets `y[row, color] = 1`, replacing any earlier choice for `row`.
    pub fn choose(&mut self, row: usize, color: ColorId) {
        self.chosen.insert(row, color);
    }

    pub fn get(&self, row: usize) -> Option<ColorId> {
        self.chosen.get(&row).copied()
    }

    pub fn value(&self, var: Var) -> bool {
        self.chosen.get(&var.vertex) == Some(&var.color)
    }
}

/// `p(y) mod 2` under a partial choice assignment.
pub fn evaluate(c: &GF2Constraint, a: &PartialChoiceAssignment) -> bool {
    c.evaluate(|v| a.value(v))
}

/// The degree-`q−1` polynomial over `y[i, k]`, `i, k ∈ 0..q`, that is odd
/// exactly when no color is chosen twice and every color `0..q−1` is chosen.
pub fn build_coloring_polynomial(q: usize) -> GF2Constraint {
    let rows: Vec<usize> = (0..q).collect();
    coloring_polynomial_on(&rows, &rows)
}

/// Coloring polynomial with rows renamed to `rows` and columns to `cols`:
/// the sum over injective choices `i₀ … i_{q−2}` of `Π_k y[rows[i_k], cols[k]]`.
pub fn coloring_polynomial_on(rows: &[VertexId], cols: &[ColorId]) -> GF2Constraint {
    assert_eq!(rows.len(), cols.len(), "coloring polynomial needs a square grid");
    let q = rows.len();
    let mut out = GF2Constraint::zero();
    if q == 0 {
        return out;
    }
    let mut used = vec![false; q];
    let mut picked = Vec::with_capacity(q - 1);
    fn go(
        rows: &[VertexId],
        cols: &[ColorId],
        used: &mut [bool],
        picked: &mut Vec<Var>,
        out: &mut GF2Constraint,
    ) {
        let k = picked.len();
        if k + 1 == rows.len() {
            out.toggle(Monomial::new(picked.iter().copied()));
            return;
        }
        for i in 0..rows.len() {
            if !used[i] {
                used[i] = true;
                picked.push(Var::new(rows[i], cols[k]));
                go(rows, cols, used, picked, out);
                picked.pop();
                used[i] = false;
            }
        }
    }
    go(rows, cols, &mut used, &mut picked, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    /// Coloring polynomial on `Δ(H)+1` neighbors `s` against colors `x`.
    TypeP { s: Vec<VertexId>, x: Vec<ColorId> },
    /// Product `Π c[s_i, x_i]` for a color sequence whose common neighborhood
    /// in H has no clique as large as the class.
    TypeQ { s: Vec<VertexId>, x: Vec<ColorId> },
}

impl ConstraintKind {
    pub fn support(&self) -> &[VertexId] {
        match self {
            ConstraintKind::TypeP { s, .. } | ConstraintKind::TypeQ { s, .. } => s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedConstraint {
    pub kind: ConstraintKind,
    pub constraint: GF2Constraint,
}

/// `L(P, G)` for one twin class `P`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    pub owner: Vec<VertexId>,
    pub constraints: Vec<TaggedConstraint>,
}

impl ConstraintSet {
    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &GF2Constraint> {
        self.constraints.iter().map(|t| &t.constraint)
    }
}

/// Builds constraint families for one fixed pattern graph, memoizing clique
/// numbers of common neighborhoods in H.
pub struct ConstraintBuilder<'h> {
    h: &'h PatternGraph,
    omega: RefCell<HashMap<u64, usize>>,
    q_sequences: RefCell<HashMap<(usize, usize), usize>>,
}

impl<'h> ConstraintBuilder<'h> {
    pub fn new(h: &'h PatternGraph) -> Self {
        ConstraintBuilder {
            h,
            omega: RefCell::new(HashMap::new()),
            q_sequences: RefCell::new(HashMap::new()),
        }
    }

    pub fn pattern(&self) -> &PatternGraph {
        self.h
    }

    fn omega_of(&self, mask: u64) -> usize {
        *self
            .omega
            .borrow_mut()
            .entry(mask)
            .or_insert_with(|| self.h.clique_number_of(mask))
    }

    /// Whether the product constraint for color sequence `x` is emitted for a
    /// class of `class_size` twins.
    pub(crate) fn sequence_blocks(&self, x: &[ColorId], class_size: usize) -> bool {
        let common = x
            .iter()
            .fold(self.h.all_colors(), |m, &c| m & self.h.neighbor_mask(c));
        self.omega_of(common) < class_size
    }

    /// `L(P, G)`.
    pub fn class_constraints(&self, g: &Graph, class: &[VertexId]) -> ConstraintSet {
        let nbhd: Vec<VertexId> = g.set_neighborhood(class).into_iter().collect();
        self.constraints_for(class, &nbhd, |_| true)
    }

    /// Members of `L(P, G)` generated from neighbor subsets accepted by
    /// `keep`. `nbhd` must be `N_G(P)`, sorted.
    pub fn constraints_for(
        &self,
        class: &[VertexId],
        nbhd: &[VertexId],
        keep: impl Fn(&[VertexId]) -> bool,
    ) -> ConstraintSet {
        let delta = self.h.max_degree();
        let colors: Vec<ColorId> = (0..self.h.color_count()).collect();
        let mut out = ConstraintSet {
            owner: class.to_vec(),
            constraints: Vec::new(),
        };

        // Neighborhoods may use at most Δ(H) distinct colors.
        if nbhd.len() > delta {
            for_each_combination(nbhd, delta + 1, |s| {
                if !keep(s) {
                    return;
                }
                for_each_combination(&colors, delta + 1, |x| {
                    out.constraints.push(TaggedConstraint {
                        kind: ConstraintKind::TypeP {
                            s: s.to_vec(),
                            x: x.to_vec(),
                        },
                        constraint: coloring_polynomial_on(s, x),
                    });
                });
            });
        }

        // Colorings of neighbors that leave no room for the clique P.
        for k in 1..=delta.min(nbhd.len()) {
            let mut seq = vec![0; k];
            for_each_combination(nbhd, k, |s| {
                if !keep(s) {
                    return;
                }
                for_each_sequence(colors.len(), &mut seq, 0, &mut |x| {
                    if self.sequence_blocks(x, class.len()) {
                        out.constraints.push(TaggedConstraint {
                            kind: ConstraintKind::TypeQ {
                                s: s.to_vec(),
                                x: x.to_vec(),
                            },
                            constraint: GF2Constraint::single(Monomial::new(
                                s.iter().zip(x).map(|(&v, &c)| Var::new(v, c)),
                            )),
                        });
                    }
                });
            });
        }
        out
    }

    /// Number of blocking color sequences of length `k` for a class of
    /// `class_size` twins.
    fn blocking_sequences(&self, k: usize, class_size: usize) -> usize {
        if let Some(&n) = self.q_sequences.borrow().get(&(k, class_size)) {
            return n;
        }
        let mut count = 0;
        let mut seq = vec![0; k];
        for_each_sequence(self.h.color_count(), &mut seq, 0, &mut |x| {
            if self.sequence_blocks(x, class_size) {
                count += 1;
            }
        });
        self.q_sequences.borrow_mut().insert((k, class_size), count);
        count
    }

    /// How many members of `L(P, G)` have a support meeting `touched`, where
    /// `|N(P)| = nbhd_size` and `|N(P) ∩ touched| = touched_size`. Computed
    /// without generating the constraints.
    pub fn count_touching(&self, class_size: usize, nbhd_size: usize, touched_size: usize) -> u128 {
        let delta = self.h.max_degree();
        let meeting = |k: usize| {
            binomial(nbhd_size, k).saturating_sub(binomial(nbhd_size - touched_size, k))
        };
        let mut total = meeting(delta + 1).saturating_mul(binomial(self.h.color_count(), delta + 1));
        for k in 1..=delta.min(nbhd_size) {
            total = total.saturating_add(
                meeting(k).saturating_mul(self.blocking_sequences(k, class_size) as u128),
            );
        }
        total
    }
}

/// `L(P, G)` for one class.
pub fn build_constraints_for_class(
    g: &Graph,
    h: &PatternGraph,
    class: &[VertexId],
) -> ConstraintSet {
    ConstraintBuilder::new(h).class_constraints(g, class)
}

/// `L_Π(G)`: one constraint set per class, in class order.
pub fn build_all_constraints(
    g: &Graph,
    h: &PatternGraph,
    pi: &TwinDecomposition,
) -> Vec<ConstraintSet> {
    let builder = ConstraintBuilder::new(h);
    pi.classes()
        .iter()
        .map(|p| builder.class_constraints(g, p))
        .collect()
}

/// `|L_Π(G)|` counted without generating the constraints.
pub fn count_all_constraints(g: &Graph, h: &PatternGraph, pi: &TwinDecomposition) -> u128 {
    let builder = ConstraintBuilder::new(h);
    pi.classes()
        .iter()
        .map(|p| {
            let n = g.set_neighborhood(p).len();
            builder.count_touching(p.len(), n, n)
        })
        .fold(0u128, u128::saturating_add)
}

/// `2n · n^{Δ+1} · |V(H)|^{Δ+1}`, the bound on `|L_Π(G)|`.
pub fn constraint_count_bound(n: usize, h: &PatternGraph) -> CountBound {
    let e = (h.max_degree() + 1) as u32;
    let n = n as u128;
    CountBound::checked(
        n.checked_pow(e)
            .and_then(|a| a.checked_mul(2 * n))
            .and_then(|a| a.checked_mul((h.color_count() as u128).checked_pow(e)?)),
    )
}

/// Distinct constraint vectors across a family of sets.
pub fn distinct_constraints<'a>(
    sets: impl IntoIterator<Item = &'a ConstraintSet>,
) -> BTreeSet<&'a GF2Constraint> {
    sets.into_iter().flat_map(|s| s.iter()).collect()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    r
}

/// Calls `f` on every `k`-subset of `items`, in lexicographic order of
/// positions.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], k: usize, mut f: impl FnMut(&[T])) {
    if k > items.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..k {
            buf[j] = items[idx[j]];
        }
    }
}

fn for_each_sequence(base: usize, seq: &mut [ColorId], pos: usize, f: &mut impl FnMut(&[ColorId])) {
    if pos == seq.len() {
        f(seq);
        return;
    }
    for c in 0..base {
        seq[pos] = c;
        for_each_sequence(base, seq, pos + 1, f);
    }
}
