//! Multilinear polynomials over GF(2) and span membership.
//!
//! A constraint is stored as the set of monomials whose coefficient is 1, which
//! is exactly its coefficient vector. Only monomials that actually occur are
//! ever materialized; the dense dimension is never allocated.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::graph::{ColorId, VertexId};

/// Indicator variable "vertex receives color".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub vertex: VertexId,
    pub color: ColorId,
}

impl Var {
    pub fn new(vertex: VertexId, color: ColorId) -> Self {
        Var { vertex, color }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c[{},{}]", self.vertex, self.color)
    }
}

/// A multilinear monomial: a strictly increasing list of variables. The empty
/// monomial is the constant 1.
///
/// Ordered graded-lexicographically: by degree, then by the variable lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Var>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial; repeated variables collapse since `x² = x` on 0/1
    /// values.
    pub fn new(vars: impl IntoIterator<Item = Var>) -> Self {
        let mut v: Vec<Var> = vars.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Monomial(v)
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Value of the product under a 0/1 assignment.
    pub fn evaluate(&self, mut value: impl FnMut(Var) -> bool) -> bool {
        self.0.iter().all(|&v| value(v))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A polynomial over GF(2), read as the equality `p ≡₂ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GF2Constraint {
    monomials: BTreeSet<Monomial>,
}

impl GF2Constraint {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Sums monomials mod 2, so a monomial listed twice cancels.
    pub fn from_monomials(monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut c = Self::zero();
        for m in monomials {
            c.toggle(m);
        }
        c
    }

    pub fn single(m: Monomial) -> Self {
        GF2Constraint {
            monomials: BTreeSet::from([m]),
        }
    }

    /// Adds one monomial with coefficient 1.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn monomials(&self) -> &BTreeSet<Monomial> {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.monomials.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.monomials
            .iter()
            .flat_map(|m| m.vars().iter().copied())
            .collect()
    }

    /// Coefficient-wise sum mod 2.
    pub fn add(&self, other: &GF2Constraint) -> GF2Constraint {
        GF2Constraint {
            monomials: self
                .monomials
                .symmetric_difference(&other.monomials)
                .cloned()
                .collect(),
        }
    }

    /// Value mod 2 under a 0/1 assignment; `true` means 1.
    pub fn evaluate(&self, mut value: impl FnMut(Var) -> bool) -> bool {
        self.monomials
            .iter()
            .filter(|m| m.evaluate(&mut value))
            .count()
            % 2
            == 1
    }
}

impl fmt::Display for GF2Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// An upper bound that may have overflowed `u128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountBound {
    pub value: u128,
    pub saturated: bool,
}

impl CountBound {
    pub(crate) fn checked(v: Option<u128>) -> Self {
        match v {
            Some(value) => CountBound {
                value,
                saturated: false,
            },
            None => CountBound {
                value: u128::MAX,
                saturated: true,
            },
        }
    }

    /// `true` when `count` provably does not exceed the bound.
    pub fn admits(&self, count: u128) -> bool {
        self.saturated || count <= self.value
    }
}

/// `n^d + 1`, the bound on multilinear monomials of degree at most `d` over
/// `n` variables.
pub fn monomial_count_bound(n: u64, d: u32) -> CountBound {
    CountBound::checked((n as u128).checked_pow(d).and_then(|p| p.checked_add(1)))
}

/// Incremental GF(2) row echelon form over interned monomials.
///
/// Monomials get ids in order of first appearance; each stored row is a sorted
/// id list whose smallest id (its pivot) is unique among the rows.
#[derive(Clone, Debug, Default)]
pub struct GF2Basis {
    degree_bound: Option<usize>,
    ids: HashMap<Monomial, u32>,
    monomials: Vec<Monomial>,
    pivots: HashMap<u32, Vec<u32>>,
    order: Vec<u32>,
}

impl GF2Basis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Basis that asserts every inserted row has degree at most `d`.
    pub fn with_degree_bound(d: usize) -> Self {
        GF2Basis {
            degree_bound: Some(d),
            ..Self::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.order.len()
    }

    /// Distinct monomials seen across all inserted constraints.
    pub fn monomial_count(&self) -> usize {
        self.monomials.len()
    }

    /// Inserts `c` unless it already lies in the span. Returns whether the
    /// rank grew.
    pub fn insert(&mut self, c: &GF2Constraint) -> bool {
        if let Some(d) = self.degree_bound {
            assert!(
                c.degree() <= d,
                "constraint of degree {} exceeds basis bound {d}",
                c.degree()
            );
        }
        let mut row: Vec<u32> = c.monomials().iter().map(|m| self.intern(m)).collect();
        row.sort_unstable();
        let row = self.reduce(row);
        match row.first() {
            None => false,
            Some(&lead) => {
                self.pivots.insert(lead, row);
                self.order.push(lead);
                true
            }
        }
    }

    /// Span membership without modifying the basis.
    pub fn contains(&self, c: &GF2Constraint) -> bool {
        let mut row = Vec::with_capacity(c.len());
        for m in c.monomials() {
            match self.ids.get(m) {
                Some(&id) => row.push(id),
                // A monomial no row mentions can never cancel.
                None => return false,
            }
        }
        row.sort_unstable();
        self.reduce(row).is_empty()
    }

    /// The stored rows, in insertion order.
    pub fn rows(&self) -> Vec<GF2Constraint> {
        self.order
            .iter()
            .map(|lead| {
                GF2Constraint::from_monomials(
                    self.pivots[lead]
                        .iter()
                        .map(|&id| self.monomials[id as usize].clone()),
                )
            })
            .collect()
    }

    fn intern(&mut self, m: &Monomial) -> u32 {
        if let Some(&id) = self.ids.get(m) {
            return id;
        }
        let id = self.monomials.len() as u32;
        self.monomials.push(m.clone());
        self.ids.insert(m.clone(), id);
        id
    }

    fn reduce(&self, mut row: Vec<u32>) -> Vec<u32> {
        while let Some(&lead) = row.first() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = xor_sorted(&row, pivot),
                None => break,
            }
        }
        row
    }
}

/// Symmetric difference of two strictly increasing lists.
fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Functional form of [`GF2Basis::insert`].
pub fn add_to_basis(mut basis: GF2Basis, c: &GF2Constraint) -> (GF2Basis, bool) {
    let accepted = basis.insert(c);
    (basis, accepted)
}

/// Whether `target` is a GF(2) combination of `generators`.
pub fn in_span<'a>(
    target: &GF2Constraint,
    generators: impl IntoIterator<Item = &'a GF2Constraint>,
) -> bool {
    let mut basis = GF2Basis::new();
    for g in generators {
        basis.insert(g);
    }
    basis.contains(target)
}
