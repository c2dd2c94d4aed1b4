//! r-uniform hypergraphs over dense vertex ids `0..n`, together with the
//! shadow, neighborhood, link and degree primitives everything else is
//! built from.
//!
//! Vertex sets are fixed-width bit masks (`u128`), so `n` is capped at
//! [`MAX_VERTICES`]. The numeric order of masks is the colexicographic order
//! of the sets they represent, which is the edge order used throughout.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 128;

/// A set of vertices stored as a bit mask. `Ord` is colex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    /// `{0, 1, .., n-1}`.
    pub fn prefix(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All `k`-element subsets, in colex order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VertexSet> {
        fn extend(members: &[usize], k: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
            if k == 0 {
                out.push(acc);
                return;
            }
            for i in (k - 1)..members.len() {
                extend(&members[..i], k - 1, acc.with(members[i]), out);
            }
        }
        let members = self.to_vec();
        let mut out = Vec::new();
        if k <= members.len() {
            extend(&members, k, VertexSet::EMPTY, &mut out);
        }
        out.sort_unstable();
        out
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

/// Map from each `(r-1)`-set of the shadow to its neighborhood `N(e)`.
///
/// A key is present iff its neighborhood is nonempty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShadowIndex {
    map: BTreeMap<VertexSet, VertexSet>,
}

impl ShadowIndex {
    fn build(edges: &[VertexSet]) -> Self {
        let mut map: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
        for &edge in edges {
            for v in edge.iter() {
                let key = edge.without(v);
                let slot = map.entry(key).or_default();
                *slot = slot.with(v);
            }
        }
        ShadowIndex { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `N(e)`, or `None` when `e` is not in the shadow.
    pub fn get(&self, key: VertexSet) -> Option<VertexSet> {
        self.map.get(&key).copied()
    }

    pub fn contains(&self, key: VertexSet) -> bool {
        self.map.contains_key(&key)
    }

    pub fn keys(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.map.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
        self.map.iter().map(|(k, v)| (*k, *v))
    }

    /// `{e ∪ {v} : v ∈ N(e)}` over all entries, in colex order.
    pub fn reconstruct_edges(&self) -> Vec<VertexSet> {
        let set: BTreeSet<VertexSet> = self
            .iter()
            .flat_map(|(k, nb)| nb.iter().map(move |v| k.with(v)))
            .collect();
        set.into_iter().collect()
    }
}

/// Minimum, maximum and average vertex degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub average: Ratio<u64>,
}

/// An r-uniform hypergraph on vertices `0..n`.
///
/// Immutable after construction; the shadow index is computed lazily once
/// and cached.
#[derive(Clone)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<VertexSet>,
    shadow: OnceLock<ShadowIndex>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("r", &self.r)
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting edges of the wrong size, vertices
    /// `>= n`, and duplicates.
    pub fn new(r: usize, n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if r < 2 {
            return Err(Error::Contract("uniformity must be at least 2".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "n = {n} exceeds the {MAX_VERTICES}-vertex limit"
            )));
        }
        let all = VertexSet::prefix(n);
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if e.len() != r {
                return Err(Error::Contract(format!("edge {e} does not have {r} vertices")));
            }
            if !e.is_subset(all) {
                return Err(Error::Range(format!("edge {e} has a vertex >= n = {n}")));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Contract(format!("duplicate edge {}", w[0])));
        }
        Ok(Hypergraph {
            r,
            n,
            edges,
            shadow: OnceLock::new(),
        })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_lists(r: usize, n: usize, edges: &[&[usize]]) -> Result<Self> {
        let mut sets = Vec::with_capacity(edges.len());
        for list in edges {
            if let Some(&v) = list.iter().find(|&&v| v >= MAX_VERTICES) {
                return Err(Error::Range(format!("vertex {v} out of range")));
            }
            let set: VertexSet = list.iter().copied().collect();
            if set.len() != list.len() {
                return Err(Error::Contract(format!("edge {list:?} repeats a vertex")));
            }
            sets.push(set);
        }
        Self::new(r, n, sets)
    }

    pub fn edgeless(r: usize, n: usize) -> Result<Self> {
        Self::new(r, n, std::iter::empty())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in colex order.
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    /// A new hypergraph with one more edge.
    pub fn with_edge(&self, e: VertexSet) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(e);
        Self::new(self.r, self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Contract(format!(
                "permutation has length {} but n = {}",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().filter(|&v| v < self.n).collect();
        if image.len() != self.n {
            return Err(Error::Contract("not a permutation of 0..n".into()));
        }
        let edges = self.edges.iter().map(|e| e.iter().map(|v| perm[v]).collect());
        Self::new(self.r, self.n, edges)
    }

    pub fn shadow(&self) -> &ShadowIndex {
        self.shadow.get_or_init(|| ShadowIndex::build(&self.edges))
    }

    /// `N(e)` for an `(r-1)`-set; empty when `e` is outside the shadow.
    pub fn codegree_neighborhood(&self, e: VertexSet) -> VertexSet {
        self.shadow().get(e).unwrap_or(VertexSet::EMPTY)
    }

    fn check_shadow_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.r {
            return Err(Error::Range(format!(
                "shadow index {i} outside [1, {}]",
                self.r.saturating_sub(1)
            )));
        }
        Ok(())
    }

    /// The i-th shadow: `(r-i)`-sets, computed by iterating the one-step
    /// shadow `i` times.
    pub fn ith_shadow(&self, i: usize) -> Result<BTreeSet<VertexSet>> {
        self.check_shadow_index(i)?;
        let mut level: BTreeSet<VertexSet> = self.shadow().keys().collect();
        for _ in 1..i {
            level = level.iter().flat_map(|s| s.iter().map(move |v| s.without(v))).collect();
        }
        Ok(level)
    }

    /// All `k`-subsets of edges, computed directly.
    pub fn edge_subsets(&self, k: usize) -> BTreeSet<VertexSet> {
        self.edges.iter().flat_map(|e| e.subsets_of_size(k)).collect()
    }

    pub fn neighborhood_of_vertex(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::Range(format!("vertex {v} >= n = {}", self.n)));
        }
        let nb = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .fold(VertexSet::EMPTY, |acc, &e| acc.union(e));
        Ok(nb.without(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Number of edges containing `s`.
    pub fn set_degree(&self, s: VertexSet) -> usize {
        self.edges.iter().filter(|e| s.is_subset(**e)).count()
    }

    fn check_link_set(&self, s: VertexSet) -> Result<()> {
        if s.is_empty() || s.len() >= self.r {
            return Err(Error::Range(format!(
                "link set {s} must have between 1 and {} vertices",
                self.r.saturating_sub(1)
            )));
        }
        if !s.is_subset(self.vertices()) {
            return Err(Error::Range(format!("link set {s} has a vertex >= n = {}", self.n)));
        }
        Ok(())
    }

    /// `L(S) = {e : S ∪ e ∈ H, S ∩ e = ∅}` for `1 <= |S| <= r-1`.
    pub fn link_of_set(&self, s: VertexSet) -> Result<BTreeSet<VertexSet>> {
        self.check_link_set(s)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| s.is_subset(**e))
            .map(|e| e.difference(s))
            .collect())
    }

    pub fn degree_of_set(&self, s: VertexSet) -> Result<usize> {
        self.check_link_set(s)?;
        Ok(self.set_degree(s))
    }

    /// Minimum positive codegree: `min |N(e)|` over the shadow, 0 when edgeless.
    pub fn min_positive_codegree(&self) -> usize {
        self.shadow().iter().map(|(_, nb)| nb.len()).min().unwrap_or(0)
    }

    /// Minimum of `d(S)` over the `i`-sets `S` contained in some edge;
    /// 0 when edgeless.
    pub fn min_positive_idegree(&self, i: usize) -> Result<usize> {
        self.check_shadow_index(i)?;
        let mut counts: BTreeMap<VertexSet, usize> = BTreeMap::new();
        for e in &self.edges {
            for s in e.subsets_of_size(i) {
                *counts.entry(s).or_default() += 1;
            }
        }
        Ok(counts.values().copied().min().unwrap_or(0))
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::UndefinedStatistics("hypergraph has no vertices".into()));
        }
        let mut degrees = vec![0usize; self.n];
        for e in &self.edges {
            for v in e.iter() {
                degrees[v] += 1;
            }
        }
        Ok(DegreeStats {
            min: *degrees.iter().min().unwrap(),
            max: *degrees.iter().max().unwrap(),
            average: Ratio::new((self.r * self.edges.len()) as u64, self.n as u64),
        })
    }

    /// True iff every edge meets `set` in at most one vertex.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersection(set).len() <= 1)
    }

    /// The 2-graph joining vertices that share an edge, as adjacency masks.
    pub fn co_occurrence(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for &e in &self.edges {
            for v in e.iter() {
                adj[v] = adj[v].union(e.without(v));
            }
        }
        adj
    }
}

/// A rational bound `num/den` compared exactly against integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Threshold {
    num: u64,
    den: u64,
}

impl Threshold {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Contract("threshold denominator must be positive".into()));
        }
        Ok(Threshold { num, den })
    }

    /// The codegree bound `2n/(2r+1)`.
    pub fn positive_codegree_bound(r: usize, n: usize) -> Self {
        Threshold {
            num: 2 * n as u64,
            den: 2 * r as u64 + 1,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// `k > num/den`, evaluated as `k·den > num`.
    pub fn is_exceeded_by(&self, k: u64) -> bool {
        k as u128 * self.den as u128 > self.num as u128
    }

    /// `k >= num/den`.
    pub fn is_met_by(&self, k: u64) -> bool {
        k as u128 * self.den as u128 >= self.num as u128
    }

    /// Smallest integer strictly above the bound.
    pub fn least_integer_above(&self) -> u64 {
        self.num / self.den + 1
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
