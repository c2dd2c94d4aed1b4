//! Forbidden-configuration detection: generic pattern embedding, the
//! generalized triangle `T_r`, the relaxed family `Σ_r`, cliques in the
//! `(r-2)`-th shadow, and clique expansions.

use std::collections::HashSet;

use crate::constructions;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// An injective vertex map carrying every pattern edge onto a host edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: Hypergraph,
    pub host: Hypergraph,
    /// `map[p]` is the host image of pattern vertex `p`.
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self, pattern_edge: VertexSet) -> VertexSet {
        pattern_edge.iter().map(|p| self.map[p]).collect()
    }

    /// Checks injectivity and edge preservation from scratch.
    pub fn is_valid(&self) -> bool {
        verify_embedding(&self.host, &self.pattern, &self.map)
    }
}

pub fn verify_embedding(host: &Hypergraph, pattern: &Hypergraph, map: &[usize]) -> bool {
    if host.r() != pattern.r() || map.len() != pattern.n() {
        return false;
    }
    if map.iter().any(|&h| h >= host.n()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    if image.len() != map.len() {
        return false;
    }
    pattern
        .edges()
        .iter()
        .all(|e| host.has_edge(e.iter().map(|p| map[p]).collect()))
}

/// Three host edges with `|A ∩ B| = r-1` and `A △ B ⊆ C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaWitness {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

impl SigmaWitness {
    pub fn is_valid(&self, r: usize) -> bool {
        self.a != self.b
            && self.a.intersection(self.b).len() == r - 1
            && self.a.symmetric_difference(self.b).is_subset(self.c)
    }
}

/// What the backtracking matcher needs to know about a host.
pub trait HostView {
    fn vertex_count(&self) -> usize;
    fn has_edge(&self, e: VertexSet) -> bool;
    fn vertex_degree(&self, v: usize) -> usize;
}

/// A hypergraph with constant-time edge lookup and cached degrees.
pub struct IndexedHost<'a> {
    graph: &'a Hypergraph,
    edges: HashSet<VertexSet>,
    degrees: Vec<usize>,
}

impl<'a> IndexedHost<'a> {
    pub fn new(graph: &'a Hypergraph) -> Self {
        let mut degrees = vec![0; graph.n()];
        for e in graph.edges() {
            for v in e.iter() {
                degrees[v] += 1;
            }
        }
        IndexedHost {
            graph,
            edges: graph.edges().iter().copied().collect(),
            degrees,
        }
    }
}

impl HostView for IndexedHost<'_> {
    fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.contains(&e)
    }

    fn vertex_degree(&self, v: usize) -> usize {
        self.degrees[v]
    }
}

/// Backtracking subhypergraph matcher.
///
/// Pattern vertices are placed in order of decreasing degree; a host vertex
/// is a candidate only if its degree is at least the pattern vertex's. Every
/// pattern edge is checked at the moment its last vertex is placed.
pub(crate) struct Matcher<'p> {
    pattern: &'p Hypergraph,
    degrees: Vec<usize>,
}

impl<'p> Matcher<'p> {
    pub(crate) fn new(pattern: &'p Hypergraph) -> Self {
        let mut degrees = vec![0; pattern.n()];
        for e in pattern.edges() {
            for v in e.iter() {
                degrees[v] += 1;
            }
        }
        Matcher { pattern, degrees }
    }

    /// Finds an embedding extending the partial assignment `fixed`
    /// (pattern vertex, host vertex).
    pub(crate) fn search(&self, host: &impl HostView, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
        let np = self.pattern.n();
        if np > host.vertex_count() {
            return None;
        }
        const UNSET: usize = usize::MAX;
        let mut map = vec![UNSET; np];
        let mut used = VertexSet::EMPTY;
        for &(p, h) in fixed {
            if map[p] != UNSET || used.contains(h) || host.vertex_degree(h) < self.degrees[p] {
                return None;
            }
            map[p] = h;
            used = used.with(h);
        }
        let placed: VertexSet = fixed.iter().map(|&(p, _)| p).collect();

        let mut order: Vec<usize> = (0..np).filter(|p| !placed.contains(*p)).collect();
        order.sort_by(|&a, &b| self.degrees[b].cmp(&self.degrees[a]).then(a.cmp(&b)));

        let image = |map: &[usize], e: VertexSet| -> VertexSet { e.iter().map(|p| map[p]).collect() };

        // Edges among the fixed vertices are checked once, up front.
        let mut closing: Vec<Vec<VertexSet>> = vec![Vec::new(); order.len()];
        for &e in self.pattern.edges() {
            match order.iter().rposition(|&p| e.contains(p)) {
                Some(k) => closing[k].push(e),
                None => {
                    if !host.has_edge(image(&map, e)) {
                        return None;
                    }
                }
            }
        }

        fn extend(
            k: usize,
            order: &[usize],
            closing: &[Vec<VertexSet>],
            degrees: &[usize],
            host: &impl HostView,
            map: &mut Vec<usize>,
            used: VertexSet,
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let p = order[k];
            for h in 0..host.vertex_count() {
                if used.contains(h) || host.vertex_degree(h) < degrees[p] {
                    continue;
                }
                map[p] = h;
                let ok = closing[k]
                    .iter()
                    .all(|e| host.has_edge(e.iter().map(|q| map[q]).collect()));
                if ok && extend(k + 1, order, closing, degrees, host, map, used.with(h)) {
                    return true;
                }
            }
            map[p] = usize::MAX;
            false
        }

        extend(0, &order, &closing, &self.degrees, host, &mut map, used).then_some(map)
    }

    /// Is there an embedding whose image uses the host edge `anchor`?
    pub(crate) fn search_through(&self, host: &impl HostView, anchor: VertexSet) -> Option<Vec<usize>> {
        let targets = anchor.to_vec();
        for &pe in self.pattern.edges() {
            let sources = pe.to_vec();
            let mut found = None;
            for_each_permutation(&targets, &mut |perm| {
                let fixed: Vec<(usize, usize)> = sources.iter().copied().zip(perm.iter().copied()).collect();
                found = self.search(host, &fixed);
                found.is_some()
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Calls `f` on every ordering of `items`; stops early once `f` returns true.
fn for_each_permutation(items: &[usize], f: &mut impl FnMut(&[usize]) -> bool) {
    fn go(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == items.len() {
            return f(items);
        }
        for i in k..items.len() {
            items.swap(k, i);
            if go(items, k + 1, f) {
                items.swap(k, i);
                return true;
            }
            items.swap(k, i);
        }
        false
    }
    go(&mut items.to_vec(), 0, f);
}

fn check_uniformity(host: &Hypergraph, pattern: &Hypergraph) -> Result<()> {
    if host.r() != pattern.r() {
        return Err(Error::Contract(format!(
            "host is {}-uniform but pattern is {}-uniform",
            host.r(),
            pattern.r()
        )));
    }
    Ok(())
}

pub fn find_embedding(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Embedding>> {
    check_uniformity(host, pattern)?;
    let indexed = IndexedHost::new(host);
    Ok(Matcher::new(pattern).search(&indexed, &[]).map(|map| Embedding {
        pattern: pattern.clone(),
        host: host.clone(),
        map,
    }))
}

/// Finds a copy of `T_r`: edges `A, B` sharing an `(r-1)`-core and a third
/// edge containing `A △ B` and missing the core.
///
/// The returned copy is the colex-least `(A, B, C)` with `A < B`.
pub fn contains_generalized_triangle(h: &Hypergraph) -> Option<Embedding> {
    let r = h.r();
    let edges = h.edges();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            let core = a.intersection(b);
            if core.len() != r - 1 {
                continue;
            }
            let tips = a.symmetric_difference(b);
            if let Some(&c) = edges.iter().find(|c| tips.is_subset(**c) && c.is_disjoint(core)) {
                let pattern = constructions::generalized_triangle(r).expect("r >= 2");
                let x = a.difference(core).min().unwrap();
                let y = b.difference(core).min().unwrap();
                let mut map: Vec<usize> = core.iter().collect();
                map.push(x);
                map.push(y);
                map.extend(c.difference(tips).iter());
                return Some(Embedding {
                    pattern,
                    host: h.clone(),
                    map,
                });
            }
        }
    }
    None
}

/// Would adding `edge` to the host create a copy of `T_r` using it?
///
/// `has_edge` must answer for the host with `edge` already present.
pub fn completes_generalized_triangle(
    r: usize,
    n: usize,
    has_edge: impl Fn(VertexSet) -> bool,
    edge: VertexSet,
) -> bool {
    let all = VertexSet::prefix(n);
    // edge as one of the two core-sharing edges
    for x in edge.iter() {
        let core = edge.without(x);
        for y in all.difference(edge).iter() {
            if !has_edge(core.with(y)) {
                continue;
            }
            let free = all.difference(edge).without(y);
            let tips = VertexSet::singleton(x).with(y);
            if free.subsets_of_size(r - 2).into_iter().any(|s| has_edge(s.union(tips))) {
                return true;
            }
        }
    }
    // edge as the third edge
    let outside = all.difference(edge);
    let cores = outside.subsets_of_size(r - 1);
    let tips = edge.to_vec();
    for (i, &a) in tips.iter().enumerate() {
        for &b in &tips[i + 1..] {
            if cores.iter().any(|k| has_edge(k.with(a)) && has_edge(k.with(b))) {
                return true;
            }
        }
    }
    false
}

/// Finds a member of `Σ_r`; the third edge may meet `A ∩ B`.
///
/// Returns the colex-least witness `(A, B, C)` with `A < B`.
pub fn contains_sigma(h: &Hypergraph) -> Option<SigmaWitness> {
    let r = h.r();
    let edges = h.edges();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            if a.intersection(b).len() != r - 1 {
                continue;
            }
            let tips = a.symmetric_difference(b);
            if let Some(&c) = edges.iter().find(|c| tips.is_subset(**c)) {
                return Some(SigmaWitness { a, b, c });
            }
        }
    }
    None
}

/// Does the 2-graph `∂_{r-2} H` contain a `k`-clique? Only `i = r - 2` is supported.
pub fn contains_clique_in_ith_shadow(h: &Hypergraph, k: usize, i: usize) -> Result<bool> {
    if i + 2 != h.r() {
        return Err(Error::Contract(format!(
            "clique detection needs the 2-set shadow, i = {}, got i = {i}",
            h.r() - 2
        )));
    }
    Ok(has_clique(&h.co_occurrence(), k))
}

/// k-clique search over adjacency masks.
pub(crate) fn has_clique(adj: &[VertexSet], k: usize) -> bool {
    if k <= 1 {
        return adj.len() >= k;
    }
    // a vertex in a k-clique has at least k-1 neighbors
    let eligible: VertexSet = (0..adj.len()).filter(|&v| adj[v].len() + 1 >= k).collect();

    fn grow(adj: &[VertexSet], size: usize, candidates: VertexSet, k: usize) -> bool {
        if size == k {
            return true;
        }
        if size + candidates.len() < k {
            return false;
        }
        let mut rest = candidates;
        for v in candidates.iter() {
            rest = rest.without(v);
            if size + 1 + rest.len() < k {
                return false;
            }
            if grow(adj, size + 1, rest.intersection(adj[v]), k) {
                return true;
            }
        }
        false
    }
    grow(adj, 0, eligible, k)
}

/// Does `h` contain the expansion `H_{ℓ+1}^r`?
pub fn contains_expansion(h: &Hypergraph, ell: usize) -> Result<bool> {
    let pattern = constructions::expansion_of_clique(h.r(), ell)?;
    if pattern.n() > h.n() {
        return Ok(false);
    }
    Ok(find_embedding(h, &pattern)?.is_some())
}
