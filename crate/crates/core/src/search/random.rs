use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Forbidden, MAX_SEARCH_VERTICES};
use crate::constructions::expansion_of_clique;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::patterns::{completes_generalized_triangle, HostView, Matcher};

/// Greedy random pattern-free r-graph: candidate edges are tried in a
/// seeded random order and kept unless they complete a forbidden
/// configuration. Stops at `target_edges` or when every slot was tried.
pub fn random_pattern_free(
    r: usize,
    n: usize,
    target_edges: usize,
    forbidden: &[Forbidden],
    seed: u64,
) -> Result<Hypergraph> {
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::Capacity(format!(
            "random sampler supports n <= {MAX_SEARCH_VERTICES}, got n = {n}"
        )));
    }
    if r < 2 {
        return Err(Error::Contract(format!("uniformity must be at least 2, got {r}")));
    }
    let mut patterns = Vec::new();
    let mut triangle = false;
    for f in forbidden {
        match f {
            Forbidden::GeneralizedTriangle => triangle = true,
            Forbidden::Expansion(ell) => patterns.push(expansion_of_clique(r, *ell)?),
            Forbidden::Pattern(p) if p.r() != r => {
                return Err(Error::Contract(format!("pattern is {}-uniform, expected {r}", p.r())))
            }
            Forbidden::Pattern(p) => patterns.push(p.clone()),
        }
    }
    let matchers: Vec<Matcher> = patterns.iter().filter(|p| p.n() <= n).map(Matcher::new).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slots = if n >= r {
        VertexSet::prefix(n).subsets_of_size(r)
    } else {
        Vec::new()
    };
    slots.shuffle(&mut rng);

    let mut host = Growing {
        n,
        edges: HashSet::new(),
        degree: vec![0; n],
    };
    for e in slots {
        if host.edges.len() >= target_edges {
            break;
        }
        host.add(e);
        let bad = (triangle && completes_generalized_triangle(r, n, |x| host.edges.contains(&x), e))
            || matchers.iter().any(|m| m.search_through(&host, e).is_some());
        if bad {
            host.remove(e);
        }
    }
    Hypergraph::new(r, n, host.edges)
}

struct Growing {
    n: usize,
    edges: HashSet<VertexSet>,
    degree: Vec<usize>,
}

impl Growing {
    fn add(&mut self, e: VertexSet) {
        self.edges.insert(e);
        for v in e.iter() {
            self.degree[v] += 1;
        }
    }

    fn remove(&mut self, e: VertexSet) {
        self.edges.remove(&e);
        for v in e.iter() {
            self.degree[v] -= 1;
        }
    }
}

impl HostView for Growing {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn has_edge(&self, e: VertexSet) -> bool {
        self.edges.contains(&e)
    }

    fn vertex_degree(&self, v: usize) -> usize {
        self.degree[v]
    }
}
