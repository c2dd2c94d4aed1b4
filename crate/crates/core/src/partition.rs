//! Deciding r-partiteness.
//!
//! An edge is rainbow under a vertex coloring iff all of its internal pairs
//! get distinct colors, so H is r-partite iff the co-occurrence graph
//! (vertices joined when they share an edge) is properly r-colorable.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::patterns::has_clique;

/// `parts[v]` is the part of vertex `v`, in `0..r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub parts: Vec<usize>,
}

impl PartitionCertificate {
    /// Vertex sets of the parts `0..r`.
    pub fn classes(&self, r: usize) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; r];
        for (v, &p) in self.parts.iter().enumerate() {
            if p < r {
                out[p] = out[p].with(v);
            }
        }
        out
    }
}

pub fn find_r_partition(h: &Hypergraph) -> Option<PartitionCertificate> {
    let r = h.r();
    let adj = h.co_occurrence();
    if has_clique(&adj, r + 1) {
        return None;
    }
    const NONE: usize = usize::MAX;
    let mut color = vec![NONE; h.n()];
    let active: Vec<usize> = (0..h.n()).filter(|&v| !adj[v].is_empty()).collect();

    fn saturation(adj: &[VertexSet], color: &[usize], v: usize) -> u128 {
        adj[v]
            .iter()
            .filter(|&u| color[u] != usize::MAX)
            .fold(0u128, |acc, u| acc | 1 << color[u])
    }

    // DSATUR: most constrained vertex first, ties by degree then id.
    fn pick(adj: &[VertexSet], color: &[usize], active: &[usize]) -> Option<(usize, u128)> {
        active
            .iter()
            .filter(|&&v| color[v] == usize::MAX)
            .map(|&v| (v, saturation(adj, color, v)))
            .max_by(|&(a, sa), &(b, sb)| {
                sa.count_ones()
                    .cmp(&sb.count_ones())
                    .then(adj[a].len().cmp(&adj[b].len()))
                    .then(b.cmp(&a))
            })
    }

    // New colors are introduced in order, so color k only appears after 0..k-1.
    fn solve(adj: &[VertexSet], color: &mut [usize], active: &[usize], r: usize, used: usize) -> bool {
        let Some((v, sat)) = pick(adj, color, active) else {
            return true;
        };
        let limit = (used + 1).min(r);
        for c in 0..limit {
            if sat >> c & 1 == 1 {
                continue;
            }
            color[v] = c;
            if solve(adj, color, active, r, used.max(c + 1)) {
                return true;
            }
        }
        color[v] = usize::MAX;
        false
    }

    if !solve(&adj, &mut color, &active, r, 0) {
        return None;
    }
    for c in color.iter_mut() {
        if *c == NONE {
            *c = 0;
        }
    }
    Some(PartitionCertificate { parts: color })
}

/// True iff every edge has its `r` vertices in `r` distinct parts from `0..r`.
pub fn verify_partition(h: &Hypergraph, cert: &PartitionCertificate) -> Result<bool> {
    if cert.parts.len() != h.n() {
        return Err(Error::Contract(format!(
            "certificate assigns {} vertices, hypergraph has {}",
            cert.parts.len(),
            h.n()
        )));
    }
    let r = h.r();
    Ok(h.edges().iter().all(|e| {
        let mut seen = 0u128;
        e.iter().all(|v| {
            let p = cert.parts[v];
            let fresh = p < r && seen >> p & 1 == 0;
            seen |= 1u128 << p.min(127);
            fresh
        })
    }))
}
