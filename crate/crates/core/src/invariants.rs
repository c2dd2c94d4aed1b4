//! Structural identities and implications that must hold for every
//! hypergraph. Used by `selftest` and by the property suites.

use crate::hypergraph::{Hypergraph, VertexSet};
use crate::patterns::{contains_clique_in_ith_shadow, contains_generalized_triangle, contains_sigma};

/// Reassembling `e ∪ {v}` over the shadow index gives back the edge set.
pub fn shadow_reconstructs_edges(h: &Hypergraph) -> bool {
    h.shadow().reconstruct_edges() == h.edges()
}

/// `Σ_{e ∈ ∂H} |N(e)| = r·|H|`.
pub fn codegree_sum_matches(h: &Hypergraph) -> bool {
    let total: usize = h.shadow().iter().map(|(_, nb)| nb.len()).sum();
    total == h.r() * h.edge_count()
}

/// For every vertex, the union of `N(e)` over shadow sets through it is the
/// vertex neighborhood.
pub fn neighborhood_union_identity(h: &Hypergraph) -> bool {
    (0..h.n()).all(|v| {
        let union = h
            .shadow()
            .iter()
            .filter(|(e, _)| e.contains(v))
            .fold(VertexSet::EMPTY, |acc, (_, nb)| acc.union(nb));
        h.neighborhood_of_vertex(v).map(|nv| nv == union).unwrap_or(false)
    })
}

/// Iterating the shadow `i` times agrees with taking `(r-i)`-subsets of edges.
pub fn iterated_shadow_identity(h: &Hypergraph) -> bool {
    (1..h.r()).all(|i| h.ith_shadow(i).map(|s| s == h.edge_subsets(h.r() - i)).unwrap_or(false))
}

/// Whether the `T_r`-free, `δ⁺ >= r` hypotheses hold.
pub fn qualifies(h: &Hypergraph) -> bool {
    h.min_positive_codegree() >= h.r() && contains_generalized_triangle(h).is_none()
}

/// `T_r`-free with `δ⁺ >= r` implies `Σ_r`-free.
pub fn sigma_free_when_qualified(h: &Hypergraph) -> bool {
    !(qualifies(h) && contains_sigma(h).is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoNeighborhoodViolation {
    NotDisjoint { edge: VertexSet, i: usize, j: usize },
    NotIndependent { edge: VertexSet, i: usize },
    MeetsVertexNeighborhood { edge: VertexSet, i: usize },
}

/// For a qualifying `h` and every edge `{u_1..u_r}`, the sets `N(e \ {u_i})`
/// are pairwise disjoint, independent, and miss `N(u_i)`.
/// Non-qualifying hypergraphs pass vacuously.
pub fn coneighborhood_property(h: &Hypergraph) -> Result<(), CoNeighborhoodViolation> {
    if !qualifies(h) {
        return Ok(());
    }
    for &edge in h.edges() {
        let us = edge.to_vec();
        let sets: Vec<VertexSet> = us.iter().map(|&u| h.codegree_neighborhood(edge.without(u))).collect();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if !sets[i].is_disjoint(sets[j]) {
                    return Err(CoNeighborhoodViolation::NotDisjoint { edge, i, j });
                }
            }
            if !h.is_independent(sets[i]) {
                return Err(CoNeighborhoodViolation::NotIndependent { edge, i });
            }
            let nu = h.neighborhood_of_vertex(us[i]).expect("edge vertex < n");
            if !sets[i].is_disjoint(nu) {
                return Err(CoNeighborhoodViolation::MeetsVertexNeighborhood { edge, i });
            }
        }
    }
    Ok(())
}

/// `K_{ℓ+1} ⊆ ∂_{r-2} H` or `δ⁺ <= (r-2)·C(ℓ,2)`; required of every host of `H_{ℓ+1}^r`.
pub fn expansion_host_condition(h: &Hypergraph, ell: usize) -> bool {
    let clique = contains_clique_in_ith_shadow(h, ell + 1, h.r() - 2).unwrap_or(false);
    clique || h.min_positive_codegree() <= (h.r() - 2) * ell * (ell - 1) / 2
}
