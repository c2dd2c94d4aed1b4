//! Canonical forms for isomorphism classes of small hypergraphs.
//!
//! The key is the colex-sorted edge list of a relabeling, minimized
//! lexicographically over every relabeling that respects an
//! isomorphism-invariant vertex coloring (iterated degree refinement).
//! Labels are handed out one at a time; once the vertices labelled
//! `0..=k` are fixed, every edge inside them is known and forms a prefix of
//! the final key, which is what the branch-and-bound compares. Vertices
//! that are twins (swapping them is an automorphism) are interchangeable,
//! so only one per twin class is branched on.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// Largest n accepted by [`canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 12;

/// Total-order key of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    r: usize,
    n: usize,
    edges: Vec<u128>,
}

impl CanonicalForm {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical relabeling itself.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.r, self.n, self.edges.iter().map(|&b| VertexSet::from_bits(b)))
            .expect("canonical edges are valid")
    }
}

/// `r:n:` followed by the hex edge masks of the canonical labeling.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let masks: Vec<String> = self.edges.iter().map(|b| format!("{b:x}")).collect();
        write!(f, "{}:{}:{}", self.r, self.n, masks.join(","))
    }
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm> {
    if h.n() > MAX_CANONICAL_VERTICES {
        return Err(Error::Capacity(format!(
            "canonical form supports n <= {MAX_CANONICAL_VERTICES}, got n = {}",
            h.n()
        )));
    }
    Ok(canonical_labeling(h).0)
}

/// Canonical form plus the relabeling `perm[v] = label` that attains it.
/// No size cap; cost grows quickly beyond a dozen or so vertices.
pub(crate) fn canonical_labeling(h: &Hypergraph) -> (CanonicalForm, Vec<usize>) {
    let n = h.n();
    let colors = refine_colors(h);
    let mut target: Vec<usize> = colors.clone();
    target.sort_unstable();
    let twin_rep = twin_representatives(h);
    let incident: Vec<Vec<VertexSet>> = (0..n)
        .map(|v| h.edges().iter().copied().filter(|e| e.contains(v)).collect())
        .collect();

    let mut search = Search {
        colors: &colors,
        target: &target,
        twin_rep: &twin_rep,
        incident: &incident,
        label: vec![usize::MAX; n],
        blocks: Vec::with_capacity(n),
        best: None,
    };
    search.descend(0);
    let (blocks, perm) = search.best.expect("at least one labeling exists");
    let edges: Vec<u128> = blocks.into_iter().flatten().collect();
    (CanonicalForm { r: h.r(), n, edges }, perm)
}

/// The canonical relabeling of `h`.
pub fn canonical_representative(h: &Hypergraph) -> Hypergraph {
    canonical_labeling(h).0.to_hypergraph()
}

struct Search<'a> {
    colors: &'a [usize],
    target: &'a [usize],
    twin_rep: &'a [usize],
    incident: &'a [Vec<VertexSet>],
    label: Vec<usize>,
    /// blocks[k]: relabeled edges whose largest label is k, ascending.
    blocks: Vec<Vec<u128>>,
    best: Option<(Vec<Vec<u128>>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, k: usize) {
        let n = self.colors.len();
        if k == n {
            if self.compare_with_best() == Ordering::Less || self.best.is_none() {
                self.best = Some((self.blocks.clone(), self.label.clone()));
            }
            return;
        }
        let mut tried = BTreeSet::new();
        for v in 0..n {
            if self.label[v] != usize::MAX || self.colors[v] != self.target[k] {
                continue;
            }
            // an unlabelled twin of v is equivalent to v
            if !tried.insert(self.twin_class_key(v)) {
                continue;
            }
            self.label[v] = k;
            let mut block: Vec<u128> = self.incident[v]
                .iter()
                .filter(|e| e.iter().all(|u| self.label[u] != usize::MAX))
                .map(|e| e.iter().fold(0u128, |acc, u| acc | 1u128 << self.label[u]))
                .collect();
            block.sort_unstable();
            self.blocks.push(block);
            if self.compare_with_best() != Ordering::Greater {
                self.descend(k + 1);
            }
            self.blocks.pop();
            self.label[v] = usize::MAX;
        }
    }

    fn twin_class_key(&self, v: usize) -> usize {
        self.twin_rep[v]
    }

    /// Compares the current partial key with the same-length prefix of the
    /// best key. A longer block wins over its own prefix, because whatever
    /// follows in the other key involves a larger label.
    fn compare_with_best(&self) -> Ordering {
        let Some((best, _)) = &self.best else {
            return Ordering::Less;
        };
        for (cur, old) in self.blocks.iter().zip(best) {
            for (a, b) in cur.iter().zip(old) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
            match cur.len().cmp(&old.len()) {
                Ordering::Equal => {}
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
            }
        }
        Ordering::Equal
    }
}

/// Iterated refinement: a vertex's new color is its old color together with
/// the multiset of color-multisets of its incident edges. Colors are ranks
/// of sorted signatures, so they depend only on the isomorphism class.
fn refine_colors(h: &Hypergraph) -> Vec<usize> {
    let n = h.n();
    let mut colors: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut around: Vec<Vec<usize>> = h
                    .edges()
                    .iter()
                    .filter(|e| e.contains(v))
                    .map(|e| {
                        let mut cs: Vec<usize> = e.without(v).iter().map(|u| colors[u]).collect();
                        cs.sort_unstable();
                        cs
                    })
                    .collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort_unstable();
        distinct.dedup();
        colors = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

/// For each vertex, the least vertex it is a twin of (possibly itself).
fn twin_representatives(h: &Hypergraph) -> Vec<usize> {
    let n = h.n();
    let edges: HashSet<VertexSet> = h.edges().iter().copied().collect();
    let swap = |e: VertexSet, u: usize, v: usize| -> VertexSet {
        match (e.contains(u), e.contains(v)) {
            (true, false) => e.without(u).with(v),
            (false, true) => e.without(v).with(u),
            _ => e,
        }
    };
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if rep[u] != u {
                continue;
            }
            if h.edges().iter().all(|&e| edges.contains(&swap(e, u, v))) {
                rep[v] = u;
                break;
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn relabeling_does_not_change_the_key() {
        let h = blowup(&BlowupSpec::new(wheel5(3).unwrap(), vec![2, 1, 1, 2, 1, 1]).unwrap()).unwrap();
        let perm = vec![3, 7, 0, 5, 1, 6, 2, 4];
        let g = h.relabel(&perm).unwrap();
        assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn triangle_and_star_differ() {
        let t = generalized_triangle(3).unwrap();
        let s = Hypergraph::from_lists(3, 5, &[&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]]).unwrap();
        assert_ne!(canonical_form(&t).unwrap(), canonical_form(&s).unwrap());
    }

    #[test]
    fn edgeless_graphs_agree() {
        let a = Hypergraph::edgeless(3, 9).unwrap();
        let b = Hypergraph::edgeless(3, 9).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_eq!(canonical_form(&a).unwrap().to_string(), "3:9:");
    }

    #[test]
    fn representative_is_isomorphic_and_fixed() {
        let h = clique_plus_isolated(3, 6)
            .unwrap()
            .relabel(&[5, 4, 3, 2, 1, 0])
            .unwrap();
        let rep = canonical_representative(&h);
        assert_eq!(rep.edge_count(), 4);
        assert_eq!(canonical_representative(&rep), rep);
        assert_eq!(canonical_form(&rep).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn capacity_is_enforced() {
        let h = Hypergraph::edgeless(3, 13).unwrap();
        assert!(matches!(canonical_form(&h), Err(Error::Capacity(_))));
    }

    #[test]
    fn symmetric_instances_are_fast() {
        let h = complete(3, 12).unwrap();
        assert_eq!(canonical_form(&h).unwrap().to_hypergraph(), h);
        let h = balanced_r_partite(3, 12).unwrap();
        canonical_form(&h).unwrap();
    }
}
