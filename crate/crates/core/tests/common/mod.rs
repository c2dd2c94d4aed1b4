//! Brute-force reference implementations. They work on plain sorted vertex
//! lists and share no code with the library beyond reading edges out.
#![allow(dead_code)]

use std::collections::BTreeSet;

use codegree::Hypergraph;
use rand::Rng;

pub type Edge = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plain {
    pub r: usize,
    pub n: usize,
    pub edges: BTreeSet<Edge>,
}

impl Plain {
    pub fn of(h: &Hypergraph) -> Self {
        Plain {
            r: h.r(),
            n: h.n(),
            edges: h.edges().iter().map(|e| e.to_vec()).collect(),
        }
    }

    pub fn new(r: usize, n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let edges = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        Plain { r, n, edges }
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        let lists: Vec<&[usize]> = self.edges.iter().map(|e| e.as_slice()).collect();
        Hypergraph::from_lists(self.r, self.n, &lists).unwrap()
    }

    pub fn has(&self, e: &[usize]) -> bool {
        let mut e = e.to_vec();
        e.sort_unstable();
        self.edges.contains(&e)
    }

    /// All (r-1)-subsets of edges.
    pub fn shadow(&self) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for e in &self.edges {
            for i in 0..e.len() {
                let mut s = e.clone();
                s.remove(i);
                out.insert(s);
            }
        }
        out
    }

    /// Vertices `v` with `s ∪ {v}` an edge.
    pub fn nbhd(&self, s: &[usize]) -> BTreeSet<usize> {
        (0..self.n)
            .filter(|v| !s.contains(v))
            .filter(|&v| {
                let mut e = s.to_vec();
                e.push(v);
                self.has(&e)
            })
            .collect()
    }

    pub fn vertex_nbhd(&self, v: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter(|e| e.contains(&v))
            .flatten()
            .copied()
            .filter(|&u| u != v)
            .collect()
    }

    pub fn min_positive_codegree(&self) -> usize {
        self.shadow().iter().map(|s| self.nbhd(s).len()).min().unwrap_or(0)
    }

    pub fn is_independent(&self, set: &BTreeSet<usize>) -> bool {
        self.edges
            .iter()
            .all(|e| e.iter().filter(|v| set.contains(v)).count() <= 1)
    }

    fn pairs_with_large_meet(&self) -> Vec<(&Edge, &Edge, Vec<usize>)> {
        let mut out = Vec::new();
        for a in &self.edges {
            for b in &self.edges {
                if a >= b {
                    continue;
                }
                let common: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
                if common.len() == self.r - 1 {
                    out.push((a, b, common));
                }
            }
        }
        out
    }

    /// Edges A, B sharing r-1 vertices S and an edge C with A△B ⊆ C, C ∩ S = ∅.
    pub fn has_triangle(&self) -> bool {
        self.pairs_with_large_meet().into_iter().any(|(a, b, s)| {
            let x = a.iter().find(|v| !s.contains(v)).unwrap();
            let y = b.iter().find(|v| !s.contains(v)).unwrap();
            self.edges
                .iter()
                .any(|c| c.contains(x) && c.contains(y) && c.iter().all(|v| !s.contains(v)))
        })
    }

    /// Same as `has_triangle` without the disjointness requirement on C.
    pub fn has_sigma(&self) -> bool {
        self.pairs_with_large_meet().into_iter().any(|(a, b, s)| {
            let x = a.iter().find(|v| !s.contains(v)).unwrap();
            let y = b.iter().find(|v| !s.contains(v)).unwrap();
            self.edges.iter().any(|c| c.contains(x) && c.contains(y))
        })
    }

    /// Tries every assignment of `r` colors.
    pub fn is_r_partite(&self) -> bool {
        let total = self.r.pow(self.n as u32);
        let mut color = vec![0usize; self.n];
        for code in 0..total {
            let mut c = code;
            for slot in color.iter_mut() {
                *slot = c % self.r;
                c /= self.r;
            }
            if self.edges.iter().all(|e| {
                let used: BTreeSet<usize> = e.iter().map(|&v| color[v]).collect();
                used.len() == self.r
            }) {
                return true;
            }
        }
        false
    }

    pub fn relabel(&self, perm: &[usize]) -> Plain {
        Plain::new(
            self.r,
            self.n,
            self.edges.iter().map(|e| e.iter().map(|&v| perm[v]).collect()),
        )
    }

    /// Lexicographically least relabeled edge list over all `n!` permutations.
    pub fn brute_canonical(&self) -> Vec<Edge> {
        let mut best: Option<Vec<Edge>> = None;
        for perm in permutations(self.n) {
            let key: Vec<Edge> = self.relabel(&perm).edges.into_iter().collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap_or_default()
    }

    pub fn isomorphic(&self, other: &Plain) -> bool {
        self.r == other.r
            && self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.brute_canonical() == other.brute_canonical()
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every injective map from `0..k` into `0..n`.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(k, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(k, &mut Vec::new(), &mut vec![false; n], &mut out);
    }
    out
}

pub fn embeds(host: &Plain, pattern: &Plain) -> bool {
    injections(pattern.n, host.n).iter().any(|map| {
        pattern
            .edges
            .iter()
            .all(|e| host.has(&e.iter().map(|&v| map[v]).collect::<Vec<_>>()))
    })
}

/// All r-subsets of `0..n` in lexicographic order.
pub fn all_r_sets(r: usize, n: usize) -> Vec<Edge> {
    fn go(start: usize, r: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Edge>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, r, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, n, &mut Vec::new(), &mut out);
    out
}

/// Each r-subset kept independently with probability `p`.
pub fn random_plain(rng: &mut impl Rng, r: usize, n: usize, p: f64) -> Plain {
    Plain::new(r, n, all_r_sets(r, n).into_iter().filter(|_| rng.gen_bool(p)))
}
