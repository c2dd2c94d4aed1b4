//! Named hypergraph families.
//!
//! Vertex numbering is fixed per generator so fixtures and witnesses are
//! stable: hub before rim for wheels, core before padding for expansions,
//! parts in declaration order for partite graphs and blowups.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet, MAX_VERTICES};

/// The complete r-graph on `m` vertices.
pub fn complete(r: usize, m: usize) -> Result<Hypergraph> {
    if r < 2 || m < r {
        return Err(Error::Contract(format!(
            "complete graph needs 2 <= r <= m, got r = {r}, m = {m}"
        )));
    }
    check_capacity(m)?;
    Hypergraph::new(r, m, VertexSet::prefix(m).subsets_of_size(r))
}

/// `T_r` on `2r-1` vertices: `{0..r-2, r-1}`, `{0..r-2, r}`, `{r-1, .., 2r-2}`.
pub fn generalized_triangle(r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::Contract(format!("generalized triangle needs r >= 2, got {r}")));
    }
    let core = VertexSet::prefix(r - 1);
    let third: VertexSet = (r - 1..2 * r - 1).collect();
    Hypergraph::new(r, 2 * r - 1, [core.with(r - 1), core.with(r), third])
}

/// The 5-wheel `W_5^r`: hub `0..r-2`, rim `r-2..r+3`, edges hub plus two
/// cyclically consecutive rim vertices.
pub fn wheel5(r: usize) -> Result<Hypergraph> {
    if r < 3 {
        return Err(Error::Contract(format!("5-wheel needs r >= 3, got {r}")));
    }
    let hub = VertexSet::prefix(r - 2);
    let rim = |i: usize| r - 2 + i % 5;
    Hypergraph::new(r, r + 3, (0..5).map(|i| hub.with(rim(i)).with(rim(i + 1))))
}

/// Base hypergraph plus a class size for each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    base: Hypergraph,
    sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: Hypergraph, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != base.n() {
            return Err(Error::Contract(format!(
                "{} class sizes given for a base on {} vertices",
                sizes.len(),
                base.n()
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::Contract("blowup class sizes must be positive".into()));
        }
        Ok(BlowupSpec { base, sizes })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

/// Replaces base vertex `i` by a class of `sizes[i]` clones (classes are
/// consecutive in base-vertex order) and each base edge by all its
/// transversals.
pub fn blowup(spec: &BlowupSpec) -> Result<Hypergraph> {
    let n: usize = spec.sizes.iter().sum();
    check_capacity(n)?;
    let mut offsets = Vec::with_capacity(spec.sizes.len());
    let mut next = 0;
    for &s in &spec.sizes {
        offsets.push(next);
        next += s;
    }
    let mut edges = Vec::new();
    for e in spec.base.edges() {
        let mut partial = vec![VertexSet::EMPTY];
        for v in e.iter() {
            let (start, size) = (offsets[v], spec.sizes[v]);
            partial = partial
                .into_iter()
                .flat_map(|p| (start..start + size).map(move |u| p.with(u)))
                .collect();
        }
        edges.extend(partial);
    }
    Hypergraph::new(spec.base.r(), n, edges)
}

/// Class sizes that make the `W_5^r` blowup attain codegree exactly
/// `2n/(2r+1)`: `2n/(2r+1)` for each hub vertex, `n/(2r+1)` for each rim vertex.
pub fn wheel5_tight_sizes(r: usize, n: usize) -> Result<Vec<usize>> {
    let q = 2 * r + 1;
    if r < 3 || n == 0 || !n.is_multiple_of(q) {
        return Err(Error::Contract(format!(
            "need r >= 3 and n a positive multiple of {q}, got n = {n}"
        )));
    }
    let unit = n / q;
    let mut sizes = vec![2 * unit; r - 2];
    sizes.extend([unit; 5]);
    Ok(sizes)
}

/// Complete r-partite r-graph with parts as equal as possible, larger parts first.
pub fn balanced_r_partite(r: usize, n: usize) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(Error::Contract(format!(
            "balanced r-partite graph needs n >= r >= 2, got r = {r}, n = {n}"
        )));
    }
    let sizes: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    let base = Hypergraph::new(r, r, [VertexSet::prefix(r)])?;
    blowup(&BlowupSpec::new(base, sizes)?)
}

/// The expansion `H_{ℓ+1}^r`: core vertices `0..=ℓ`, then for each core pair
/// (lexicographic order) a private block of `r-2` padding vertices.
pub fn expansion_of_clique(r: usize, ell: usize) -> Result<Hypergraph> {
    if r < 3 || ell < r {
        return Err(Error::Contract(format!(
            "expansion needs ell >= r >= 3, got r = {r}, ell = {ell}"
        )));
    }
    let pairs = (ell + 1) * ell / 2;
    let n = ell + 1 + (r - 2) * pairs;
    check_capacity(n)?;
    let mut next = ell + 1;
    let mut edges = Vec::with_capacity(pairs);
    for i in 0..=ell {
        for j in i + 1..=ell {
            let pad: VertexSet = (next..next + r - 2).collect();
            next += r - 2;
            edges.push(pad.with(i).with(j));
        }
    }
    Hypergraph::new(r, n, edges)
}

/// `K_{2r-2}^r` on `0..2r-2` followed by `n - (2r-2)` isolated vertices.
pub fn clique_plus_isolated(r: usize, n: usize) -> Result<Hypergraph> {
    if r < 2 || n < 2 * r - 2 {
        return Err(Error::Contract(format!("need n >= 2r-2, got r = {r}, n = {n}")));
    }
    check_capacity(n)?;
    let m = 2 * r - 2;
    Hypergraph::new(r, n, VertexSet::prefix(m).subsets_of_size(r))
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Capacity(format!(
            "n = {n} exceeds the {MAX_VERTICES}-vertex limit"
        )));
    }
    Ok(())
}
