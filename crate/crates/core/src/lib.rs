//! Positive-codegree extremal combinatorics for r-uniform hypergraphs.
//!
//! * [`hypergraph`]: the r-graph type, shadows, neighborhoods, links and
//!   (positive) degrees, plus the exact rational [`Threshold`].
//! * [`patterns`]: copies of the generalized triangle `T_r`, the family
//!   `Σ_r`, shadow cliques, clique expansions, and a generic matcher.
//! * [`partition`]: r-partiteness with checkable certificates.
//! * [`constructions`]: complete graphs, `T_r`, the 5-wheel and its
//!   blowups, balanced partite graphs, expansions.
//! * [`search`]: pruned exhaustive enumeration, canonical forms, the
//!   counterexample and Turán-number drivers.
//! * [`hgfile`]: the `.hg` interchange format.
//! * [`invariants`]: identities every hypergraph satisfies, for self-checks.
//!
//! The minimum positive codegree of an edgeless hypergraph is taken to be 0.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod hgfile;
pub mod hypergraph;
pub mod invariants;
pub mod partition;
pub mod patterns;
pub mod search;

pub use error::{Error, Result};
pub use hypergraph::{DegreeStats, Hypergraph, ShadowIndex, Threshold, VertexSet};
