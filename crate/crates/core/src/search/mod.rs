//! Pruned exhaustive enumeration of labelled r-graphs on `n <= 16`
//! vertices under forbidden-pattern and positive-codegree constraints.
//!
//! The `C(n, r)` edge slots are decided include/exclude depth first in colex
//! order. Two cuts are applied during descent:
//!
//! * an edge whose inclusion completes a forbidden pattern is never included;
//! * an `(r-1)`-set already in the partial shadow must still be able to reach
//!   the required codegree: current neighbors plus undecided slots containing
//!   it is an upper bound on its final neighborhood.
//!
//! Every leaf is re-checked from scratch before it is reported, so the cuts
//! only affect speed. Solutions are deduplicated by canonical form.

mod canonical;
mod drivers;
mod engine;
mod random;

pub use canonical::{canonical_form, canonical_representative, CanonicalForm, MAX_CANONICAL_VERTICES};
pub use drivers::{
    copositive_turan, expansion_admissible, find_counterexamples, predicted_counterexamples, verify_theorem_suite,
    CoexOutcome, CoexValue, ExpansionRow, Observation, Verdict, VerifyOptions, VerifyReport, VerifyRow,
};
pub use engine::enumerate;
pub use random::random_pattern_free;

pub(crate) use canonical::canonical_labeling;

use std::time::Duration;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Threshold};

/// Largest vertex count the engine accepts.
pub const MAX_SEARCH_VERTICES: usize = 16;

/// Default node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Forbidden {
    GeneralizedTriangle,
    /// The expansion `H_{ℓ+1}^r` with the given `ℓ`.
    Expansion(usize),
    Pattern(Hypergraph),
}

impl Forbidden {
    pub fn describe(&self) -> String {
        match self {
            Forbidden::GeneralizedTriangle => "generalized-triangle".into(),
            Forbidden::Expansion(ell) => format!("expansion({ell})"),
            Forbidden::Pattern(p) => format!("pattern(r={}, n={}, m={})", p.r(), p.n(), p.edge_count()),
        }
    }
}

/// Required minimum positive codegree of a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodegreeBound {
    /// δ⁺ strictly above a rational bound.
    Exceeds(Threshold),
    /// δ⁺ at least an integer.
    AtLeast(usize),
}

impl CodegreeBound {
    /// Smallest integer codegree meeting the bound.
    pub fn required(&self) -> usize {
        match *self {
            CodegreeBound::Exceeds(t) => t.least_integer_above() as usize,
            CodegreeBound::AtLeast(k) => k,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CodegreeBound::Exceeds(t) => format!("> {t}"),
            CodegreeBound::AtLeast(k) => format!(">= {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_duration: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: DEFAULT_NODE_BUDGET,
            max_duration: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProblem {
    pub r: usize,
    pub n: usize,
    pub bound: CodegreeBound,
    pub forbidden: Vec<Forbidden>,
    pub require_not_r_partite: bool,
    pub budget: Budget,
}

impl SearchProblem {
    pub fn new(r: usize, n: usize, bound: CodegreeBound) -> Self {
        SearchProblem {
            r,
            n,
            bound,
            forbidden: Vec::new(),
            require_not_r_partite: false,
            budget: Budget::default(),
        }
    }

    pub fn forbid(mut self, f: Forbidden) -> Self {
        self.forbidden.push(f);
        self
    }

    pub fn not_r_partite(mut self) -> Self {
        self.require_not_r_partite = true;
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_SEARCH_VERTICES {
            return Err(Error::Capacity(format!(
                "search supports n <= {MAX_SEARCH_VERTICES}, got n = {}",
                self.n
            )));
        }
        if self.r < 3 {
            return Err(Error::Contract(format!("search needs r >= 3, got {}", self.r)));
        }
        for f in &self.forbidden {
            match f {
                Forbidden::Pattern(p) if p.r() != self.r => {
                    return Err(Error::Contract(format!(
                        "forbidden pattern is {}-uniform, search is {}-uniform",
                        p.r(),
                        self.r
                    )))
                }
                Forbidden::Expansion(ell) if *ell < self.r => {
                    return Err(Error::Contract(format!("expansion needs ell >= r, got ell = {ell}")))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// Engine knobs that do not change the solution set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    /// Depth (in slots) at which the decision tree is cut into subtrees.
    pub split_depth: usize,
    /// Disables both descent cuts when false; leaves are still checked exactly.
    pub pruning: bool,
    /// Asserts at every leaf that each recorded feasibility bound held.
    pub audit_bounds: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            split_depth: 6,
            pruning: true,
            audit_bounds: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    ExhaustiveComplete,
    BudgetExhausted,
    /// The visitor asked the search to stop.
    Stopped,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::ExhaustiveComplete => "exhaustive-complete",
            SearchStatus::BudgetExhausted => "budget-exhausted",
            SearchStatus::Stopped => "stopped",
        }
    }
}

/// One isomorphism class of solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub canonical: CanonicalForm,
    /// The canonical relabeling.
    pub representative: Hypergraph,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub status: SearchStatus,
    pub nodes_explored: u64,
    /// Labelled solutions visited.
    pub solutions: u64,
    /// Sorted by canonical form.
    pub witnesses: Vec<Witness>,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn is_complete(&self) -> bool {
        self.status == SearchStatus::ExhaustiveComplete
    }

    pub fn canonical_forms(&self) -> std::collections::BTreeSet<CanonicalForm> {
        self.witnesses.iter().map(|w| w.canonical.clone()).collect()
    }
}
