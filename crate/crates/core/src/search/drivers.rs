//! Drivers on top of the engine: counterexample search for the codegree
//! partiteness theorem, the exact positive-codegree Turán number, and the
//! prediction table used by `verify`.

use std::ops::ControlFlow;
use std::sync::Mutex;
use std::time::Duration;

use super::{enumerate, Budget, CodegreeBound, Forbidden, SearchOptions, SearchProblem, SearchReport, SearchStatus};
use crate::error::Result;
use crate::hypergraph::{Hypergraph, Threshold};

/// T_r-free, non-r-partite r-graphs on `n` vertices with δ⁺ > 2n/(2r+1).
pub fn find_counterexamples(r: usize, n: usize, budget: Budget, options: &SearchOptions) -> Result<SearchReport> {
    let problem = counterexample_problem(r, n, Forbidden::GeneralizedTriangle, budget);
    enumerate(&problem, options, &|_| ControlFlow::Continue(()))
}

fn counterexample_problem(r: usize, n: usize, forbidden: Forbidden, budget: Budget) -> SearchProblem {
    SearchProblem::new(r, n, CodegreeBound::Exceeds(Threshold::positive_codegree_bound(r, n)))
        .forbid(forbidden)
        .not_r_partite()
        .with_budget(budget)
}

/// Counterexamples exist exactly for `r+1 <= n < (r-1)(2r+1)/2`: the complete
/// r-graph on `min(n, 2r-2)` vertices, padded with isolated vertices, is one.
/// At `n <= r` there is at most one edge, and for larger `n` the codegree
/// bound forces r-partiteness.
pub fn predicted_counterexamples(r: usize, n: usize) -> bool {
    n > r && 2 * n < (r - 1) * (2 * r + 1)
}

/// `n >= (2r+1)(r-2)C(ℓ,2)/2`, the range where the expansion analogue applies.
pub fn expansion_admissible(r: usize, ell: usize, n: usize) -> bool {
    4 * n >= (2 * r + 1) * (r - 2) * ell * (ell.saturating_sub(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoexValue {
    Exact(usize),
    /// Some search step ran out of budget; the value lies in `lower..=upper`.
    Bracket {
        lower: usize,
        upper: usize,
    },
}

#[derive(Clone, Debug)]
pub struct CoexOutcome {
    pub value: CoexValue,
    /// A T_r-free witness attaining the lower end, when one exists.
    pub witness: Option<Hypergraph>,
    /// `(k, report)` for every "δ⁺ >= k" search run, highest k first.
    pub steps: Vec<(usize, SearchReport)>,
}

/// Maximum of δ⁺ over nonempty T_r-free r-graphs on `n` vertices, found by
/// testing δ⁺ >= k for k = n-r+1 down to 1 and stopping at the first
/// satisfiable k.
pub fn copositive_turan(r: usize, n: usize, budget: Budget, options: &SearchOptions) -> Result<CoexOutcome> {
    SearchProblem::new(r, n, CodegreeBound::AtLeast(1)).validate()?;
    let mut steps = Vec::new();
    if n < r {
        return Ok(CoexOutcome {
            value: CoexValue::Exact(0),
            witness: None,
            steps,
        });
    }
    let mut upper: Option<usize> = None;
    for k in (1..=n - r + 1).rev() {
        let problem = SearchProblem::new(r, n, CodegreeBound::AtLeast(k))
            .forbid(Forbidden::GeneralizedTriangle)
            .with_budget(budget);
        let found: Mutex<Option<Hypergraph>> = Mutex::new(None);
        let report = enumerate(&problem, options, &|h| {
            let mut slot = found.lock().unwrap();
            if slot.is_none() {
                *slot = Some(h.clone());
            }
            ControlFlow::Break(())
        })?;
        let status = report.status;
        steps.push((k, report));
        if let Some(witness) = found.into_inner().unwrap() {
            let value = match upper {
                None => CoexValue::Exact(k),
                Some(u) => CoexValue::Bracket { lower: k, upper: u },
            };
            return Ok(CoexOutcome {
                value,
                witness: Some(witness),
                steps,
            });
        }
        if status == SearchStatus::BudgetExhausted && upper.is_none() {
            upper = Some(k);
        }
    }
    let value = match upper {
        None => CoexValue::Exact(0),
        Some(u) => CoexValue::Bracket { lower: 0, upper: u },
    };
    Ok(CoexOutcome {
        value,
        witness: None,
        steps,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Observation {
    /// Number of isomorphism classes found.
    Found(usize),
    NoneFound,
    Inconclusive,
}

impl Observation {
    fn of(report: &SearchReport) -> Self {
        match (report.status, report.witnesses.len()) {
            (_, k) if k > 0 => Observation::Found(k),
            (SearchStatus::ExhaustiveComplete, _) => Observation::NoneFound,
            _ => Observation::Inconclusive,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Observation::Found(k) => format!(
                "counterexamples-found ({k} {})",
                if *k == 1 { "class" } else { "classes" }
            ),
            Observation::NoneFound => "none".into(),
            Observation::Inconclusive => "inconclusive (budget exhausted)".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    /// Below the range where a prediction applies; recorded, never a refutation.
    PropertyOnly,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::PropertyOnly => "PROPERTY-ONLY",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExpansionRow {
    pub ell: usize,
    pub admissible: bool,
    pub observation: Observation,
    pub verdict: Verdict,
    pub nodes_explored: u64,
}

#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub n: usize,
    pub threshold: Threshold,
    pub predicted_counterexamples: bool,
    pub observation: Observation,
    pub verdict: Verdict,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub expansion: Option<ExpansionRow>,
}

impl VerifyRow {
    /// Why the prediction for this row is what it is.
    pub fn rationale(&self, r: usize) -> String {
        let n = self.n;
        if n <= r {
            format!("n = {n} <= r: at most one edge fits, and a single edge is r-partite")
        } else if self.predicted_counterexamples {
            let m = n.min(2 * r - 2);
            format!(
                "r+1 <= n < (r-1)(2r+1)/2: K_{m}^{r} plus {} isolated vertices is T_{r}-free, not {r}-partite, \
                 with codegree {} > {}",
                n - m,
                m - r + 1,
                self.threshold
            )
        } else {
            format!(
                "n >= (r-1)(2r+1)/2: codegree > {} forces {r}-partiteness",
                self.threshold
            )
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub r: usize,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn overall(&self) -> Verdict {
        let verdicts = self
            .rows
            .iter()
            .flat_map(|row| std::iter::once(row.verdict).chain(row.expansion.as_ref().map(|e| e.verdict)));
        let mut overall = Verdict::Pass;
        for v in verdicts {
            match v {
                Verdict::Fail => return Verdict::Fail,
                Verdict::Inconclusive => overall = Verdict::Inconclusive,
                _ => {}
            }
        }
        overall
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub search: SearchOptions,
    pub budget: Budget,
    /// Also run the expansion-forbidding search with this `ℓ`.
    pub ell: Option<usize>,
}

/// Runs the counterexample search for each `n` and compares with
/// [`predicted_counterexamples`].
pub fn verify_theorem_suite(
    r: usize,
    ns: impl IntoIterator<Item = usize>,
    options: &VerifyOptions,
) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    for n in ns {
        let report = find_counterexamples(r, n, options.budget, &options.search)?;
        let predicted = predicted_counterexamples(r, n);
        let observation = Observation::of(&report);
        let verdict = match (observation, predicted) {
            (Observation::Inconclusive, _) => Verdict::Inconclusive,
            (Observation::Found(_), true) | (Observation::NoneFound, false) => Verdict::Pass,
            _ => Verdict::Fail,
        };
        let expansion = match options.ell {
            None => None,
            Some(ell) => {
                let problem = counterexample_problem(r, n, Forbidden::Expansion(ell), options.budget);
                let rep = enumerate(&problem, &options.search, &|_| ControlFlow::Continue(()))?;
                let admissible = expansion_admissible(r, ell, n);
                let observation = Observation::of(&rep);
                let verdict = match (admissible, observation) {
                    (false, _) => Verdict::PropertyOnly,
                    (true, Observation::NoneFound) => Verdict::Pass,
                    (true, Observation::Found(_)) => Verdict::Fail,
                    (true, Observation::Inconclusive) => Verdict::Inconclusive,
                };
                Some(ExpansionRow {
                    ell,
                    admissible,
                    observation,
                    verdict,
                    nodes_explored: rep.nodes_explored,
                })
            }
        };
        rows.push(VerifyRow {
            n,
            threshold: Threshold::positive_codegree_bound(r, n),
            predicted_counterexamples: predicted,
            observation,
            verdict,
            nodes_explored: report.nodes_explored,
            elapsed: report.elapsed,
            expansion,
        });
    }
    Ok(VerifyReport { r, rows })
}
