use std::collections::BTreeMap;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::{
    canonical_labeling, CanonicalForm, Forbidden, SearchOptions, SearchProblem, SearchReport, SearchStatus, Witness,
};
use crate::error::Result;
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::partition::find_r_partition;
use crate::patterns::{self, HostView, Matcher};

const WORKER_STACK: usize = 256 << 20;
const FLUSH_EVERY: u64 = 1 << 12;

/// Runs the search. `visitor` sees every labelled solution (possibly from
/// several threads) and may stop the search by returning `Break`.
pub fn enumerate(
    problem: &SearchProblem,
    options: &SearchOptions,
    visitor: &(dyn Fn(&Hypergraph) -> ControlFlow<()> + Sync),
) -> Result<SearchReport> {
    problem.validate()?;
    let start = Instant::now();
    let (r, n) = (problem.r, problem.n);

    let slots: Vec<u32> = if n >= r {
        VertexSet::prefix(n)
            .subsets_of_size(r)
            .into_iter()
            .map(|s| s.bits() as u32)
            .collect()
    } else {
        Vec::new()
    };
    let faces: Vec<Vec<u32>> = slots
        .iter()
        .map(|&e| bits(e).map(|v| e & !(1 << v)).collect())
        .collect();
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }

    let mut patterns_owned: Vec<Hypergraph> = Vec::new();
    for f in &problem.forbidden {
        match f {
            Forbidden::GeneralizedTriangle => {}
            Forbidden::Expansion(ell) => patterns_owned.push(crate::constructions::expansion_of_clique(r, *ell)?),
            Forbidden::Pattern(p) => patterns_owned.push(p.clone()),
        }
    }
    let matchers: Vec<Matcher> = patterns_owned.iter().filter(|p| p.n() <= n).map(Matcher::new).collect();

    let plan = Plan {
        problem,
        options,
        r,
        n,
        need: problem.bound.required(),
        slots,
        faces,
        by_size,
        triangle: problem.forbidden.contains(&Forbidden::GeneralizedTriangle),
        matchers,
        visitor,
        control: Control {
            nodes: AtomicU64::new(0),
            solutions: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            exhausted: AtomicBool::new(false),
            start,
        },
    };

    let split = options.split_depth.min(plan.slots.len());
    let (frontier, mut witnesses) = std::thread::scope(|scope| {
        std::thread::Builder::new()
            .stack_size(WORKER_STACK)
            .spawn_scoped(scope, || {
                let mut state = State::new(&plan);
                state.frontier_depth = Some(split);
                state.dfs(0);
                state.flush();
                (std::mem::take(&mut state.frontier), state.witnesses)
            })
            .expect("spawn search thread")
            .join()
            .expect("search thread panicked")
    });

    let next = AtomicUsize::new(0);
    let merged = Mutex::new(BTreeMap::new());
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..options.workers.max(1))
            .map(|_| {
                std::thread::Builder::new()
                    .stack_size(WORKER_STACK)
                    .spawn_scoped(scope, || {
                        let mut state = State::new(&plan);
                        loop {
                            let k = next.fetch_add(1, Ordering::Relaxed);
                            if k >= frontier.len() || plan.control.halted() {
                                break;
                            }
                            state.run_subtree(&frontier[k]);
                        }
                        state.flush();
                        merged.lock().unwrap().append(&mut state.witnesses);
                    })
                    .expect("spawn search thread")
            })
            .collect();
        for h in handles {
            h.join().expect("search thread panicked");
        }
    });
    witnesses.append(&mut merged.into_inner().unwrap());

    let status = if plan.control.exhausted.load(Ordering::Relaxed) {
        SearchStatus::BudgetExhausted
    } else if plan.control.stop.load(Ordering::Relaxed) {
        SearchStatus::Stopped
    } else {
        SearchStatus::ExhaustiveComplete
    };
    Ok(SearchReport {
        status,
        nodes_explored: plan.control.nodes.load(Ordering::Relaxed),
        solutions: plan.control.solutions.load(Ordering::Relaxed),
        witnesses: witnesses
            .into_iter()
            .map(|(canonical, representative)| Witness {
                canonical,
                representative,
            })
            .collect(),
        elapsed: start.elapsed(),
    })
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

struct Control {
    nodes: AtomicU64,
    solutions: AtomicU64,
    stop: AtomicBool,
    exhausted: AtomicBool,
    start: Instant,
}

impl Control {
    fn halted(&self) -> bool {
        self.stop.load(Ordering::Relaxed) || self.exhausted.load(Ordering::Relaxed)
    }
}

struct Plan<'a> {
    problem: &'a SearchProblem,
    options: &'a SearchOptions,
    r: usize,
    n: usize,
    need: usize,
    slots: Vec<u32>,
    /// `(r-1)`-subsets of each slot.
    faces: Vec<Vec<u32>>,
    /// All masks over `n` bits grouped by popcount.
    by_size: Vec<Vec<u32>>,
    triangle: bool,
    matchers: Vec<Matcher<'a>>,
    visitor: &'a (dyn Fn(&Hypergraph) -> ControlFlow<()> + Sync),
    control: Control,
}

struct State<'p, 'a> {
    plan: &'p Plan<'a>,
    present: Vec<bool>,
    /// Current neighborhood size of each `(r-1)`-set.
    cur: Vec<u8>,
    /// Undecided slots containing each `(r-1)`-set.
    rem: Vec<u8>,
    degree: Vec<usize>,
    included: Vec<u32>,
    path: Vec<bool>,
    frontier_depth: Option<usize>,
    frontier: Vec<Vec<bool>>,
    audit: Vec<Vec<u16>>,
    local_nodes: u64,
    halted: bool,
    witnesses: BTreeMap<CanonicalForm, Hypergraph>,
}

impl<'p, 'a> State<'p, 'a> {
    fn new(plan: &'p Plan<'a>) -> Self {
        let size = 1usize << plan.n;
        let free = plan.n.saturating_sub(plan.r - 1) as u8;
        State {
            plan,
            present: vec![false; size],
            cur: vec![0; size],
            rem: vec![free; size],
            degree: vec![0; plan.n],
            included: Vec::new(),
            path: Vec::new(),
            frontier_depth: None,
            frontier: Vec::new(),
            audit: Vec::new(),
            local_nodes: 0,
            halted: false,
            witnesses: BTreeMap::new(),
        }
    }

    fn flush(&mut self) {
        let c = &self.plan.control;
        let total = c.nodes.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
        self.local_nodes = 0;
        if total > self.plan.problem.budget.max_nodes {
            c.exhausted.store(true, Ordering::Relaxed);
        }
        if let Some(limit) = self.plan.problem.budget.max_duration {
            if c.start.elapsed() > limit {
                c.exhausted.store(true, Ordering::Relaxed);
            }
        }
        self.halted = c.halted();
    }

    fn run_subtree(&mut self, decisions: &[bool]) {
        for (i, &take) in decisions.iter().enumerate() {
            if take {
                self.include(i);
            } else {
                self.exclude(i);
            }
        }
        self.path = decisions.to_vec();
        self.dfs(decisions.len());
        for (i, &take) in decisions.iter().enumerate().rev() {
            if take {
                self.undo_include(i);
            } else {
                self.undo_exclude(i);
            }
        }
    }

    fn include(&mut self, i: usize) {
        let e = self.plan.slots[i];
        self.present[e as usize] = true;
        for &f in &self.plan.faces[i] {
            self.cur[f as usize] += 1;
            self.rem[f as usize] -= 1;
        }
        for v in bits(e) {
            self.degree[v] += 1;
        }
        self.included.push(e);
    }

    fn undo_include(&mut self, i: usize) {
        let e = self.plan.slots[i];
        self.present[e as usize] = false;
        for &f in &self.plan.faces[i] {
            self.cur[f as usize] -= 1;
            self.rem[f as usize] += 1;
        }
        for v in bits(e) {
            self.degree[v] -= 1;
        }
        self.included.pop();
    }

    fn exclude(&mut self, i: usize) {
        for &f in &self.plan.faces[i] {
            self.rem[f as usize] -= 1;
        }
    }

    fn undo_exclude(&mut self, i: usize) {
        for &f in &self.plan.faces[i] {
            self.rem[f as usize] += 1;
        }
    }

    fn dfs(&mut self, i: usize) {
        if self.halted {
            return;
        }
        if self.frontier_depth == Some(i) && i < self.plan.slots.len() {
            self.frontier.push(self.path.clone());
            return;
        }
        self.local_nodes += 1;
        if self.local_nodes >= FLUSH_EVERY {
            self.flush();
            if self.halted {
                return;
            }
        }
        if self.plan.options.audit_bounds {
            let bound = self
                .cur
                .iter()
                .zip(&self.rem)
                .map(|(&c, &r)| c as u16 + r as u16)
                .collect();
            self.audit.push(bound);
        }
        if i == self.plan.slots.len() {
            self.leaf();
        } else {
            self.branch(i);
        }
        if self.plan.options.audit_bounds {
            self.audit.pop();
        }
    }

    fn branch(&mut self, i: usize) {
        let pruning = self.plan.options.pruning;
        let need = self.plan.need;
        let e = self.plan.slots[i];

        self.include(i);
        let ok = !pruning
            || (self.plan.faces[i]
                .iter()
                .all(|&f| self.cur[f as usize] as usize + self.rem[f as usize] as usize >= need)
                && !self.completes_forbidden(e));
        if ok {
            self.path.push(true);
            self.dfs(i + 1);
            self.path.pop();
        }
        self.undo_include(i);

        self.exclude(i);
        let ok = !pruning
            || self.plan.faces[i].iter().all(|&f| {
                let c = self.cur[f as usize] as usize;
                c == 0 || c + self.rem[f as usize] as usize >= need
            });
        if ok {
            self.path.push(false);
            self.dfs(i + 1);
            self.path.pop();
        }
        self.undo_exclude(i);
    }

    /// Does the just-included edge `e` lie in a forbidden configuration?
    fn completes_forbidden(&self, e: u32) -> bool {
        if self.plan.triangle && self.completes_triangle(e) {
            return true;
        }
        if self.plan.matchers.is_empty() {
            return false;
        }
        let host = PartialHost {
            n: self.plan.n,
            present: &self.present,
            degree: &self.degree,
        };
        let anchor = VertexSet::from_bits(e as u128);
        self.plan
            .matchers
            .iter()
            .any(|m| m.search_through(&host, anchor).is_some())
    }

    fn completes_triangle(&self, e: u32) -> bool {
        let r = self.plan.r;
        let all = (1u32 << self.plan.n) - 1;
        let outside = all & !e;
        let present = &self.present;
        // e shares an (r-1)-core with another edge
        for x in bits(e) {
            let core = e & !(1 << x);
            for y in bits(outside) {
                if !present[(core | 1 << y) as usize] {
                    continue;
                }
                let free = outside & !(1 << y);
                let tips = 1 << x | 1 << y;
                if self.plan.by_size[r - 2]
                    .iter()
                    .any(|&s| s & !free == 0 && present[(s | tips) as usize])
                {
                    return true;
                }
            }
        }
        // e is the edge through both tips
        let tips: Vec<usize> = bits(e).collect();
        for &k in &self.plan.by_size[r - 1] {
            if k & !outside != 0 {
                continue;
            }
            let hits = tips.iter().filter(|&&a| present[(k | 1 << a) as usize]).count();
            if hits >= 2 {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self) {
        if self.plan.options.audit_bounds {
            for bound in &self.audit {
                for (f, &c) in self.cur.iter().enumerate() {
                    assert!(
                        c as u16 <= bound[f],
                        "feasibility bound violated for set {f:#b}: final {c} > bound {}",
                        bound[f]
                    );
                }
            }
        }
        if self.included.is_empty() {
            return;
        }
        let h = Hypergraph::new(
            self.plan.r,
            self.plan.n,
            self.included.iter().map(|&e| VertexSet::from_bits(e as u128)),
        )
        .expect("slots are valid edges");
        if !accepts(self.plan.problem, self.plan.need, &h) {
            return;
        }
        self.plan.control.solutions.fetch_add(1, Ordering::Relaxed);
        if (self.plan.visitor)(&h).is_break() {
            self.plan.control.stop.store(true, Ordering::Relaxed);
            self.halted = true;
        }
        let (form, _) = canonical_labeling(&h);
        self.witnesses.entry(form).or_insert_with_key(|f| f.to_hypergraph());
    }
}

/// Exact re-check of every constraint on a complete hypergraph.
fn accepts(problem: &SearchProblem, need: usize, h: &Hypergraph) -> bool {
    if h.edge_count() == 0 || h.min_positive_codegree() < need {
        return false;
    }
    for f in &problem.forbidden {
        let hit = match f {
            Forbidden::GeneralizedTriangle => patterns::contains_generalized_triangle(h).is_some(),
            Forbidden::Expansion(ell) => patterns::contains_expansion(h, *ell).unwrap_or(true),
            Forbidden::Pattern(p) => patterns::find_embedding(h, p).map(|e| e.is_some()).unwrap_or(true),
        };
        if hit {
            return false;
        }
    }
    !(problem.require_not_r_partite && find_r_partition(h).is_some())
}

struct PartialHost<'s> {
    n: usize,
    present: &'s [bool],
    degree: &'s [usize],
}

impl HostView for PartialHost<'_> {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn has_edge(&self, e: VertexSet) -> bool {
        self.present[e.bits() as usize]
    }

    fn vertex_degree(&self, v: usize) -> usize {
        self.degree[v]
    }
}
