//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use codegree::constructions::{
    balanced_r_partite, blowup, clique_plus_isolated, complete, expansion_of_clique, generalized_triangle, wheel5,
    wheel5_tight_sizes, BlowupSpec,
};
use codegree::partition::find_r_partition;
use codegree::patterns::{contains_clique_in_ith_shadow, contains_generalized_triangle, find_embedding};
use codegree::search::{
    canonical_form, copositive_turan, enumerate, find_counterexamples, random_pattern_free, Budget, CodegreeBound,
    CoexValue, Forbidden, SearchOptions, SearchProblem, SearchStatus,
};
use codegree::{Hypergraph, Threshold};
use common::{all_r_sets, embeds, random_plain, Edge, Plain};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_REMARK_FIXTURES: Duration = Duration::from_secs(1);
const LIMIT_TIGHTNESS: Duration = Duration::from_secs(5);
const LIMIT_COUNTEREXAMPLES: Duration = Duration::from_secs(60);
const LIMIT_BOUNDARY: Duration = Duration::from_secs(30 * 60);
const LIMIT_COEX: Duration = Duration::from_secs(35 * 60);
const LIMIT_PROPERTY_SUITE: Duration = Duration::from_secs(120);
const LIMIT_EXPANSION_SUITE: Duration = Duration::from_secs(60);
const LIMIT_ORACLES: Duration = Duration::from_secs(5 * 60);

const PROPERTY_SAMPLES: usize = 10_000;
const PLANTED_SAMPLES: usize = 1_000;
const FUZZED_PROBLEMS: usize = 20;
const ORACLE_PAIRS: usize = 200;
const BLOWUP_FIXTURES: usize = 400;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

/// `k > 2n/(2r+1)` by cross-multiplication.
fn exceeds(k: usize, r: usize, n: usize) -> bool {
    k * (2 * r + 1) > 2 * n
}

/// Restricts to the vertices that lie in some edge, relabeled in order.
fn support(p: &Plain) -> Plain {
    let used: Vec<usize> = p
        .edges
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index = |v: usize| used.binary_search(&v).unwrap();
    Plain::new(
        p.r,
        used.len(),
        p.edges.iter().map(|e| e.iter().map(|&v| index(v)).collect()),
    )
}

fn remark_fixtures() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for (r, ns) in [(3, 4..=6), (4, 6..=13)] {
        for n in ns {
            let h = clique_plus_isolated(r, n).map_err(|e| e.to_string())?;
            let p = Plain::of(&h);
            let c = p.min_positive_codegree();
            ensure(h.n() == n, || format!("r={r} n={n}: wrong order"))?;
            ensure(c == r - 1 && h.min_positive_codegree() == c, || {
                format!("r={r} n={n}: codegree {c}")
            })?;
            ensure(exceeds(c, r, n), || {
                format!("r={r} n={n}: {c}·{} <= {}", 2 * r + 1, 2 * n)
            })?;
            ensure(
                Threshold::positive_codegree_bound(r, n).is_exceeded_by(c as u64),
                || format!("r={r} n={n}: threshold"),
            )?;
            ensure(!p.has_triangle() && contains_generalized_triangle(&h).is_none(), || {
                format!("r={r} n={n}: has T_r")
            })?;
            ensure(!support(&p).is_r_partite() && find_r_partition(&h).is_none(), || {
                format!("r={r} n={n}: r-partite")
            })?;
            checked += 1;
        }
    }
    let t = within(start, LIMIT_REMARK_FIXTURES)?;
    Ok(format!("{checked} fixtures, {t:.2?}"))
}

fn tightness() -> Check {
    let start = Instant::now();
    let mut out = Vec::new();
    for (r, n) in [(3, 7), (3, 14), (4, 9)] {
        let sizes = wheel5_tight_sizes(r, n).map_err(|e| e.to_string())?;
        let spec = BlowupSpec::new(wheel5(r).map_err(|e| e.to_string())?, sizes).map_err(|e| e.to_string())?;
        let h = blowup(&spec).map_err(|e| e.to_string())?;
        let p = Plain::of(&h);
        let c = p.min_positive_codegree();
        ensure(h.n() == n, || format!("({r},{n}): {} vertices", h.n()))?;
        ensure(c * (2 * r + 1) == 2 * n && h.min_positive_codegree() == c, || {
            format!("({r},{n}): codegree {c}")
        })?;
        ensure(!p.has_triangle() && contains_generalized_triangle(&h).is_none(), || {
            format!("({r},{n}): has T_r")
        })?;
        ensure(!p.is_r_partite() && find_r_partition(&h).is_none(), || {
            format!("({r},{n}): r-partite")
        })?;
        out.push(format!("({r},{n}) δ⁺={c}"));
    }
    let t = within(start, LIMIT_TIGHTNESS)?;
    Ok(format!("{}, {t:.2?}", out.join(" ")))
}

fn counterexamples() -> Check {
    let start = Instant::now();
    let rep = find_counterexamples(3, 6, Budget::default(), &SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(rep.status == SearchStatus::ExhaustiveComplete, || {
        format!("status {}", rep.status.as_str())
    })?;
    ensure(!rep.witnesses.is_empty(), || "no witnesses".into())?;
    let target = canonical_form(&clique_plus_isolated(3, 6).unwrap()).unwrap();
    ensure(rep.canonical_forms().contains(&target), || {
        "padded K_4^3 missing".into()
    })?;
    for w in &rep.witnesses {
        let p = Plain::of(&w.representative);
        ensure(
            !p.has_triangle() && !p.is_r_partite() && exceeds(p.min_positive_codegree(), 3, 6),
            || format!("witness {} fails the oracle", w.canonical),
        )?;
    }
    let t = within(start, LIMIT_COUNTEREXAMPLES)?;
    Ok(format!(
        "{} isomorphism class(es), {} labelled, {} nodes, {t:.2?}",
        rep.witnesses.len(),
        rep.solutions,
        rep.nodes_explored
    ))
}

fn boundary() -> Check {
    let start = Instant::now();
    let problem = SearchProblem::new(3, 7, CodegreeBound::AtLeast(3)).forbid(Forbidden::GeneralizedTriangle);
    let rep =
        enumerate(&problem, &SearchOptions::default(), &|_| ControlFlow::Continue(())).map_err(|e| e.to_string())?;
    ensure(rep.status == SearchStatus::ExhaustiveComplete, || {
        format!("status {}", rep.status.as_str())
    })?;
    ensure(rep.solutions == 0, || format!("{} solutions", rep.solutions))?;
    let t = within(start, LIMIT_BOUNDARY)?;
    Ok(format!(
        "no T_3-free 3-graph on 7 vertices with δ⁺ >= 3; {} nodes, {t:.2?}",
        rep.nodes_explored
    ))
}

fn coex() -> Check {
    let start = Instant::now();
    let mut out = Vec::new();
    for n in [6, 7] {
        let res = copositive_turan(3, n, Budget::default(), &SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(res.value == CoexValue::Exact(2), || format!("n={n}: {:?}", res.value))?;
        let w = res.witness.ok_or_else(|| format!("n={n}: no witness"))?;
        let p = Plain::of(&w);
        ensure(p.min_positive_codegree() == 2, || {
            format!("n={n}: witness codegree {}", p.min_positive_codegree())
        })?;
        ensure(!p.has_triangle(), || format!("n={n}: witness contains T_3"))?;
        out.push(format!("n={n}: 2"));
    }
    let t = within(start, LIMIT_COEX)?;
    Ok(format!("{}, {t:.2?}", out.join(", ")))
}

fn fixtures() -> Vec<Hypergraph> {
    let mut v = Vec::new();
    for r in 3..=4 {
        v.push(generalized_triangle(r).unwrap());
        v.push(wheel5(r).unwrap());
        v.push(complete(r, 2 * r).unwrap());
        v.push(expansion_of_clique(r, r).unwrap());
        for n in r..=12 {
            v.push(balanced_r_partite(r, n).unwrap());
        }
        for n in 2 * r - 2..=12 {
            v.push(clique_plus_isolated(r, n).unwrap());
        }
    }
    for (r, n) in [(3, 7), (3, 14), (4, 9), (4, 18)] {
        let spec = BlowupSpec::new(wheel5(r).unwrap(), wheel5_tight_sizes(r, n).unwrap()).unwrap();
        v.push(blowup(&spec).unwrap());
    }
    // random blowups of W_5^r and of a single edge; most have δ⁺ >= r
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_b10b);
    for i in 0..BLOWUP_FIXTURES {
        let edge_r = 3 + (i / 4) % 2;
        let (base, sizes) = match i % 4 {
            0 => (wheel5(3).unwrap(), 1..=4),
            1 => (wheel5(4).unwrap(), 1..=3),
            2 => (wheel5(3).unwrap(), 3..=4),
            _ => (complete(edge_r, edge_r).unwrap(), edge_r..=edge_r + 2),
        };
        let sizes = (0..base.n()).map(|_| rng.gen_range(sizes.clone())).collect();
        v.push(blowup(&BlowupSpec::new(base, sizes).unwrap()).unwrap());
    }
    v
}

/// Union identity for every vertex, and for qualifying graphs the Σ_r and
/// co-neighborhood conditions. Returns whether `p` qualified.
fn section_two_checks(p: &Plain) -> Result<bool, String> {
    let shadow = p.shadow();
    for v in 0..p.n {
        let union: BTreeSet<usize> = shadow
            .iter()
            .filter(|s| s.contains(&v))
            .flat_map(|s| p.nbhd(s))
            .collect();
        ensure(union == p.vertex_nbhd(v), || {
            format!("union identity fails at v={v} in {:?}", p.edges)
        })?;
    }
    let qualifies = !p.edges.is_empty() && p.min_positive_codegree() >= p.r && !p.has_triangle();
    if !qualifies {
        return Ok(false);
    }
    ensure(!p.has_sigma(), || format!("Σ_r member in qualifying {:?}", p.edges))?;
    for e in &p.edges {
        let sets: Vec<BTreeSet<usize>> = e
            .iter()
            .map(|u| p.nbhd(&e.iter().copied().filter(|x| x != u).collect::<Vec<_>>()))
            .collect();
        for (i, u) in e.iter().enumerate() {
            ensure(sets[i].is_disjoint(&p.vertex_nbhd(*u)), || {
                format!("N(e-u) meets N(u) at {e:?}")
            })?;
            ensure(p.is_independent(&sets[i]), || {
                format!("N(e-u) not independent at {e:?}")
            })?;
            for j in i + 1..e.len() {
                ensure(sets[i].is_disjoint(&sets[j]), || {
                    format!("co-neighborhoods overlap at {e:?}")
                })?;
            }
        }
    }
    Ok(true)
}

fn property_suite() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let (mut total, mut qualifying) = (0, 0);
    for i in 0..PROPERTY_SAMPLES {
        let r = 3 + i % 2;
        let n = rng.gen_range(r + 1..=10);
        let slots = all_r_sets(r, n).len();
        let target = if rng.gen_bool(0.5) {
            slots
        } else {
            rng.gen_range(1..=slots)
        };
        let h = random_pattern_free(r, n, target, &[Forbidden::GeneralizedTriangle], rng.gen())
            .map_err(|e| e.to_string())?;
        qualifying += usize::from(section_two_checks(&Plain::of(&h))?);
        total += 1;
    }
    for h in fixtures() {
        qualifying += usize::from(section_two_checks(&Plain::of(&h))?);
        total += 1;
    }
    let t = within(start, LIMIT_PROPERTY_SUITE)?;
    Ok(format!(
        "{total} hypergraphs, {qualifying} with T_r-free and δ⁺ >= r, 0 violations, {t:.2?}"
    ))
}

fn has_k4_in_shadow(p: &Plain) -> bool {
    let mut adj = vec![BTreeSet::new(); p.n];
    for e in &p.edges {
        for &a in e {
            for &b in e {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    all_r_sets(4, p.n)
        .iter()
        .any(|q| q.iter().all(|&a| q.iter().all(|&b| a == b || adj[a].contains(&b))))
}

fn expansion_suite() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let pattern = expansion_of_clique(3, 3).map_err(|e| e.to_string())?;
    let bound = 3;
    let (mut via_clique, mut via_codegree) = (0, 0);
    for _ in 0..PLANTED_SAMPLES {
        let n = rng.gen_range(pattern.n()..=14);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let p_extra = rng.gen_range(0.0..0.35);
        let mut edges: BTreeSet<Edge> = random_plain(&mut rng, 3, n, p_extra).edges;
        for e in pattern.edges() {
            let mut img: Edge = e.iter().map(|v| perm[v]).collect();
            img.sort_unstable();
            edges.insert(img);
        }
        let p = Plain { r: 3, n, edges };
        let h = p.to_hypergraph();
        let clique = has_k4_in_shadow(&p);
        ensure(clique == contains_clique_in_ith_shadow(&h, 4, 1).unwrap(), || {
            "shadow clique detectors disagree".into()
        })?;
        let low = p.min_positive_codegree() <= bound;
        ensure(clique || low, || format!("violation on {:?}", p.edges))?;
        via_clique += usize::from(clique);
        via_codegree += usize::from(low);
    }
    let t = within(start, LIMIT_EXPANSION_SUITE)?;
    Ok(format!(
        "{PLANTED_SAMPLES} planted supergraphs, K_4 in shadow: {via_clique}, δ⁺ <= {bound}: {via_codegree}, {t:.2?}"
    ))
}

fn random_pattern(rng: &mut impl Rng) -> Plain {
    loop {
        let n = rng.gen_range(3..=5);
        let p = random_plain(rng, 3, n, 0.3);
        if !p.edges.is_empty() && p.edges.len() <= 3 {
            return support(&p);
        }
    }
}

fn oracle_search(rng: &mut impl Rng) -> Result<(), String> {
    let sets = all_r_sets(3, 5);
    for case in 0..FUZZED_PROBLEMS {
        let bound = if rng.gen_bool(0.3) {
            CodegreeBound::Exceeds(Threshold::positive_codegree_bound(3, 5))
        } else {
            CodegreeBound::AtLeast(rng.gen_range(1..=3))
        };
        let mut problem = SearchProblem::new(3, 5, bound);
        let triangle = rng.gen_bool(0.6);
        if triangle {
            problem = problem.forbid(Forbidden::GeneralizedTriangle);
        }
        let extra = rng.gen_bool(0.5).then(|| random_pattern(rng));
        if let Some(p) = &extra {
            problem = problem.forbid(Forbidden::Pattern(p.to_hypergraph()));
        }
        if rng.gen_bool(0.4) {
            problem = problem.not_r_partite();
        }

        let need = bound.required();
        let mut labelled = 0u64;
        let mut classes = BTreeSet::new();
        for mask in 1u32..1 << sets.len() {
            let p = Plain::new(
                3,
                5,
                (0..sets.len()).filter(|i| mask >> i & 1 == 1).map(|i| sets[i].clone()),
            );
            let ok = p.min_positive_codegree() >= need
                && !(triangle && p.has_triangle())
                && extra.as_ref().is_none_or(|x| !embeds(&p, x))
                && !(problem.require_not_r_partite && p.is_r_partite());
            if ok {
                labelled += 1;
                classes.insert(p.brute_canonical());
            }
        }
        let seen = Mutex::new(BTreeSet::new());
        let rep = enumerate(&problem, &SearchOptions::default(), &|h| {
            seen.lock().unwrap().insert(Plain::of(h).brute_canonical());
            ControlFlow::Continue(())
        })
        .map_err(|e| e.to_string())?;
        let from_witnesses: BTreeSet<Vec<Edge>> = rep
            .witnesses
            .iter()
            .map(|w| Plain::of(&w.representative).brute_canonical())
            .collect();
        ensure(rep.is_complete(), || format!("case {case}: incomplete"))?;
        ensure(rep.solutions == labelled, || {
            format!("case {case}: {} labelled vs oracle {labelled}", rep.solutions)
        })?;
        ensure(
            from_witnesses == classes && rep.witnesses.len() == classes.len(),
            || format!("case {case}: witness classes differ from oracle"),
        )?;
        ensure(seen.into_inner().unwrap() == classes, || {
            format!("case {case}: visited classes differ")
        })?;
    }
    Ok(())
}

fn oracle_embedding(rng: &mut impl Rng) -> Result<usize, String> {
    let mut found = 0;
    for case in 0..ORACLE_PAIRS {
        let r = if case % 4 == 3 { 4 } else { 3 };
        let (hn, density) = (rng.gen_range(r..=7), rng.gen_range(0.1..0.7));
        let host = random_plain(rng, r, hn, density);
        let pattern = loop {
            let pn = rng.gen_range(r..=r + 2);
            let p = support(&random_plain(rng, r, pn, 0.4));
            if !p.edges.is_empty() && p.edges.len() <= 4 {
                break p;
            }
        };
        let e = find_embedding(&host.to_hypergraph(), &pattern.to_hypergraph()).map_err(|e| e.to_string())?;
        ensure(e.is_some() == embeds(&host, &pattern), || {
            format!("case {case}: embedding disagrees")
        })?;
        if let Some(e) = e {
            ensure(e.is_valid(), || format!("case {case}: invalid map"))?;
            found += 1;
        }
    }
    Ok(found)
}

fn oracle_partition(rng: &mut impl Rng) -> Result<usize, String> {
    let mut partite = 0;
    for case in 0..ORACLE_PAIRS {
        let r = if case % 3 == 2 { 4 } else { 3 };
        let n = rng.gen_range(r..=8);
        let density = rng.gen_range(0.02..0.4);
        let p = random_plain(rng, r, n, density);
        let h = p.to_hypergraph();
        let cert = find_r_partition(&h);
        ensure(cert.is_some() == p.is_r_partite(), || {
            format!("case {case}: partiteness disagrees")
        })?;
        if let Some(c) = cert {
            ensure(codegree::partition::verify_partition(&h, &c).unwrap(), || {
                format!("case {case}: bad certificate")
            })?;
            partite += 1;
        }
    }
    Ok(partite)
}

fn oracle_canonical(rng: &mut impl Rng) -> Result<usize, String> {
    let mut isomorphic = 0;
    for case in 0..ORACLE_PAIRS {
        let n = rng.gen_range(4..=7);
        let density = rng.gen_range(0.1..0.6);
        let a = random_plain(rng, 3, n, density);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut b = a.relabel(&perm);
        if case % 2 == 1 {
            let slots = all_r_sets(3, n);
            let s = slots.choose(rng).unwrap();
            if !b.edges.remove(s) {
                b.edges.insert(s.clone());
            }
        }
        let same = canonical_form(&a.to_hypergraph()).unwrap() == canonical_form(&b.to_hypergraph()).unwrap();
        let iso = a.brute_canonical() == b.brute_canonical();
        ensure(same == iso, || {
            format!("case {case}: canonical form says {same}, oracle {iso}")
        })?;
        isomorphic += usize::from(iso);
    }
    Ok(isomorphic)
}

fn oracles() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    oracle_search(&mut rng).map_err(|e| format!("(a) {e}"))?;
    let embedded = oracle_embedding(&mut rng).map_err(|e| format!("(b) {e}"))?;
    let partite = oracle_partition(&mut rng).map_err(|e| format!("(c) {e}"))?;
    let iso = oracle_canonical(&mut rng).map_err(|e| format!("(d) {e}"))?;
    let t = within(start, LIMIT_ORACLES)?;
    Ok(format!(
        "(a) {FUZZED_PROBLEMS} problems, (b) {embedded}/{ORACLE_PAIRS} embeddable, \
         (c) {partite}/{ORACLE_PAIRS} partite, (d) {iso}/{ORACLE_PAIRS} isomorphic, {t:.2?}"
    ))
}

fn determinism() -> Check {
    let mut sets = Vec::new();
    for workers in [1, 2, 4] {
        let opts = SearchOptions {
            workers,
            ..SearchOptions::default()
        };
        let rep = find_counterexamples(3, 6, Budget::default(), &opts).map_err(|e| e.to_string())?;
        ensure(rep.is_complete(), || format!("workers={workers}: incomplete"))?;
        sets.push(rep.canonical_forms());
    }
    ensure(sets.windows(2).all(|w| w[0] == w[1]), || {
        "witness sets differ across worker counts".into()
    })?;

    let families: [&[&str]; 9] = [
        &["complete", "--r", "3", "--m", "7"],
        &["triangle", "--r", "5"],
        &["wheel5", "--r", "4"],
        &["wheel5-blowup", "--r", "3", "--n", "14"],
        &["balanced", "--r", "4", "--n", "11"],
        &["expansion", "--r", "3", "--ell", "4"],
        &["clique-plus-isolated", "--r", "4", "--n", "12"],
        &["random", "--r", "3", "--n", "10", "--edges", "30", "--seed", "11"],
        &["random", "--r", "4", "--n", "9", "--seed", "2"],
    ];
    let run = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_codegree"))
            .arg("gen")
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("gen {args:?} failed"))?;
        Ok(out.stdout)
    };
    for args in families {
        ensure(run(args)? == run(args)?, || format!("gen {args:?} is not byte-stable"))?;
    }
    let search = |workers: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_codegree"))
            .args(["search", "--r", "3", "--n", "6", "--no-timing", "--workers", workers])
            .output()
            .map_err(|e| e.to_string())?;
        Ok(out.stdout)
    };
    ensure(search("1")? == search("1")?, || "search JSON is not byte-stable".into())?;
    Ok(format!(
        "{} class(es) for workers 1/2/4, {} gen families byte-identical",
        sets[0].len(),
        families.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 padded clique counterexamples", remark_fixtures),
        ("2 wheel blowup tightness", tightness),
        ("3 counterexample search n=6", counterexamples),
        ("4 exhaustive boundary n=7", boundary),
        ("5 positive-codegree Turan values", coex),
        ("6 shadow and co-neighborhood properties", property_suite),
        ("7 expansion hosts", expansion_suite),
        ("8 oracle equivalences", oracles),
        ("9 determinism", determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
