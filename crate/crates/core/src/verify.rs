//! Exhaustive verification harness.
//!
//! Each theorem is checked on every labeled graph or every complex of a given size. Instances
//! are addressed by index (edge mask for graphs, enumeration index for pure complexes) and
//! split into fixed-size chunks; chunk results are merged in index order, so a report does
//! not depend on how many workers ran it.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::ds::{encode_threshold, parse_ds, DsString};
use crate::enumerate::{graph_count, pure_complex_at, pure_complex_count, COMPLEX_LIMIT, GRAPH_LIMIT};
use crate::graph::{self, Graph};
use crate::graphical::{
    are_isomorphic, closed_neighborhood_complex, dominance_complex, find_balanced_coloring,
    flag_string_coloring, gen_independence_complex, independence_complex, is_flag, is_pencil,
    neighborhood_complex,
};
use crate::shifted::{find_shifted_labeling, is_order_ideal, is_shifted_under, padded_less_or_equal, star_d};
use crate::threshold::{certify, creation_sequence, is_threshold, verify_certificate};
use crate::{Error, FVector, Face, Result, SimplicialComplex, VertexLabeling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// I(G) is shifted iff G is threshold.
    T1,
    /// The flag map of a threshold creation string builds I(G).
    T2,
    /// Pure shifted complexes: balanced iff flag iff pencil; shifted flag complexes are balanced.
    T3,
    /// Shifted graphs with f-vector (6, 9) contain the triangle 12, 13, 23.
    T4,
    /// Pure K: K shifted iff I(K) shifted.
    T5,
    /// N(G) ⊆ D(G).
    T6,
    /// N(G) = D(G) iff G is threshold.
    T7,
    /// D(G) = I(N[G]).
    T8,
    /// Weight certificates for threshold graphs, refusal otherwise.
    Cert,
    /// Search for graphs where threshold does not match shiftedness of N[G] or D(G).
    Hope,
    /// Replays the worked examples.
    Golden,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::Cert,
        TheoremId::Hope,
        TheoremId::Golden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::Cert => "CERT",
            TheoremId::Hope => "HOPE",
            TheoremId::Golden => "golden",
        }
    }

    /// Default sweep size: graphs up to 6 vertices, complexes up to 5.
    pub fn default_bound(self) -> usize {
        match self {
            TheoremId::T3 | TheoremId::T5 => 5,
            TheoremId::T4 => 6,
            TheoremId::Golden => 0,
            _ => 6,
        }
    }

    fn limit(self) -> usize {
        match self {
            TheoremId::T3 | TheoremId::T5 => COMPLEX_LIMIT,
            _ => GRAPH_LIMIT,
        }
    }

    /// Ids whose bound does not change what is checked.
    fn fixed_bound(self) -> Option<usize> {
        match self {
            TheoremId::T4 => Some(6),
            TheoremId::Golden => Some(0),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem {s:?} (expected T1..T8, CERT, HOPE or golden)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictReport {
    pub theorem: TheoremId,
    pub bound: usize,
    /// Instances visited.
    pub instances_checked: u64,
    /// Instances where the hypothesis held (e.g. threshold graphs for T2).
    pub applicable: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
    pub worker_count: usize,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    theorem: &'a str,
    bound: usize,
    checked: u64,
    applicable: u64,
    counterexamples: &'a [Counterexample],
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    jobs: Option<usize>,
}

impl VerdictReport {
    pub fn passed(&self) -> bool {
        self.theorem == TheoremId::Hope || self.counterexamples.is_empty()
    }

    fn json(&self, with_run_fields: bool) -> String {
        serde_json::to_string(&ReportJson {
            theorem: self.theorem.name(),
            bound: self.bound,
            checked: self.instances_checked,
            applicable: self.applicable,
            counterexamples: &self.counterexamples,
            elapsed_ms: with_run_fields.then_some(self.elapsed.as_millis()),
            jobs: with_run_fields.then_some(self.worker_count),
        })
        .expect("report serializes")
    }

    /// `{theorem, bound, checked, applicable, counterexamples, elapsed_ms, jobs}`.
    pub fn to_json(&self) -> String {
        self.json(true)
    }

    /// The report without `elapsed_ms` and `jobs`; identical across runs and worker counts.
    pub fn canonical_json(&self) -> String {
        self.json(false)
    }

    /// Folds a report for a larger size into this one.
    fn absorb(&mut self, other: VerdictReport) {
        self.bound = self.bound.max(other.bound);
        self.instances_checked += other.instances_checked;
        self.applicable += other.applicable;
        self.counterexamples.extend(other.counterexamples);
        self.elapsed += other.elapsed;
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.theorem, self.counterexamples.len()) {
            (TheoremId::Hope, k) => format!("{k} witnesses"),
            (_, 0) => "PASS".to_string(),
            (_, k) => format!("FAIL ({k} counterexamples)"),
        };
        writeln!(
            f,
            "{} bound={} checked={} applicable={} {} [{} ms, {} jobs]",
            self.theorem,
            self.bound,
            self.instances_checked,
            self.applicable,
            verdict,
            self.elapsed.as_millis(),
            self.worker_count
        )?;
        for c in &self.counterexamples {
            writeln!(f, "  {}: {}", c.input, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub jobs: usize,
    /// Stop at the first counterexample; counts are then partial.
    pub first_counterexample: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { jobs: 1, first_counterexample: false }
    }
}

impl RunOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        RunOptions { jobs, ..Default::default() }
    }
}

#[derive(Default)]
struct Outcome {
    applicable: bool,
    failure: Option<Counterexample>,
}

impl Outcome {
    fn skip() -> Self {
        Outcome::default()
    }

    fn check(applicable: bool, ok: bool, input: impl FnOnce() -> String, detail: impl FnOnce() -> String) -> Self {
        let failure = (!ok).then(|| Counterexample { input: input(), detail: detail() });
        Outcome { applicable, failure }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    applicable: u64,
    counterexamples: Vec<Counterexample>,
}

const CHUNK: u64 = 512;

fn sweep<F>(count: u64, opts: RunOptions, check: F) -> Tally
where
    F: Fn(u64) -> Outcome + Sync,
{
    let stop = AtomicBool::new(false);
    let chunks = count.div_ceil(CHUNK);
    let run = || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut t = Tally::default();
                for i in (c * CHUNK)..((c + 1) * CHUNK).min(count) {
                    if opts.first_counterexample && stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let out = check(i);
                    t.checked += 1;
                    t.applicable += out.applicable as u64;
                    if let Some(f) = out.failure {
                        t.counterexamples.push(f);
                        stop.store(true, Ordering::Relaxed);
                    }
                }
                t
            })
            .collect::<Vec<Tally>>()
    };
    let parts = match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut total = Tally::default();
    for p in parts {
        total.checked += p.checked;
        total.applicable += p.applicable;
        total.counterexamples.extend(p.counterexamples);
    }
    if opts.first_counterexample {
        total.counterexamples.truncate(1);
    }
    total
}

fn shifted(k: &SimplicialComplex) -> bool {
    find_shifted_labeling(k).expect("within search limit").is_some()
}

fn graph_sweep<F>(n: usize, opts: RunOptions, check: F) -> Tally
where
    F: Fn(&Graph) -> Outcome + Sync,
{
    sweep(graph_count(n), opts, |mask| check(&Graph::from_edge_mask(n, mask)))
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    a.checked += b.checked;
    a.applicable += b.applicable;
    a.counterexamples.extend(b.counterexamples);
    a
}

fn check_t1(g: &Graph) -> Outcome {
    let thr = is_threshold(g);
    let sh = shifted(&independence_complex(g));
    Outcome::check(true, thr == sh, || g.to_string(), || format!("threshold={thr} I(G) shifted={sh}"))
}

fn check_t2(g: &Graph) -> Outcome {
    let Ok(s) = encode_threshold(g) else {
        return Outcome::skip();
    };
    let image = s.flag_transform().expect("creation strings have no bars");
    let built = image.evaluate();
    let indep = independence_complex(g);
    let flag = is_flag(&indep).expect("small complex");
    let iso = are_isomorphic(&built, &indep);
    Outcome::check(
        true,
        flag && iso,
        || g.to_string(),
        || format!("string={s} image={image} built={built} I(G)={indep} flag={flag} isomorphic={iso}"),
    )
}

fn check_t3_pure(k: &SimplicialComplex) -> Outcome {
    if !k.has_full_support() || !shifted(k) {
        return Outcome::skip();
    }
    let balanced = find_balanced_coloring(k).expect("small complex").is_some();
    let flag = is_flag(k).expect("small complex");
    let pencil = is_pencil(k);
    Outcome::check(
        true,
        balanced == flag && flag == pencil,
        || k.to_string(),
        || format!("balanced={balanced} flag={flag} pencil={pencil}"),
    )
}

/// Every shifted flag complex on `1..=n` is I(G) for a threshold G; its string coloring must
/// be balanced.
fn check_t3a(g: &Graph) -> Outcome {
    if !is_threshold(g) {
        return Outcome::skip();
    }
    let k = independence_complex(g);
    let coloring = flag_string_coloring(&k);
    let ok = coloring.as_ref().is_some_and(|c| c.is_valid_for(&k));
    Outcome::check(true, ok, || format!("I({g}) = {k}"), || format!("string coloring {coloring:?} is not balanced"))
}

fn check_t5(k: &SimplicialComplex) -> Outcome {
    let ik = gen_independence_complex(k);
    let a = shifted(k);
    let b = shifted(&ik);
    Outcome::check(true, a == b, || k.to_string(), || format!("K shifted={a}, I(K)={ik} shifted={b}"))
}

fn check_t6(g: &Graph) -> Outcome {
    let nb = neighborhood_complex(g);
    let dom = dominance_complex(g).expect("small graph");
    let missing: Vec<Face> = nb.facets().iter().copied().filter(|f| !dom.is_face(*f)).collect();
    Outcome::check(true, missing.is_empty(), || g.to_string(), || format!("N(G) faces {missing:?} not in D(G)={dom}"))
}

fn check_t7(g: &Graph) -> Outcome {
    let nb = neighborhood_complex(g);
    let dom = dominance_complex(g).expect("small graph");
    let equal = nb == dom;
    let thr = is_threshold(g);
    Outcome::check(true, equal == thr, || g.to_string(), || format!("threshold={thr} N(G)={nb} D(G)={dom}"))
}

fn check_t8(g: &Graph) -> Outcome {
    let dom = dominance_complex(g).expect("small graph");
    let via = gen_independence_complex(&closed_neighborhood_complex(g));
    Outcome::check(true, dom == via, || g.to_string(), || format!("D(G)={dom} I(N[G])={via}"))
}

fn check_cert(g: &Graph) -> Outcome {
    match certify(g) {
        Ok(cert) => {
            let verified = verify_certificate(g, &cert).expect("small graph");
            let positive = cert.weights.iter().all(|&w| w > 0);
            let thr = is_threshold(g);
            Outcome::check(
                true,
                verified && positive && thr,
                || g.to_string(),
                || format!("certificate {cert:?} verified={verified} positive={positive} threshold={thr}"),
            )
        }
        Err(Error::NotThreshold { .. }) => {
            Outcome::check(false, !is_threshold(g), || g.to_string(), || "certify refused a threshold graph".into())
        }
        Err(e) => Outcome::check(false, false, || g.to_string(), || format!("certify failed: {e}")),
    }
}

fn check_hope(g: &Graph) -> Outcome {
    let thr = is_threshold(g);
    let closed = closed_neighborhood_complex(g);
    let closed_sh = shifted(&closed);
    let dom_sh = shifted(&dominance_complex(g).expect("small graph"));
    Outcome::check(
        thr,
        thr == closed_sh && thr == dom_sh,
        || g.to_string(),
        || format!("threshold={thr} N[G]={closed} N[G] shifted={closed_sh} D(G) shifted={dom_sh}"),
    )
}

/// Shifted 1-complexes on 6 vertices with 9 edges, plus the facts about K_{3,3}.
fn run_t4(opts: RunOptions) -> Tally {
    let pairs = 15;
    let mut tally = sweep(1 << pairs, opts, |mask| {
        if (mask as u32).count_ones() != 9 {
            return Outcome::skip();
        }
        let k = Graph::from_edge_mask(6, mask).edge_complex();
        let fv = k.f_vector().expect("small complex");
        if fv != FVector(vec![6, 9]) || !is_order_ideal(&k).expect("small complex") {
            return Outcome::skip();
        }
        let triangle = ["12", "13", "23"].iter().all(|e| k.is_face(Face::digits(e)));
        Outcome::check(true, triangle, || k.to_string(), || "missing one of the edges 12, 13, 23".into())
    });
    if tally.applicable == 0 {
        tally.counterexamples.push(Counterexample {
            input: "shifted graphs with f-vector (6, 9)".into(),
            detail: "none found; the claim would hold vacuously".into(),
        });
    }
    let k33 = graph::complete_bipartite(3, 3).edge_complex();
    let fv = k33.f_vector().expect("small complex");
    let flag = is_flag(&k33).expect("small complex");
    let balanced = find_balanced_coloring(&k33).expect("small complex").is_some();
    tally.checked += 1;
    if !(fv == FVector(vec![6, 9]) && flag && balanced) {
        tally.counterexamples.push(Counterexample {
            input: format!("K_3,3 = {k33}"),
            detail: format!("f-vector={fv} flag={flag} balanced={balanced}"),
        });
    }
    tally
}

fn run_golden() -> Tally {
    let mut tally = Tally::default();
    for (name, check) in golden_examples() {
        tally.checked += 1;
        tally.applicable += 1;
        if let Err(detail) = check() {
            tally.counterexamples.push(Counterexample { input: name.to_string(), detail });
        }
    }
    tally
}

/// Checks `id` on every instance of size exactly `bound` (T4 and golden ignore the bound).
pub fn run_theorem(id: TheoremId, bound: usize, opts: RunOptions) -> Result<VerdictReport> {
    let start = Instant::now();
    let bound = id.fixed_bound().unwrap_or(bound);
    if id.fixed_bound().is_none() {
        if bound == 0 {
            return Err(Error::NoVertices);
        }
        if bound > id.limit() {
            return Err(Error::TooLarge { what: "theorem sweep", n: bound, max: id.limit() });
        }
    }
    let tally = match id {
        TheoremId::T1 => graph_sweep(bound, opts, check_t1),
        TheoremId::T2 => graph_sweep(bound, opts, check_t2),
        TheoremId::T3 => {
            let pure = sweep(pure_complex_count(bound), opts, |i| check_t3_pure(&pure_complex_at(bound, i)));
            merge(pure, graph_sweep(bound, opts, check_t3a))
        }
        TheoremId::T4 => run_t4(opts),
        TheoremId::T5 => sweep(pure_complex_count(bound), opts, |i| check_t5(&pure_complex_at(bound, i))),
        TheoremId::T6 => graph_sweep(bound, opts, check_t6),
        TheoremId::T7 => graph_sweep(bound, opts, check_t7),
        TheoremId::T8 => graph_sweep(bound, opts, check_t8),
        TheoremId::Cert => graph_sweep(bound, opts, check_cert),
        TheoremId::Hope => graph_sweep(bound, opts, check_hope),
        TheoremId::Golden => run_golden(),
    };
    Ok(VerdictReport {
        theorem: id,
        bound,
        instances_checked: tally.checked,
        applicable: tally.applicable,
        counterexamples: tally.counterexamples,
        elapsed: start.elapsed(),
        worker_count: opts.jobs,
    })
}

/// Runs [`run_theorem`] for every size `1..=max_n` and merges the reports.
pub fn run_theorem_upto(id: TheoremId, max_n: usize, opts: RunOptions) -> Result<VerdictReport> {
    if id.fixed_bound().is_some() {
        return run_theorem(id, max_n, opts);
    }
    let mut report = run_theorem(id, 1, opts)?;
    for n in 2..=max_n {
        if opts.first_counterexample && !report.counterexamples.is_empty() {
            break;
        }
        report.absorb(run_theorem(id, n, opts)?);
    }
    Ok(report)
}

/// Witness sweep for graphs on `bound` vertices where being threshold disagrees with
/// shiftedness of the closed neighborhood complex or of the dominance complex.
pub fn run_hope_search(bound: usize, opts: RunOptions) -> Result<VerdictReport> {
    run_theorem(TheoremId::Hope, bound, opts)
}

pub fn golden_report() -> VerdictReport {
    run_theorem(TheoremId::Golden, 0, RunOptions::default()).expect("golden replay has no bound")
}

type Check = fn() -> std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn faces(list: &[&str], n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(list.iter().map(|s| Face::digits(s)), n).expect("valid example")
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Worked examples: the complex {123,14,24}, the padded order, `star_d`, construction strings and their
/// labels, the flag map, the pencil form, K_{3,3}, the I(K) chain and the neighborhood facts.
pub fn golden_examples() -> Vec<(&'static str, Check)> {
    vec![
        ("facets of {123,12,14,24} reduce to {123,14,24}", || {
            let k = faces(&["123", "12", "14", "24"], 4);
            ensure(k == faces(&["123", "14", "24"], 4), || format!("got {k}"))
        }),
        ("{123,14,24} is shifted, not pure, not flag, balanced", || {
            let k = faces(&["123", "14", "24"], 4);
            ensure(is_shifted_under(&k, &VertexLabeling::identity(4)).map_err(err)?, || "not shifted".into())?;
            ensure(is_order_ideal(&k).map_err(err)?, || "not an order ideal".into())?;
            ensure(!k.is_pure(), || "pure".into())?;
            ensure(k.is_face(Face::digits("14")) && !k.is_face(Face::digits("34")), || "face test".into())?;
            ensure(k.f_vector().map_err(err)? == FVector(vec![4, 5, 1]), || "f-vector".into())?;
            let mnf = k.minimal_nonfaces().map_err(err)?;
            ensure(mnf == vec![Face::digits("34"), Face::digits("124")], || format!("minimal non-faces {mnf:?}"))?;
            ensure(!is_flag(&k).map_err(err)?, || "flag".into())?;
            ensure(find_balanced_coloring(&k).map_err(err)?.is_some(), || "not balanced".into())?;
            ensure(!is_pencil(&k), || "pencil".into())
        }),
        ("a face 24 without 14 breaks shiftedness; 24 <= 1356", || {
            ensure(padded_less_or_equal(Face::digits("24"), Face::digits("1356")), || "24 vs 1356".into())?;
            ensure(padded_less_or_equal(Face::digits("14"), Face::digits("24")), || "14 vs 24".into())?;
            let k = faces(&["24", "1", "3"], 4);
            ensure(!is_order_ideal(&k).map_err(err)?, || "order ideal without 14".into())?;
            ensure(!is_shifted_under(&k, &VertexLabeling::identity(4)).map_err(err)?, || "shifted without 14".into())
        }),
        ("{123} star_2 4 is the boundary of the 3-simplex", || {
            let k = star_d(&SimplicialComplex::simplex(3), 4, 2).map_err(err)?;
            ensure(k == faces(&["123", "124", "134", "234"], 4), || format!("got {k}"))
        }),
        ("{123} star_3 4 is the 3-simplex", || {
            let k = star_d(&SimplicialComplex::simplex(3), 4, 3).map_err(err)?;
            ensure(k == SimplicialComplex::simplex(4), || format!("got {k}"))
        }),
        ("DDSS|SSD|S: tokens, labels 6,7,5,4,3,2,8,1, shifted", || {
            let s = parse_ds("DDSS|SSD|S").map_err(err)?;
            ensure(s.tokens().len() == 10 && s.bar_count() == 2, || "token count".into())?;
            ensure(s.labels() == vec![6, 7, 5, 4, 3, 2, 8, 1], || format!("labels {:?}", s.labels()))?;
            let k = s.evaluate();
            ensure(is_shifted_under(&k, &VertexLabeling::identity(k.n())).map_err(err)?, || "not shifted".into())
        }),
        ("DDSS|SS|DS builds the same complex as DDSS|SSD|S", || {
            let a = parse_ds("DDSS|SS|DS").map_err(err)?;
            let b = parse_ds("DDSS|SSD|S").map_err(err)?;
            ensure(a.canonicalize() == b, || format!("canonical form {}", a.canonicalize()))?;
            ensure(a.evaluate() == b.evaluate(), || "different complexes".into())
        }),
        ("a bar must precede an S", || ensure(parse_ds("DD|D").is_err(), || "DD|D parsed".into())),
        ("DDSDSDSSD maps to S|SD|SD|SDD|S", || {
            let s = parse_ds("DDSDSDSSD").map_err(err)?;
            let image = s.flag_transform().map_err(err)?;
            ensure(image.to_string() == "S|SD|SD|SDD|S", || format!("got {image}"))?;
            ensure(image.is_one_star_per_dimension(), || "not one star per dimension".into())?;
            let g = s.evaluate().one_skeleton();
            ensure(are_isomorphic(&image.evaluate(), &independence_complex(&g)), || "image is not I(G)".into())
        }),
        ("the pencil DDDDS|S|S is a pure shifted flag complex", || {
            let s = parse_ds("DDDDS|S|S").map_err(err)?;
            let k = s.evaluate();
            ensure(s.is_one_star_per_dimension(), || "star count".into())?;
            ensure(is_pencil(&k) && k.is_pure(), || format!("not a pencil: {k}"))?;
            ensure(k.facets().len() == k.n() - k.dimension() as usize, || "n - d facets".into())?;
            ensure(is_flag(&k).map_err(err)?, || "not flag".into())
        }),
        ("K_3,3: 6 vertices, 9 edges, flag and balanced", || {
            let k = graph::complete_bipartite(3, 3).edge_complex();
            ensure(k.f_vector().map_err(err)? == FVector(vec![6, 9]), || "f-vector".into())?;
            ensure(is_flag(&k).map_err(err)?, || "not flag".into())?;
            let c = find_balanced_coloring(&k).map_err(err)?.ok_or("not balanced")?;
            ensure(c.color(1) == c.color(2) && c.color(2) == c.color(3) && c.color(1) != c.color(4), || {
                format!("coloring {c:?} does not follow the sides")
            })
        }),
        ("I(K) for K = {123,14,24,15} is {235,345,12,13}, not shifted", || {
            let k = faces(&["123", "14", "24", "15"], 5);
            ensure(shifted(&k), || "K not shifted".into())?;
            let ik = gen_independence_complex(&k);
            ensure(ik == faces(&["235", "345", "12", "13"], 5), || format!("got {ik}"))?;
            ensure(!shifted(&ik), || "I(K) shifted".into())?;
            ensure(ik.minimal_nonfaces().map_err(err)? == k.facets(), || "minimal non-faces".into())
        }),
        ("I(K) induced on 1245 is a path of length three", || {
            let ik = faces(&["235", "345", "12", "13"], 5);
            let sub = ik.induced_subcomplex(Face::digits("1245"));
            let g = sub.one_skeleton();
            ensure(g.edges() == vec![(1, 2), (2, 5), (4, 5)], || format!("edges {:?}", g.edges()))?;
            let path = graph::path(4).edge_complex();
            ensure(find_shifted_labeling(&path).map_err(err)?.is_none(), || "path shifted".into())?;
            ensure(!is_threshold(&graph::path(4)), || "P4 threshold".into())
        }),
        ("I(I(K)) is {245,234,145,35}, not shifted", || {
            let i2 = gen_independence_complex(&faces(&["235", "345", "12", "13"], 5));
            ensure(i2 == faces(&["245", "234", "145", "35"], 5), || format!("got {i2}"))?;
            ensure(!shifted(&i2), || "shifted".into())
        }),
        ("I(I(I(K))) is {123,124,125,134,45}, shifted by swapping 3 and 4", || {
            let i3 = gen_independence_complex(&faces(&["245", "234", "145", "35"], 5));
            ensure(i3 == faces(&["123", "124", "125", "134", "45"], 5), || format!("got {i3}"))?;
            let swap = VertexLabeling::from_ranks(vec![1, 2, 4, 3, 5]).map_err(err)?;
            ensure(is_shifted_under(&i3, &swap).map_err(err)?, || "swap labeling fails".into())?;
            ensure(shifted(&i3), || "search found no labeling".into())
        }),
        ("threshold graphs: N(G) = D(G) = I(N[G]) for K_1,3", || {
            let g = graph::star(3);
            let d = dominance_complex(&g).map_err(err)?;
            ensure(neighborhood_complex(&g) == d, || "N != D".into())?;
            ensure(gen_independence_complex(&closed_neighborhood_complex(&g)) == d, || "I(N[G]) != D".into())
        }),
        ("P4 is not threshold and N(G) != D(G)", || {
            let g = graph::path(4);
            ensure(creation_sequence(&g).is_err(), || "P4 eliminated".into())?;
            ensure(neighborhood_complex(&g) != dominance_complex(&g).map_err(err)?, || "N = D".into())
        }),
        ("every one-star-per-dimension string of length 7 builds a flag complex", || {
            for s in canonical_strings(7).into_iter().filter(|s| s.is_one_star_per_dimension()) {
                ensure(is_flag(&s.evaluate()).map_err(err)?, || format!("{s} not flag"))?;
            }
            Ok(())
        }),
    ]
}

/// Canonical construction strings with up to `max_len` tokens.
pub fn canonical_strings(max_len: usize) -> Vec<DsString> {
    use crate::ds::DsToken::*;
    let mut out = Vec::new();
    let mut layer: Vec<Vec<crate::DsToken>> = vec![vec![Disjoint]];
    for _ in 1..max_len {
        let mut next = Vec::new();
        for t in &layer {
            out.push(DsString::from_tokens(t.clone()));
            for tok in [Disjoint, Star, Bar] {
                let mut u = t.clone();
                u.push(tok);
                next.push(u);
            }
        }
        layer = next;
    }
    out.extend(layer.into_iter().map(DsString::from_tokens));
    out.retain(|s| s.to_string().parse::<DsString>().is_ok() && s.is_canonical());
    out
}
