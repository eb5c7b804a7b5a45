//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{binomial, dedekind, has_forbidden_induced};
use shiftcx::enumerate::{enumerate_complexes, enumerate_graphs, graph_count, pure_complex_count};
use shiftcx::verify::{golden_examples, golden_report, run_theorem, run_theorem_upto, RunOptions, TheoremId, VerdictReport};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn many() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get()).max(4)
}

fn run(id: TheoremId, max_n: usize, jobs: usize) -> VerdictReport {
    run_theorem_upto(id, max_n, RunOptions::with_jobs(jobs)).expect("bound within guards")
}

fn clean(r: &VerdictReport) -> Result<(), String> {
    match r.counterexamples.first() {
        None => Ok(()),
        Some(c) => Err(format!("{} counterexamples, first {}: {}", r.counterexamples.len(), c.input, c.detail)),
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn graphs_upto(n: usize) -> u64 {
    (1..=n).map(graph_count).sum()
}

/// Labeled threshold graphs on 1..=n vertices, counted with the forbidden-subgraph test.
fn threshold_graphs_upto(n: usize) -> u64 {
    (1..=n).map(|k| enumerate_graphs(k).unwrap().filter(|g| !has_forbidden_induced(g)).count() as u64).sum()
}

fn golden() -> Outcome {
    let start = Instant::now();
    let r = golden_report();
    let elapsed = start.elapsed();
    clean(&r)?;
    expect_eq("replays", r.instances_checked as usize, golden_examples().len())?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{} worked examples replayed in {elapsed:?}", r.instances_checked))
}

fn t1() -> Outcome {
    let r = run_theorem(TheoremId::T1, 6, RunOptions::with_jobs(1)).unwrap();
    clean(&r)?;
    expect_eq("graphs checked", r.instances_checked, 1 << binomial(6, 2))?;
    within(r.elapsed, Duration::from_secs(60))?;
    Ok(format!("{} graphs on 6 vertices, single worker, {:?}", r.instances_checked, r.elapsed))
}

fn t2() -> Outcome {
    let r = run(TheoremId::T2, 7, many());
    clean(&r)?;
    expect_eq("graphs checked", r.instances_checked, graphs_upto(7))?;
    expect_eq("threshold graphs", r.applicable, threshold_graphs_upto(7))?;
    within(r.elapsed, Duration::from_secs(120))?;
    Ok(format!("{} threshold graphs on <= 7 vertices, {:?}", r.applicable, r.elapsed))
}

fn t3() -> Outcome {
    let r = run(TheoremId::T3, 6, many());
    clean(&r)?;
    let pure: u64 = (1..=6).map(pure_complex_count).sum();
    expect_eq("instances", r.instances_checked, pure + graphs_upto(6))?;
    if r.applicable == 0 {
        return Err("no pure shifted complexes seen".into());
    }
    Ok(format!(
        "{pure} pure complexes and {} graphs on <= 6 vertices, {} shifted instances checked, {:?}",
        graphs_upto(6),
        r.applicable,
        r.elapsed
    ))
}

fn t4() -> Outcome {
    let r = run(TheoremId::T4, 6, many());
    clean(&r)?;
    Ok(format!("{} shifted graphs with f-vector (6, 9), all contain 12, 13, 23; K_3,3 flag and balanced", r.applicable))
}

fn t5() -> Outcome {
    let antichains = enumerate_complexes(5, false).unwrap().count() as u64;
    expect_eq("antichains of non-empty subsets of a 5-set", antichains, dedekind(5) - 1)?;
    let pure_in_antichains = enumerate_complexes(5, false).unwrap().filter(|k| k.is_pure()).count() as u64;
    expect_eq("pure complexes on 5 vertices", pure_complex_count(5), pure_in_antichains)?;
    let r = run(TheoremId::T5, 5, many());
    clean(&r)?;
    let pure: u64 = (1..=5).map(pure_complex_count).sum();
    expect_eq("pure complexes checked", r.instances_checked, pure)?;
    within(r.elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "{pure} pure complexes on <= 5 vertices ({antichains} antichains on 5 before filtering, {} counting the empty set), {:?}",
        dedekind(5),
        r.elapsed
    ))
}

fn t678() -> Outcome {
    let mut total = Duration::ZERO;
    for id in [TheoremId::T6, TheoremId::T7, TheoremId::T8] {
        let r = run(id, 6, many());
        clean(&r).map_err(|e| format!("{id}: {e}"))?;
        expect_eq("graphs checked", r.instances_checked, graphs_upto(6))?;
        total += r.elapsed;
    }
    within(total, Duration::from_secs(300))?;
    Ok(format!("{} graphs on <= 6 vertices for each, {total:?} combined", graphs_upto(6)))
}

fn cert() -> Outcome {
    let r = run(TheoremId::Cert, 7, many());
    clean(&r)?;
    expect_eq("graphs checked", r.instances_checked, graphs_upto(7))?;
    expect_eq("certified graphs", r.applicable, threshold_graphs_upto(7))?;
    Ok(format!(
        "{} certificates verified over all subsets, {} refusals, {:?}",
        r.applicable,
        r.instances_checked - r.applicable,
        r.elapsed
    ))
}

fn hope() -> Outcome {
    let limit = Duration::from_secs(600);
    let one = run(TheoremId::Hope, 7, 1);
    within(one.elapsed, limit)?;
    let par = run(TheoremId::Hope, 7, many());
    within(par.elapsed, limit)?;
    if one.canonical_json() != par.canonical_json() {
        return Err(format!("witness lists differ between 1 and {} workers", many()));
    }
    if one.counterexamples.is_empty() {
        return Err("no witness found".into());
    }
    Ok(format!(
        "{} witnesses on <= 7 vertices (first: {}), identical for 1 and {} workers, {:?} / {:?}",
        one.counterexamples.len(),
        one.counterexamples[0].input,
        many(),
        one.elapsed,
        par.elapsed
    ))
}

fn determinism() -> Outcome {
    let cases = [
        (TheoremId::Golden, 0),
        (TheoremId::T1, 6),
        (TheoremId::T2, 7),
        (TheoremId::T3, 6),
        (TheoremId::T4, 6),
        (TheoremId::T5, 5),
        (TheoremId::T6, 6),
        (TheoremId::T7, 6),
        (TheoremId::T8, 6),
        (TheoremId::Cert, 7),
        (TheoremId::Hope, 7),
    ];
    for (id, n) in cases {
        let reference = run(id, n, 1).canonical_json();
        for jobs in [1, 2, many()] {
            if run(id, n, jobs).canonical_json() != reference {
                return Err(format!("{id} report changed with {jobs} workers"));
            }
        }
    }
    Ok(format!("{} reports identical across two runs and 1, 2, {} workers", cases.len(), many()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("golden examples", golden),
        ("T1 independence complex shifted iff threshold", t1),
        ("T2 flag map builds I(G)", t2),
        ("T3 pure shifted: balanced, flag, pencil", t3),
        ("T4 shifted graphs with f-vector (6, 9)", t4),
        ("T5 K shifted iff I(K) shifted", t5),
        ("T6-T8 neighborhood and dominance complexes", t678),
        ("threshold certificates", cert),
        ("HOPE witness search", hope),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
