//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Runs without the libtest harness so the lines always reach the output.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use srx::diagnostics::{
    depth_balanced, depth_links, depth_nerves, depth_poset, depth_rank_selection, is_buchsbaum, is_doubly_cm,
    is_gorenstein, serre_level,
};
use srx::harness::fixtures::{delta1, delta2, gamma1, gamma2, hexagon, two_triangles};
use srx::harness::prospect::{mixed_corpus, prospect, random_pure_complex, item_rng, Predicate, ProspectConfig, CORPUS_SEED};
use srx::harness::{
    check_euler_identities, check_independent_removal, check_rank_selection, check_subdivision, truncation_table,
    write_witnesses, CheckResult,
};
use srx::poset::truncated_subdivision;
use srx::{higher_nerve, BalancedComplex, FieldSpec, SimplicialComplex};

const FIXTURE_LIMIT: Duration = Duration::from_secs(1);
const CORPUS_LIMIT: Duration = Duration::from_secs(300);
const CORPUS_SIZE: usize = 500;
const SUBDIVIDED_SIZE: usize = 100;

fn q() -> FieldSpec {
    FieldSpec::RATIONALS
}

fn gf2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn expect(ok: bool, what: impl Into<String>, failures: &mut Vec<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome { ok: true, detail: summary }
    } else {
        Outcome {
            ok: false,
            detail: format!("{}; {summary}", failures.join("; ")),
        }
    }
}

fn tables(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    truncation_table(c, q())
        .unwrap()
        .iter()
        .map(|b| b.ranks().to_vec())
        .collect()
}

fn witness_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-witnesses")
}

/// Writes witnesses of failing results and describes the first few.
fn failing(results: &[CheckResult], label: &str, failures: &mut Vec<String>) {
    let bad: Vec<&CheckResult> = results.iter().filter(|r| !r.passed()).collect();
    if bad.is_empty() {
        return;
    }
    let dir = witness_dir().join(label);
    let written = write_witnesses(&dir, results).unwrap_or_default();
    for r in bad.iter().take(3) {
        failures.push(format!("{label} {}: {}", r.check, r.detail));
    }
    failures.push(format!("{} witness file(s) in {}", written.len(), dir.display()));
}

fn criterion_1() -> Outcome {
    let d1 = delta1();
    let mut f = Vec::new();
    let level = serre_level(&d1, q()).unwrap();
    expect(level == 1, format!("serre_level {level} ≠ 1"), &mut f);
    let t = truncation_table(&d1, q()).unwrap();
    for j in 0..3usize {
        for i in 0..2usize {
            if i + j < 3 {
                let b = t[j].get(i as isize - 1);
                expect(b == 0, format!("b̃_{}([Δ1]_>{j}) = {b}", i as isize - 1), &mut f);
            }
        }
    }
    let depths = (
        depth_links(&d1, q()).unwrap(),
        depth_nerves(&d1, q()).unwrap(),
        depth_rank_selection(&d1, q()).unwrap(),
    );
    expect(depths == (2, 2, 2), format!("depths {depths:?}"), &mut f);
    outcome(f, format!("serre_level {level}, depths {depths:?}"))
}

fn criterion_2() -> Outcome {
    let (d1, d2) = (delta1(), delta2());
    let mut f = Vec::new();
    let level = serre_level(&d2, q()).unwrap();
    expect(level == 2, format!("serre_level(Δ2) {level} ≠ 2"), &mut f);
    let b1 = truncation_table(&d2, q()).unwrap()[0].get(1);
    expect(b1 >= 1, format!("b̃_1([Δ2]_>0) = {b1}"), &mut f);
    expect(is_buchsbaum(&d2, q()).unwrap(), "Δ2 not Buchsbaum", &mut f);
    expect(!is_buchsbaum(&d1, q()).unwrap(), "Δ1 Buchsbaum", &mut f);
    let (t1, t2) = (tables(&d1), tables(&d2));
    expect(t1 == t2, format!("tables differ: {t1:?} vs {t2:?}"), &mut f);
    outcome(f, format!("serre_level(Δ2) {level}, b̃_1([Δ2]_>0) = {b1}, tables {t1:?}"))
}

fn criterion_3() -> Outcome {
    let (g1, g2) = (gamma1(), gamma2());
    let mut f = Vec::new();
    expect(is_gorenstein(&g1, q()).unwrap(), "Γ1 not Gorenstein", &mut f);
    expect(!is_gorenstein(&g2, q()).unwrap(), "Γ2 Gorenstein", &mut f);
    expect(!is_doubly_cm(&g2, q()).unwrap(), "Γ2 doubly CM", &mut f);
    let (t1, t2) = (tables(&g1), tables(&g2));
    expect(t1 == t2, format!("tables differ: {t1:?} vs {t2:?}"), &mut f);
    outcome(f, format!("Γ1 Gorenstein, Γ2 neither Gorenstein nor 2-CM, tables {t1:?}"))
}

fn criterion_4(corpus: &[SimplicialComplex]) -> Outcome {
    let mut f = Vec::new();
    let mut checked = 0;
    for field in [q(), gf2()] {
        for (i, c) in corpus.iter().enumerate() {
            let a = depth_links(c, field).unwrap();
            let b = depth_nerves(c, field).unwrap();
            let r = depth_rank_selection(c, field).unwrap();
            checked += 1;
            if a != b || a != r {
                f.push(format!("item {i} over {field}: links {a}, nerves {b}, rank {r}"));
            }
        }
    }
    let n = f.len();
    f.truncate(5);
    outcome(f, format!("{checked} (complex, field) pairs, {n} disagreements"))
}

fn criterion_5(corpus: &[SimplicialComplex]) -> Outcome {
    let mut f = Vec::new();
    let mut results = 0;
    let mut pure = 0;
    for (i, c) in corpus.iter().enumerate() {
        pure += c.is_pure() as usize;
        let mut rs = check_subdivision(c, q()).unwrap();
        rs.extend(check_euler_identities(c).unwrap());
        results += rs.len();
        failing(&rs, &format!("identities-{i}"), &mut f);
    }
    outcome(f, format!("{results} results over {} complexes ({pure} pure)", corpus.len()))
}

fn order_complex_fixtures() -> Vec<(String, BalancedComplex)> {
    let mut out = vec![("hexagon".to_string(), hexagon())];
    for (name, c) in [
        ("delta1", delta1()),
        ("delta2", delta2()),
        ("gamma1", gamma1()),
        ("gamma2", gamma2()),
        ("simplex3", SimplicialComplex::simplex(3)),
        ("two-triangles", two_triangles()),
    ] {
        for j in 0..c.d() {
            out.push((format!("{name}>{j}"), truncated_subdivision(&c, j).unwrap()));
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut f = Vec::new();
    let mut items = order_complex_fixtures();
    for i in 0..SUBDIVIDED_SIZE {
        let c = random_pure_complex(4 + i % 3, 2 + (i / 3) % 2, &mut item_rng(CORPUS_SEED ^ 0xb, i));
        items.push((format!("random-{i}"), truncated_subdivision(&c, 0).unwrap()));
    }
    let mut results = 0;
    for (name, b) in &items {
        let mut rs = check_rank_selection(b, q()).unwrap();
        rs.extend(check_independent_removal(b.complex(), q()).unwrap());
        results += rs.len();
        failing(&rs, name, &mut f);
    }
    outcome(f, format!("{results} results over {} balanced complexes", items.len()))
}

fn criterion_7() -> Outcome {
    let mut f = Vec::new();
    let d1 = delta1();
    let fv = d1.f_vector().unwrap().entries().to_vec();
    expect(fv == [1, 6, 12, 6], format!("f(Δ1) = {fv:?}"), &mut f);
    let e = (d1.reduced_euler().unwrap(), delta2().reduced_euler().unwrap());
    expect(e == (-1, -1), format!("χ̃ = {e:?}"), &mut f);

    let tt = two_triangles();
    let chi: Vec<i64> = (1..=3)
        .map(|i| higher_nerve(&tt, i).unwrap().reduced_euler().unwrap() + 1)
        .collect();
    expect(chi == [1, 1, 2], format!("nerve χ = {chi:?}"), &mut f);
    // f_i = Σ_{j ≥ i} C(j, i) χ(N_{j+1}).
    let choose = |n: i64, k: i64| -> i64 { (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1)) };
    let recovered: Vec<i64> = (0..3)
        .map(|i| (i..3).map(|j| choose(j, i) * chi[j as usize]).sum())
        .collect();
    expect(recovered == [4, 5, 2], format!("recovered f = {recovered:?}"), &mut f);

    let hex = hexagon();
    let rd = depth_balanced(&hex, q()).unwrap();
    let mins: BTreeSet<Vec<usize>> = rd.minimizers.iter().map(|(s, _)| s.clone()).collect();
    expect(rd.depth == 2, format!("hexagon depth {}", rd.depth), &mut f);
    expect(
        mins.contains(&vec![1]) && mins.contains(&vec![2]),
        format!("minimizers {mins:?} lack a singleton"),
        &mut f,
    );
    let via_poset = depth_poset(hex.complex(), q()).unwrap().depth;
    expect(via_poset == 2, format!("hexagon poset depth {via_poset}"), &mut f);
    outcome(
        f,
        format!("f(Δ1) {fv:?}, nerve χ {chi:?} → f {recovered:?}, hexagon minimizers {:?}", rd.minimizers),
    )
}

fn criterion_8() -> Outcome {
    let mut f = Vec::new();
    let mut outputs = Vec::new();
    for (predicate, n, dim) in [(Predicate::S2Gap, 6, 2), (Predicate::S2Noise, 6, 2), (Predicate::BettiTwin, 5, 2)] {
        for threads in [1, 8, 1] {
            let mut cfg = ProspectConfig::new(n, dim, 60, 7, predicate);
            cfg.threads = Some(threads);
            outputs.push((predicate, threads, prospect(&cfg).unwrap().to_json()));
        }
    }
    for w in outputs.chunks(3) {
        let same = w.iter().all(|(_, _, o)| o == &w[0].2);
        expect(same, format!("{} output differs across runs or thread counts", w[0].0.name()), &mut f);
    }
    let bytes: usize = outputs.iter().step_by(3).map(|(_, _, o)| o.len()).sum();
    outcome(f, format!("3 predicates x (1, 8, 1) threads identical, {bytes} bytes per pass"))
}

fn main() {
    let mut all_ok = true;
    let mut report = |n: usize, name: &str, started: Instant, limit: Option<Duration>, o: Outcome| {
        let took = started.elapsed();
        let in_time = limit.is_none_or(|l| took < l);
        let ok = o.ok && in_time;
        all_ok &= ok;
        let timing = match limit {
            Some(l) => format!("{:.3}s < {}s", took.as_secs_f64(), l.as_secs()),
            None => format!("{:.3}s", took.as_secs_f64()),
        };
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {n} {verdict} [{name}] ({timing}): {}", o.detail);
    };

    let t = Instant::now();
    report(1, "delta1 fixture", t, Some(FIXTURE_LIMIT), criterion_1());
    let t = Instant::now();
    report(2, "delta2 fixture", t, Some(FIXTURE_LIMIT), criterion_2());
    let t = Instant::now();
    report(3, "gamma fixtures", t, Some(FIXTURE_LIMIT), criterion_3());

    let corpus = mixed_corpus(CORPUS_SIZE, CORPUS_SEED);
    let t = Instant::now();
    report(4, "tri-algorithm depth", t, Some(CORPUS_LIMIT), criterion_4(&corpus));
    let t = Instant::now();
    report(5, "identity suite", t, None, criterion_5(&corpus));
    let t = Instant::now();
    report(6, "rank-selection suite", t, None, criterion_6());
    let t = Instant::now();
    report(7, "hand values", t, None, criterion_7());
    let t = Instant::now();
    report(8, "prospect determinism", t, None, criterion_8());

    if !all_ok {
        std::process::exit(1);
    }
}
