//! Seeded search for complexes whose truncation homology hides their Serre,
//! Buchsbaum or Gorenstein behaviour.
//!
//! Item `i` of a run draws from its own ChaCha stream `(seed, i)`, so the
//! output is independent of the number of worker threads.

use std::collections::BTreeMap;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::truncation_table;
use crate::complex::{binomial, SimplicialComplex};
use crate::diagnostics::{analyze, DiagnosticsReport, Flags};
use crate::error::{Error, Result};
use crate::homology::{BettiVector, FieldSpec};

pub const DEFAULT_CEILING: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// `serre_level = 1` while truncations vanish for `i < 2`.
    S2Gap,
    /// `serre_level ≥ 2` while `b̃_1([Δ]_{>0}) ≠ 0`.
    S2Noise,
    /// Pairs with equal truncation Betti tables and different flags.
    BettiTwin,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::S2Gap => "s2-gap",
            Predicate::S2Noise => "s2-noise",
            Predicate::BettiTwin => "betti-twin",
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s2-gap" => Ok(Predicate::S2Gap),
            "s2-noise" => Ok(Predicate::S2Noise),
            "betti-twin" => Ok(Predicate::BettiTwin),
            _ => Err(Error::Usage(format!(
                "unknown predicate {s:?}; expected s2-gap, s2-noise or betti-twin"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProspectConfig {
    pub vertices: usize,
    /// Dimension of the facets, `d − 1`.
    pub dim: usize,
    pub count: usize,
    pub seed: u64,
    pub predicate: Predicate,
    pub field: FieldSpec,
    /// Only pure complexes are drawn; kept for the record.
    pub pure_only: bool,
    pub ceiling: usize,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl ProspectConfig {
    pub fn new(vertices: usize, dim: usize, count: usize, seed: u64, predicate: Predicate) -> Self {
        ProspectConfig {
            vertices,
            dim,
            count,
            seed,
            predicate,
            field: FieldSpec::RATIONALS,
            pure_only: true,
            ceiling: DEFAULT_CEILING,
            threads: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.vertices > self.ceiling {
            return Err(Error::Usage(format!(
                "{} vertices exceeds the ceiling of {}",
                self.vertices, self.ceiling
            )));
        }
        if self.dim + 1 > self.vertices {
            return Err(Error::Usage(format!(
                "dimension {} needs at least {} vertices",
                self.dim,
                self.dim + 1
            )));
        }
        if !self.pure_only {
            return Err(Error::Usage("only pure random complexes are supported".into()));
        }
        Ok(())
    }
}

/// The RNG for item `index` of a run seeded with `seed`.
pub fn item_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// A pure complex with `m` distinct facets of size `d` on exactly `n` vertices,
/// `m` drawn uniformly from `⌈n/d⌉ ..= min(C(n,d), 2n)`. Draws that miss a
/// vertex are rejected.
pub fn random_pure_complex(n: usize, d: usize, rng: &mut impl Rng) -> SimplicialComplex {
    assert!(d >= 1 && d <= n, "facet size must lie in 1..=n");
    let subsets: Vec<Vec<usize>> = combinations(n, d);
    let total = subsets.len();
    let lo = n.div_ceil(d).min(total);
    let hi = total.min(2 * n).max(lo);
    loop {
        let m = rng.gen_range(lo..=hi);
        let picked = sample(rng, total, m);
        let mut covered = vec![false; n];
        for k in picked.iter() {
            for &v in &subsets[k] {
                covered[v] = true;
            }
        }
        if covered.iter().all(|&c| c) {
            let facets = picked
                .iter()
                .map(|k| subsets[k].iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>());
            return SimplicialComplex::from_facets(facets).expect("distinct labels");
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n as i64, k as i64) as usize);
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Seed of the reference corpus used by the test suites.
pub const CORPUS_SEED: u64 = 61_2024;

/// Mixed corpus: item `i` has `5 + i % 3` vertices and facets of size
/// `2 + (i / 3) % 3`, drawn from stream `(seed, i)`.
pub fn mixed_corpus(count: usize, seed: u64) -> Vec<SimplicialComplex> {
    (0..count)
        .into_par_iter()
        .map(|i| random_pure_complex(5 + i % 3, 2 + (i / 3) % 3, &mut item_rng(seed, i)))
        .collect()
}

/// The `count` complexes of a run, in index order.
pub fn generate(cfg: &ProspectConfig) -> Result<Vec<SimplicialComplex>> {
    cfg.validate()?;
    let make = || {
        (0..cfg.count)
            .into_par_iter()
            .map(|i| random_pure_complex(cfg.vertices, cfg.dim + 1, &mut item_rng(cfg.seed, i)))
            .collect()
    };
    in_pool(cfg.threads, make)
}

fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::Usage(format!("cannot start {t} worker threads: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// A complex selected by the predicate.
#[derive(Clone, Debug, Serialize)]
pub struct Hit {
    pub index: usize,
    pub facets: Vec<Vec<String>>,
    pub depth: usize,
    pub serre_level: usize,
    pub flags: Flags,
    /// `b̃([Δ]_{>j})` for `j = 0..d−1`, each starting at degree −1.
    pub truncation_betti: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinPair {
    pub first: usize,
    pub second: usize,
    pub differing: Vec<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanResult {
    pub predicate: &'static str,
    pub field: FieldSpec,
    pub scanned: usize,
    pub hits: Vec<Hit>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub twins: Vec<TwinPair>,
}

struct Scanned {
    report: DiagnosticsReport,
    table: Vec<BettiVector>,
}

fn s2_gap(s: &Scanned) -> bool {
    let d = s.report.d;
    s.report.serre_level == 1
        && d >= 2
        && (0..d).all(|j| (0..2.min(d - j)).all(|i| s.table[j].get(i as isize - 1) == 0))
}

fn s2_noise(s: &Scanned) -> bool {
    s.report.serre_level >= 2 && s.table.first().is_some_and(|b| b.get(1) != 0)
}

fn differing_flags(a: &Flags, b: &Flags) -> Vec<&'static str> {
    let pairs = [
        ("pure", a.pure, b.pure),
        ("cohen_macaulay", a.cohen_macaulay, b.cohen_macaulay),
        ("buchsbaum", a.buchsbaum, b.buchsbaum),
        ("gorenstein_star", a.gorenstein_star, b.gorenstein_star),
        ("gorenstein", a.gorenstein, b.gorenstein),
        ("doubly_cm", a.doubly_cm, b.doubly_cm),
    ];
    pairs.iter().filter(|(_, x, y)| x != y).map(|(n, _, _)| *n).collect()
}

fn flag_key(f: &Flags) -> [bool; 6] {
    [f.pure, f.cohen_macaulay, f.buchsbaum, f.gorenstein_star, f.gorenstein, f.doubly_cm]
}

/// For each truncation table shared by complexes with different flags, one
/// pair per pair of distinct flag patterns, using the lowest indices.
fn twins(items: &[Scanned]) -> Vec<TwinPair> {
    type Key = (usize, Vec<Vec<usize>>);
    let mut groups: BTreeMap<Key, BTreeMap<[bool; 6], usize>> = BTreeMap::new();
    for (i, s) in items.iter().enumerate() {
        let key = (s.report.d, s.table.iter().map(|b| b.ranks().to_vec()).collect());
        groups
            .entry(key)
            .or_default()
            .entry(flag_key(&s.report.flags))
            .or_insert(i);
    }
    let mut out = Vec::new();
    for reps in groups.values() {
        let firsts: Vec<usize> = reps.values().copied().collect();
        for (a, &x) in firsts.iter().enumerate() {
            for &y in &firsts[a + 1..] {
                let (first, second) = (x.min(y), x.max(y));
                out.push(TwinPair {
                    first,
                    second,
                    differing: differing_flags(&items[first].report.flags, &items[second].report.flags),
                });
            }
        }
    }
    out.sort_by_key(|p| (p.first, p.second));
    out
}

/// Applies `predicate` to every complex of `corpus`.
pub fn scan_corpus(corpus: &[SimplicialComplex], predicate: Predicate, field: FieldSpec) -> Result<ScanResult> {
    let items: Vec<Scanned> = corpus
        .par_iter()
        .map(|c| {
            Ok(Scanned {
                report: analyze(c, field)?,
                table: truncation_table(c, field)?,
            })
        })
        .collect::<Result<_>>()?;
    let hit = |i: usize| {
        let s = &items[i];
        Hit {
            index: i,
            facets: corpus[i].canonical_facets(),
            depth: s.report.depth,
            serre_level: s.report.serre_level,
            flags: s.report.flags.clone(),
            truncation_betti: s.table.iter().map(|b| b.ranks().to_vec()).collect(),
        }
    };
    let (hits, pairs) = match predicate {
        Predicate::S2Gap => ((0..items.len()).filter(|&i| s2_gap(&items[i])).map(hit).collect(), vec![]),
        Predicate::S2Noise => ((0..items.len()).filter(|&i| s2_noise(&items[i])).map(hit).collect(), vec![]),
        Predicate::BettiTwin => {
            let pairs = twins(&items);
            let mut members: Vec<usize> = pairs.iter().flat_map(|p| [p.first, p.second]).collect();
            members.sort_unstable();
            members.dedup();
            (members.into_iter().map(hit).collect(), pairs)
        }
    };
    Ok(ScanResult {
        predicate: predicate.name(),
        field,
        scanned: corpus.len(),
        hits,
        twins: pairs,
    })
}

/// Generated corpus plus scan, with the run parameters echoed.
#[derive(Clone, Debug, Serialize)]
pub struct ProspectReport {
    pub vertices: usize,
    pub dim: usize,
    pub count: usize,
    pub seed: u64,
    #[serde(flatten)]
    pub scan: ScanResult,
}

impl ProspectReport {
    /// Stable JSON: no timings, fields in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

pub fn prospect(cfg: &ProspectConfig) -> Result<ProspectReport> {
    let corpus = generate(cfg)?;
    let scan = in_pool(cfg.threads, || scan_corpus(&corpus, cfg.predicate, cfg.field))??;
    Ok(ProspectReport {
        vertices: cfg.vertices,
        dim: cfg.dim,
        count: cfg.count,
        seed: cfg.seed,
        scan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_complexes_are_pure_and_cover_all_vertices() {
        for i in 0..50 {
            let c = random_pure_complex(6, 3, &mut item_rng(7, i));
            assert!(c.is_pure());
            assert_eq!(c.d(), 3);
            assert_eq!(c.vertex_count(), 6);
        }
    }

    #[test]
    fn streams_are_per_index() {
        let a = random_pure_complex(7, 3, &mut item_rng(1, 5));
        let b = random_pure_complex(7, 3, &mut item_rng(1, 5));
        assert_eq!(a, b);
    }

    #[test]
    fn config_validation() {
        let mut cfg = ProspectConfig::new(10, 2, 1, 0, Predicate::S2Gap);
        assert!(generate(&cfg).is_err());
        cfg.vertices = 2;
        assert!(generate(&cfg).is_err());
        assert!("nope".parse::<Predicate>().is_err());
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(6, 3).len(), 20);
        assert_eq!(combinations(4, 4), vec![vec![0, 1, 2, 3]]);
    }
}
