use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{CheckResult, Recorder};
use crate::balanced::BalancedComplex;
use crate::complex::{binomial, Face, SimplicialComplex, VertexId};
use crate::diagnostics::{depth_links, is_gorenstein_star, serre_level, subsets_of_ranks, LinkTable};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, BettiVector, FieldSpec};
use crate::nerve::nerve_family;
use crate::poset::{barycentric, face_label, truncated_subdivision};

/// Names accepted by [`run_check`], besides `all`.
pub const CHECK_NAMES: [&str; 6] = [
    "rank-selection",
    "serre-truncation",
    "subdivision",
    "euler",
    "gorenstein-truncation",
    "independent-removal",
];

/// Seed for the sampled independent sets of [`check_independent_removal`].
pub const REMOVAL_SEED: u64 = 0x5eed_1d5e;

/// Exhaustive independent-set enumeration up to this many vertices.
const EXHAUSTIVE_VERTICES: usize = 10;
const SAMPLED_SETS: usize = 200;
const FACESET_BUDGET: usize = 256;
const FACESET_SAMPLES: usize = 64;

/// `b̃([Δ]_{>j})` for `j = 0, …, d−1`.
pub fn truncation_table(c: &SimplicialComplex, field: FieldSpec) -> Result<Vec<BettiVector>> {
    if c.is_void() {
        return Err(Error::domain("truncations of the void complex"));
    }
    (0..c.d())
        .into_par_iter()
        .map(|j| reduced_betti(truncated_subdivision(c, j)?.complex(), field))
        .collect()
}

/// Unreduced `χ([Δ]_{>k})`, with `χ([Δ]_{>-1}) = 1` (the full simplex on the
/// facets) and `[Δ]_{>k} = {∅}` for `k ≥ d`.
fn chi_truncation(c: &SimplicialComplex, k: isize) -> Result<i64> {
    if k < 0 {
        return Ok(1);
    }
    if k as usize >= c.d() {
        return Ok(0);
    }
    Ok(truncated_subdivision(c, k as usize)?.complex().reduced_euler()? + 1)
}

fn fmt_set(s: &BTreeSet<usize>) -> String {
    format!("{{{}}}", s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
}

/// Stanley, S_ℓ preservation under rank selection, the Munkres bound and the
/// equality case of dropping one color class.
pub fn check_rank_selection(b: &BalancedComplex, field: FieldSpec) -> Result<Vec<CheckResult>> {
    let c = b.complex();
    let mut rec = Recorder::new(c, field, "rank-selection");
    let d = b.rank();
    let depth = depth_links(c, field)?;
    let serre = serre_level(c, field)?;
    let cm = depth == c.d();

    let sets: Vec<BTreeSet<usize>> = subsets_of_ranks(d).collect();
    let selected: Vec<(usize, usize, usize)> = sets
        .par_iter()
        .map(|s| {
            let sub = b.rank_select(s)?;
            let sc = sub.complex();
            Ok((depth_links(sc, field)?, serre_level(sc, field)?, sc.d()))
        })
        .collect::<Result<_>>()?;

    if cm {
        let fails = sets
            .iter()
            .zip(&selected)
            .filter(|(_, (dep, _, dd))| dep != dd)
            .map(|(s, (dep, _, dd))| format!("S={} has depth {dep} < {dd}", fmt_set(s)))
            .collect();
        rec.verdict("stanley", sets.len(), fails);
    } else {
        rec.inapplicable("stanley", format!("not Cohen-Macaulay (depth {depth} < {})", c.d()));
    }

    let fails = sets
        .iter()
        .zip(&selected)
        .filter(|(s, (_, lvl, _))| *lvl < serre.min(s.len()))
        .map(|(s, (_, lvl, _))| format!("S={} has Serre level {lvl} < min({serre}, {})", fmt_set(s), s.len()))
        .collect();
    rec.verdict("serre-preserved", sets.len(), fails);

    let drops: Vec<usize> = (1..=d)
        .into_par_iter()
        .map(|i| depth_links(b.rank_drop(&BTreeSet::from([i]))?.complex(), field))
        .collect::<Result<_>>()?;
    let fails = drops
        .iter()
        .enumerate()
        .filter(|(_, &dep)| dep + 1 < depth)
        .map(|(i, dep)| format!("dropping class {} gives depth {dep} < {depth} - 1", i + 1))
        .collect();
    rec.verdict("munkres", d, fails);

    let top = reduced_betti(c, field)?;
    if depth >= 1 && top.get(depth as isize - 1) == 0 {
        let fails = if drops.iter().any(|&dep| dep + 1 == depth) {
            vec![]
        } else {
            vec![format!("no class drop reaches depth {}: {drops:?}", depth - 1)]
        };
        rec.verdict("drop-equality", 1, fails);
    } else {
        rec.inapplicable("drop-equality", format!("top homology b̃_{} is nonzero", depth as isize - 1));
    }
    Ok(rec.finish())
}

/// Necessity and sufficiency of truncation-homology vanishing for `(S_ℓ)`.
pub fn check_serre_truncation(c: &SimplicialComplex, field: FieldSpec) -> Result<Vec<CheckResult>> {
    let mut rec = Recorder::new(c, field, "serre-truncation");
    let d = c.d();
    let level = serre_level(c, field)?;
    let table = truncation_table(c, field)?;
    let vanish = |i: usize, j: usize| table[j].get(i as isize - 1) == 0;

    let mut fails = Vec::new();
    let mut tested = 0;
    for j in 0..d {
        for i in 0..level.min(d - j) {
            tested += 1;
            if !vanish(i, j) {
                fails.push(format!("b̃_{}([Δ]_{{>{j}}}) ≠ 0 although serre_level = {level}", i as isize - 1));
            }
        }
    }
    rec.verdict("necessity", tested, fails);

    // First i with nonvanishing truncation homology inside i + j < d.
    let first_bad: Option<(usize, usize)> =
        (0..d).find_map(|i| (0..d - i).find(|&j| !vanish(i, j)).map(|j| (i, j)));
    if d == 0 {
        rec.inapplicable("sufficiency", "d = 0");
        return Ok(rec.finish());
    }
    // Largest ℓ with vanishing for all i ≤ ℓ, and for all i < ℓ.
    let ell_le = first_bad.map_or(d, |(i, _)| i.saturating_sub(1));
    let ell_lt = first_bad.map_or(d, |(i, _)| i);
    let bound = ell_le.min(d);
    let fails = if bound >= 1 && level < bound {
        vec![format!("truncations vanish for i ≤ {ell_le} but serre_level = {level}")]
    } else {
        vec![]
    };
    rec.verdict("sufficiency", 1, fails);

    let mut notes = Vec::new();
    if ell_lt.min(d) > level {
        notes.push(format!(
            "serre1 converse fails: truncations vanish for all i < {} yet serre_level = {level}",
            ell_lt.min(d)
        ));
    }
    if let Some((i, j)) = first_bad {
        if level >= i && i >= 1 {
            notes.push(format!(
                "serre2 converse fails: serre_level = {level} yet b̃_{}([Δ]_{{>{j}}}) ≠ 0",
                i as isize - 1
            ));
        }
    }
    rec.verdict_with_notes("converse", 1, vec![], notes);
    Ok(rec.finish())
}

/// Relabel `[lk T]_{>0}` along `G ↦ T ∪ G` into the labels of `[Δ]_{>|T|-1}`.
fn transported_link(c: &SimplicialComplex, t: &Face) -> Result<SimplicialComplex> {
    let lk = c.link(t);
    let sd = barycentric(&lk)?;
    if sd.is_irrelevant() {
        return Ok(sd);
    }
    let by_label: HashMap<String, &Face> = lk
        .faces()
        .iter()
        .filter(|g| !g.is_empty())
        .map(|g| (face_label(&lk, g), g))
        .collect();
    let rename = |label: &str| -> String {
        let g = by_label[label];
        let ids = g
            .vertices()
            .iter()
            .map(|&u| c.vertex_id(lk.label(u)).expect("link vertices belong to the complex"));
        face_label(c, &t.union(&ids.collect()))
    };
    let facets: Vec<Vec<String>> = sd
        .labeled_facets()
        .iter()
        .map(|f| f.iter().map(|l| rename(l)).collect())
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// Subdivision, link transport and the higher-nerve identities.
pub fn check_subdivision(c: &SimplicialComplex, field: FieldSpec) -> Result<Vec<CheckResult>> {
    let mut rec = Recorder::new(c, field, "subdivision");
    let d = c.d();
    let betti = reduced_betti(c, field)?;
    let sd_betti = reduced_betti(&barycentric(c)?, field)?;
    let fails = if betti == sd_betti {
        vec![]
    } else {
        vec![format!("{betti:?} vs {sd_betti:?}")]
    };
    rec.verdict("realization", 1, fails);

    let truncs: Vec<SimplicialComplex> = (0..d)
        .into_par_iter()
        .map(|j| truncated_subdivision(c, j).map(|b| b.into_complex()))
        .collect::<Result<_>>()?;
    let nonempty: Vec<&Face> = c.faces().iter().filter(|t| !t.is_empty()).collect();
    let fails: Vec<String> = nonempty
        .par_iter()
        .map(|t| -> Result<Option<String>> {
            let left = transported_link(c, t)?;
            let host = &truncs[t.len() - 1];
            let rho = host
                .vertex_id(&face_label(c, t))
                .ok_or_else(|| Error::Consistency("face missing from its truncation".into()))?;
            let right = host.link(&Face::from_sorted(vec![rho]));
            Ok((left != right).then(|| format!("T={}: {left:?} vs {right:?}", face_label(c, t))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    rec.verdict("isolinks", nonempty.len(), fails);

    if d == 0 {
        for name in ["nerve-truncation", "nesting", "vanishing-band", "f-recovery"] {
            rec.inapplicable(name, "no nerves when d = 0");
        }
        return Ok(rec.finish());
    }
    let fam = nerve_family(c)?;
    let nerve_betti: Vec<BettiVector> = fam
        .members()
        .par_iter()
        .map(|n| reduced_betti(n, field))
        .collect::<Result<_>>()?;
    let trunc_betti: Vec<BettiVector> = truncs
        .par_iter()
        .map(|k| reduced_betti(k, field))
        .collect::<Result<_>>()?;

    let fails = (0..d)
        .filter(|&k| trunc_betti[k] != nerve_betti[k])
        .map(|k| format!("k={k}: [Δ]_>k {:?} vs N_{} {:?}", trunc_betti[k], k + 1, nerve_betti[k]))
        .collect();
    rec.verdict("nerve-truncation", d, fails);

    let mut fails = Vec::new();
    for i in 1..d {
        let (big, small) = (fam.get(i).unwrap(), fam.get(i + 1).unwrap());
        for f in small.facets() {
            let inside = big
                .face_of_labels(&small.face_labels(f))
                .map(|g| big.contains_face(&g))
                .unwrap_or(false);
            if !inside {
                fails.push(format!("facet {{{}}} of N_{} not in N_{i}", small.face_labels(f).join(","), i + 1));
            }
        }
    }
    rec.verdict("nesting", d.saturating_sub(1), fails);

    let mut fails = Vec::new();
    for (j, b) in nerve_betti.iter().enumerate() {
        for deg in b.nonzero_degrees() {
            let i = (deg + 1) as usize;
            if i + j > d {
                fails.push(format!("b̃_{deg}(N_{}) ≠ 0 with i + j = {} > d", j + 1, i + j));
            }
        }
    }
    rec.verdict("vanishing-band", d, fails);

    let f = c.f_vector()?;
    let chi: Vec<i64> = fam
        .members()
        .iter()
        .map(|n| n.reduced_euler().map(|e| e + 1))
        .collect::<Result<_>>()?;
    let fails = (0..d as i64)
        .filter_map(|i| {
            let sum: i64 = (i..d as i64).map(|j| binomial(j, i) * chi[j as usize]).sum();
            let want = f.get(i as isize) as i64;
            (sum != want).then(|| format!("f_{i} = {want} but the nerve sum gives {sum}"))
        })
        .collect();
    rec.verdict("f-recovery", d, fails);
    Ok(rec.finish())
}

/// The link counting identity and the Euler-characteristic identities for
/// truncations. The latter require purity.
pub fn check_euler_identities(c: &SimplicialComplex) -> Result<Vec<CheckResult>> {
    let field = FieldSpec::RATIONALS;
    let mut rec = Recorder::new(c, field, "euler");
    let d = c.d();
    let f = c.f_vector()?;
    // Per cardinality k: summed link f-vectors and summed reduced link Euler characteristics.
    let mut link_f = vec![vec![0i64; d + 1]; d + 1];
    let mut link_chi = vec![0i64; d + 1];
    for t in c.faces() {
        let lk = c.link(t);
        let lf = lk.f_vector()?;
        for (idx, &n) in lf.entries().iter().enumerate() {
            link_f[t.len()][idx] += n as i64;
        }
        link_chi[t.len()] += lk.reduced_euler()?;
    }

    let mut fails = Vec::new();
    let mut tested = 0;
    for k in 0..=d {
        for i in 0..=d - k {
            tested += 1;
            let lhs = link_f[k][i];
            let rhs = binomial((i + k) as i64, k as i64) * f.get((i + k) as isize - 1) as i64;
            if lhs != rhs {
                fails.push(format!("k={k}, i={i}: {lhs} ≠ {rhs}"));
            }
        }
    }
    rec.verdict("counting", tested, fails);

    if !c.is_pure() {
        rec.inapplicable("fixedconj", "not pure");
        rec.inapplicable("eulercor", "not pure");
        return Ok(rec.finish());
    }
    let chi: Vec<i64> = (-1..=d as isize)
        .map(|k| chi_truncation(c, k))
        .collect::<Result<_>>()?;
    let chi_at = |k: isize| chi[(k + 1) as usize];

    let fails = (0..=d)
        .filter_map(|k| {
            let rhs = chi_at(k as isize) - chi_at(k as isize - 1);
            (link_chi[k] != rhs).then(|| format!("k={k}: {} ≠ {rhs}", link_chi[k]))
        })
        .collect();
    rec.verdict("fixedconj", d + 1, fails);

    let mut fails = Vec::new();
    let mut tested = 0;
    for i in 0..=d {
        for j in 0..=i {
            tested += 1;
            let lhs: i64 = link_chi[j..=i].iter().sum();
            let rhs = chi_at(i as isize) - chi_at(j as isize - 1);
            if lhs != rhs {
                fails.push(format!("j={j}, i={i}: {lhs} ≠ {rhs}"));
            }
        }
        // Starting at k = 0 the right side is the reduced characteristic.
        tested += 1;
        let lhs: i64 = link_chi[..=i].iter().sum();
        let reduced = chi_at(i as isize) - 1;
        if lhs != reduced {
            fails.push(format!("i={i}: {lhs} ≠ χ̃([Δ]_>{i}) = {reduced}"));
        }
    }
    rec.verdict("eulercor", tested, fails);
    Ok(rec.finish())
}

/// Truncation homology of a Gorenstein* complex and the partial converse.
pub fn check_gorenstein_truncation(c: &SimplicialComplex, field: FieldSpec) -> Result<Vec<CheckResult>> {
    let mut rec = Recorder::new(c, field, "gorenstein-truncation");
    let d = c.d();
    let gstar = is_gorenstein_star(c, field)?;
    let table = truncation_table(c, field)?;
    let mut mismatches = Vec::new();
    for (j, b) in table.iter().enumerate() {
        let skel = reduced_betti(&c.skeleton(j as isize - 1)?, field)?.get(j as isize - 1);
        for i in 0..=d + 1 {
            let want = if i == d - j { skel } else { 0 };
            let got = b.get(i as isize - 1);
            if got != want {
                mismatches.push(format!("i={i}, j={j}: b̃_{}([Δ]_>{j}) = {got}, formula gives {want}", i as isize - 1));
            }
        }
    }
    let formula = mismatches.is_empty();
    if gstar {
        rec.verdict("forward", d, mismatches);
    } else {
        rec.inapplicable("forward", "not Gorenstein*");
    }

    let links = LinkTable::new(c, field);
    let all_nonacyclic = (0..c.faces().len()).all(|i| !links.betti(i).is_acyclic());
    if all_nonacyclic && formula {
        let fails = if gstar {
            vec![]
        } else {
            vec!["formula holds and every link is non-acyclic, but not Gorenstein*".to_string()]
        };
        rec.verdict("converse", 1, fails);
    } else {
        rec.inapplicable(
            "converse",
            if all_nonacyclic { "formula fails" } else { "some link is acyclic" },
        );
    }
    Ok(rec.finish())
}

/// Independent vertex sets: all of them for small vertex counts, else a seeded sample.
fn independent_vertex_sets(c: &SimplicialComplex, rng: &mut ChaCha8Rng) -> Vec<Vec<VertexId>> {
    let n = c.vertex_count();
    let adjacent = |a: VertexId, b: VertexId| c.contains_face(&[a, b].into_iter().collect());
    if n <= EXHAUSTIVE_VERTICES {
        let mut out = Vec::new();
        for m in 1u32..1 << n {
            let j: Vec<VertexId> = (0..n as u32).filter(|i| m >> i & 1 == 1).map(VertexId).collect();
            if j.iter().enumerate().all(|(a, &u)| j[a + 1..].iter().all(|&w| !adjacent(u, w))) {
                out.push(j);
            }
        }
        return out;
    }
    let mut seen = BTreeSet::new();
    let mut order: Vec<VertexId> = c.vertices().collect();
    for _ in 0..SAMPLED_SETS * 4 {
        if seen.len() >= SAMPLED_SETS {
            break;
        }
        order.shuffle(rng);
        let target = rng.gen_range(1..=n);
        let mut j: Vec<VertexId> = Vec::new();
        for &v in &order {
            if j.len() >= target {
                break;
            }
            if j.iter().all(|&u| !adjacent(u, v)) {
                j.push(v);
            }
        }
        j.sort_unstable();
        seen.insert(j);
    }
    seen.into_iter().collect()
}

/// Independent face sets: a bounded depth-first enumeration plus seeded samples.
fn independent_face_sets(c: &SimplicialComplex, rng: &mut ChaCha8Rng) -> Vec<Vec<Face>> {
    let faces: Vec<&Face> = c.faces().iter().filter(|f| !f.is_empty()).collect();
    let compatible = |a: &Face, b: &Face| !c.contains_face(&a.union(b));
    let mut out: BTreeSet<Vec<Face>> = BTreeSet::new();
    let mut stack: Vec<usize> = Vec::new();

    fn dfs(
        start: usize,
        faces: &[&Face],
        stack: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<Face>>,
        ok: &dyn Fn(&Face, &Face) -> bool,
    ) {
        for k in start..faces.len() {
            if out.len() >= FACESET_BUDGET {
                return;
            }
            if stack.iter().all(|&s| ok(faces[s], faces[k])) {
                stack.push(k);
                out.insert(stack.iter().map(|&s| faces[s].clone()).collect());
                dfs(k + 1, faces, stack, out, ok);
                stack.pop();
            }
        }
    }
    dfs(0, &faces, &mut stack, &mut out, &compatible);

    let mut order = faces.clone();
    for _ in 0..FACESET_SAMPLES {
        order.shuffle(rng);
        let mut a: Vec<Face> = Vec::new();
        for f in &order {
            if a.iter().all(|g| compatible(g, f)) && (a.is_empty() || rng.gen_bool(0.5)) {
                a.push((*f).clone());
            }
        }
        a.sort();
        out.insert(a);
    }
    out.into_iter().collect()
}

/// Depth and Serre bounds after removing independent vertex or face sets.
pub fn check_independent_removal(c: &SimplicialComplex, field: FieldSpec) -> Result<Vec<CheckResult>> {
    let mut rec = Recorder::new(c, field, "independent-removal");
    let depth = depth_links(c, field)?;
    let level = serre_level(c, field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(REMOVAL_SEED);
    let sets = independent_vertex_sets(c, &mut rng);
    let label = |j: &[VertexId]| {
        format!(
            "J={{{}}}",
            j.iter().map(|&v| c.label(v)).collect::<Vec<_>>().join(",")
        )
    };

    struct Removal {
        depth: usize,
        serre: Option<usize>,
        d: usize,
        matches_antistar: bool,
    }
    let removals: Vec<Removal> = sets
        .par_iter()
        .map(|j| -> Result<Removal> {
            let ast = c.antistar(j);
            let excellent = c.is_excellent_set(j)?;
            let via_faces = c.remove_independent_faces(&crate::complex::singletons(j))?;
            Ok(Removal {
                depth: depth_links(&ast, field)?,
                serre: if excellent { Some(serre_level(&ast, field)?) } else { None },
                d: ast.d(),
                matches_antistar: via_faces == ast,
            })
        })
        .collect::<Result<_>>()?;

    let fails = sets
        .iter()
        .zip(&removals)
        .filter(|(_, r)| !r.matches_antistar)
        .map(|(j, _)| format!("{}: face removal differs from the antistar", label(j)))
        .collect();
    rec.verdict("singletons-antistar", sets.len(), fails);

    let fails = sets
        .iter()
        .zip(&removals)
        .filter(|(_, r)| r.depth + 1 < depth)
        .map(|(j, r)| format!("{}: depth {} < {depth} - 1", label(j), r.depth))
        .collect();
    rec.verdict("hibiindep", sets.len(), fails);

    let excellent: Vec<_> = sets.iter().zip(&removals).filter(|(_, r)| r.serre.is_some()).collect();
    if excellent.is_empty() {
        rec.inapplicable("excellentserre", "no excellent vertex set");
    } else {
        let fails = excellent
            .iter()
            .filter(|(_, r)| r.serre.unwrap() < level.min(r.d))
            .map(|(j, r)| format!("{}: serre_level {} < min({level}, {})", label(j), r.serre.unwrap(), r.d))
            .collect();
        rec.verdict("excellentserre", excellent.len(), fails);
    }

    // Minimal faces T with b̃_{ℓ-|T|-1}(lk T) ≠ 0, when b̃_{ℓ-1}(Δ) = 0.
    let links = LinkTable::new(c, field);
    let top_vanishes = depth >= 1 && links.betti(0).get(depth as isize - 1) == 0;
    if top_vanishes {
        let faces = c.faces();
        let witnesses: Vec<&Face> = (0..faces.len())
            .filter(|&i| faces[i].len() <= depth && links.betti(i).get(depth as isize - faces[i].len() as isize - 1) != 0)
            .map(|i| &faces[i])
            .collect();
        let smallest = witnesses.iter().map(|t| t.len()).min().unwrap_or(0);
        let minimal: Vec<&Face> = witnesses.into_iter().filter(|t| t.len() == smallest).collect();
        let mut tested = 0;
        let mut fails = Vec::new();
        for (j, r) in sets.iter().zip(&removals) {
            let hit = minimal.iter().any(|t| j.iter().any(|&b| t.contains(b)));
            if hit {
                tested += 1;
                if r.depth + 1 != depth {
                    fails.push(format!("{}: depth {} ≠ {depth} - 1", label(j), r.depth));
                }
            }
        }
        if tested == 0 {
            rec.inapplicable("depthindep", "no independent set meets a minimal witness");
        } else {
            rec.verdict("depthindep", tested, fails);
        }
    } else {
        rec.inapplicable("depthindep", "top homology below depth is nonzero");
    }

    let face_sets = independent_face_sets(c, &mut rng);
    let fails: Vec<String> = face_sets
        .par_iter()
        .map(|a| -> Result<Option<String>> {
            let removed = c.remove_independent_faces(a)?;
            let dep = depth_links(&removed, field)?;
            Ok((dep + 1 < depth).then(|| {
                let names: Vec<String> = a.iter().map(|f| face_label(c, f)).collect();
                format!("A={{{}}}: depth {dep} < {depth} - 1", names.join(","))
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    rec.verdict("genhibi", face_sets.len(), fails);
    Ok(rec.finish())
}

/// Runs the named check family (or `all`) on `c`. The rank-selection family
/// runs on the balanced complex `[Δ]_{>0}`.
pub fn run_check(name: &str, c: &SimplicialComplex, field: FieldSpec) -> Result<Vec<CheckResult>> {
    if c.is_void() {
        return Err(Error::domain("checks need a nonvoid complex"));
    }
    let names: Vec<&str> = match name {
        "all" => CHECK_NAMES.to_vec(),
        n if CHECK_NAMES.contains(&n) => vec![n],
        n => {
            return Err(Error::Usage(format!(
                "unknown check {n:?}; expected all or one of {}",
                CHECK_NAMES.join(", ")
            )))
        }
    };
    let mut out = Vec::new();
    for n in names {
        let part = match n {
            "rank-selection" => {
                if c.is_irrelevant() {
                    let mut rec = Recorder::new(c, field, "rank-selection");
                    rec.inapplicable("all", "{∅} has no subdivision vertices");
                    rec.finish()
                } else {
                    check_rank_selection(&truncated_subdivision(c, 0)?, field)?
                }
            }
            "serre-truncation" => check_serre_truncation(c, field)?,
            "subdivision" => check_subdivision(c, field)?,
            "euler" => check_euler_identities(c)?,
            "gorenstein-truncation" => check_gorenstein_truncation(c, field)?,
            "independent-removal" => check_independent_removal(c, field)?,
            _ => unreachable!(),
        };
        out.extend(part);
    }
    Ok(out)
}
