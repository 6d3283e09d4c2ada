//! Depth, Serre's condition and the Cohen-Macaulay family of predicates.
//!
//! Depth is computed three ways: from link homology, from the higher nerves,
//! and from rank selection of the face poset. [`analyze`] runs all three and
//! refuses to report if they disagree.
//!
//! The nerve formula minimizes over *nonvanishing* nerve homology: the
//! vanishing reading would give 1 or 2 for nearly every complex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::balanced::BalancedComplex;
use crate::complex::{FVector, Face, HVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, BettiVector, FieldSpec};
use crate::nerve::nerve_family;
use crate::poset::{face_poset, order_complex};

/// Lazily computed `b̃(lk T)` for every face `T`, shared between predicates.
pub(crate) struct LinkTable<'a> {
    c: &'a SimplicialComplex,
    field: FieldSpec,
    cache: Vec<OnceLock<BettiVector>>,
}

impl<'a> LinkTable<'a> {
    pub(crate) fn new(c: &'a SimplicialComplex, field: FieldSpec) -> Self {
        let cache = (0..c.faces().len()).map(|_| OnceLock::new()).collect();
        LinkTable { c, field, cache }
    }

    pub(crate) fn faces(&self) -> &'a [Face] {
        self.c.faces()
    }

    pub(crate) fn betti(&self, idx: usize) -> &BettiVector {
        self.cache[idx].get_or_init(|| {
            let lk = self.c.link(&self.c.faces()[idx]);
            reduced_betti(&lk, self.field).expect("links of faces are nonvoid")
        })
    }

    /// Fill the whole table in parallel.
    fn fill(&self) {
        (0..self.cache.len()).into_par_iter().for_each(|i| {
            self.betti(i);
        });
    }
}

/// Why a property fails: a face and, where relevant, the homology degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub face: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<isize>,
    pub reason: String,
}

impl Witness {
    fn at(c: &SimplicialComplex, face: &Face, degree: Option<isize>, reason: impl Into<String>) -> Self {
        Witness {
            face: c.face_labels(face),
            degree,
            reason: reason.into(),
        }
    }
}

/// Outcome of a predicate, with a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn no(w: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }
}

fn nonvoid(c: &SimplicialComplex) -> Result<()> {
    if c.is_void() {
        Err(Error::domain("the void complex has no depth"))
    } else {
        Ok(())
    }
}

/// A pair `(T, i)` realizing `depth = i + |T|` via `b̃_{i-1}(lk T) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDepth {
    pub depth: usize,
    pub face: Face,
    pub i: usize,
}

fn depth_from_table(t: &LinkTable<'_>) -> LinkDepth {
    let c = t.c;
    // Facets have b̃_{-1}(lk F) = 1, so the smallest facet bounds the answer.
    let small = c.facets().iter().min_by_key(|f| f.len()).expect("nonvoid");
    let mut best = LinkDepth {
        depth: small.len(),
        face: small.clone(),
        i: 0,
    };
    for (idx, face) in t.faces().iter().enumerate() {
        if face.len() >= best.depth {
            break;
        }
        let b = t.betti(idx);
        for i in 0..best.depth - face.len() {
            if b.get(i as isize - 1) != 0 {
                best = LinkDepth {
                    depth: i + face.len(),
                    face: face.clone(),
                    i,
                };
                break;
            }
        }
    }
    best
}

/// `min{i + |T| : b̃_{i-1}(lk T) ≠ 0}` with a realizing pair.
pub fn depth_links_witness(c: &SimplicialComplex, field: FieldSpec) -> Result<LinkDepth> {
    nonvoid(c)?;
    Ok(depth_from_table(&LinkTable::new(c, field)))
}

pub fn depth_links(c: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    Ok(depth_links_witness(c, field)?.depth)
}

/// `inf{i + j : b̃_{i-1}(N_{j+1}) ≠ 0, 0 ≤ j < d}`, capped at `d`.
///
/// The cap covers the complexes whose nerves are all acyclic, such as a
/// simplex, where every `N_i` is a point.
pub fn depth_nerves(c: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    nonvoid(c)?;
    let d = c.d();
    if d == 0 {
        return Ok(0);
    }
    let fam = nerve_family(c)?;
    let mut best = d;
    for j in 0..d {
        if j >= best {
            break;
        }
        let b = reduced_betti(fam.get(j + 1).expect("j + 1 ≤ d"), field)?;
        if let Some(deg) = b.first_nonzero() {
            best = best.min((deg + 1) as usize + j);
        }
    }
    Ok(best)
}

/// Depth from the rank-selection formula, with every minimizing `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankDepth {
    pub depth: usize,
    /// Each minimizing `S` (1-based ranks) with the `i` it attains.
    pub minimizers: Vec<(Vec<usize>, usize)>,
}

pub(crate) fn subsets_of_ranks(d: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0u64..1 << d).map(move |m| (1..=d).filter(|&i| m >> (i - 1) & 1 == 1).collect())
}

fn minimize_over_ranks(
    d: usize,
    homology: impl Fn(&BTreeSet<usize>) -> Result<BettiVector> + Sync,
) -> Result<RankDepth> {
    let sets: Vec<BTreeSet<usize>> = subsets_of_ranks(d).collect();
    let values: Vec<Option<usize>> = sets
        .par_iter()
        .map(|s| -> Result<Option<usize>> {
            let b = homology(s)?;
            Ok(b.first_nonzero().map(|deg| (deg + 1) as usize))
        })
        .collect::<Result<_>>()?;
    let depth = sets
        .iter()
        .zip(&values)
        .filter_map(|(s, v)| v.map(|i| i + s.len()))
        .min()
        .expect("S = [d] always contributes");
    let minimizers = sets
        .iter()
        .zip(&values)
        .filter_map(|(s, v)| match v {
            Some(i) if i + s.len() == depth => Some((s.iter().copied().collect(), *i)),
            _ => None,
        })
        .collect();
    Ok(RankDepth { depth, minimizers })
}

/// `min{i + |S| : b̃_{i-1}(O(P̃_S)) ≠ 0}` for the face poset `P` of `c`.
pub fn depth_poset(c: &SimplicialComplex, field: FieldSpec) -> Result<RankDepth> {
    nonvoid(c)?;
    if c.is_irrelevant() {
        return Ok(RankDepth {
            depth: 0,
            minimizers: vec![(vec![], 0)],
        });
    }
    let p = face_poset(c)?;
    minimize_over_ranks(p.rank(), |s| {
        reduced_betti(order_complex(&p.restrict_heights(s)).complex(), field)
    })
}

/// `min{i + |S| : b̃_{i-1}(Δ̃_S) ≠ 0}` over the color classes of `b`.
pub fn depth_balanced(b: &BalancedComplex, field: FieldSpec) -> Result<RankDepth> {
    nonvoid(b.complex())?;
    minimize_over_ranks(b.rank(), |s| reduced_betti(b.rank_drop(s)?.complex(), field))
}

/// Rank-selection depth through the face poset.
pub fn depth_rank_selection(c: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    Ok(depth_poset(c, field)?.depth)
}

/// First violation `(T, i)` of the Serre band, if any: `b̃_{i-1}(lk T) ≠ 0`
/// with `i + |T| < d` and `i` as small as possible.
fn serre_violation(t: &LinkTable<'_>) -> Option<(usize, usize)> {
    let d = t.c.d();
    let mut found: Option<(usize, usize)> = None;
    for (idx, face) in t.faces().iter().enumerate() {
        if face.len() >= d {
            break;
        }
        let bound = found.map_or(d - face.len(), |(_, m)| m.min(d - face.len()));
        if bound == 0 {
            continue;
        }
        let b = t.betti(idx);
        if let Some(i) = (0..bound).find(|&i| b.get(i as isize - 1) != 0) {
            found = Some((idx, i));
            if i <= 1 {
                break;
            }
        }
    }
    found
}

fn serre_from_table(t: &LinkTable<'_>) -> (usize, Option<Witness>) {
    let d = t.c.d();
    match serre_violation(t) {
        None => (d, None),
        Some((idx, i)) => {
            let face = &t.faces()[idx];
            let w = Witness::at(
                t.c,
                face,
                Some(i as isize - 1),
                format!("link has homology in degree {} with i + |T| = {} < d", i as isize - 1, i + face.len()),
            );
            (i.clamp(1, d), Some(w))
        }
    }
}

/// Largest `ℓ ∈ [1, d]` with `(S_ℓ)`; `{∅}` gets 0.
pub fn serre_level(c: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    nonvoid(c)?;
    Ok(serre_from_table(&LinkTable::new(c, field)).0)
}

pub fn is_cohen_macaulay(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(depth_links(c, field)? == c.d())
}

fn buchsbaum_from_table(t: &LinkTable<'_>) -> Verdict {
    let c = t.c;
    if !c.is_pure() {
        let f = c.facets().iter().min_by_key(|f| f.len()).unwrap();
        return Verdict::no(Witness::at(c, f, None, "not pure: facet smaller than d"));
    }
    let d = c.d();
    for (idx, face) in t.faces().iter().enumerate() {
        if face.is_empty() {
            continue;
        }
        if face.len() >= d {
            break;
        }
        let b = t.betti(idx);
        if let Some(i) = (0..d - face.len()).find(|&i| b.get(i as isize - 1) != 0) {
            return Verdict::no(Witness::at(
                c,
                face,
                Some(i as isize - 1),
                "link of a nonempty face has homology below the top degree",
            ));
        }
    }
    Verdict::yes()
}

fn gorenstein_star_from_table(t: &LinkTable<'_>) -> Verdict {
    let c = t.c;
    let d = c.d();
    for (idx, face) in t.faces().iter().enumerate() {
        let top = (d - face.len()) as isize - 1;
        let b = t.betti(idx);
        let ok = b.get(top) == 1 && b.nonzero_degrees().all(|deg| deg == top);
        if !ok {
            let bad = b.nonzero_degrees().find(|&deg| deg != top).unwrap_or(top);
            return Verdict::no(Witness::at(
                c,
                face,
                Some(bad),
                format!("link homology is not a single copy of the field in degree {top}"),
            ));
        }
    }
    Verdict::yes()
}

pub fn check_buchsbaum(c: &SimplicialComplex, field: FieldSpec) -> Result<Verdict> {
    nonvoid(c)?;
    Ok(buchsbaum_from_table(&LinkTable::new(c, field)))
}

pub fn check_gorenstein_star(c: &SimplicialComplex, field: FieldSpec) -> Result<Verdict> {
    nonvoid(c)?;
    Ok(gorenstein_star_from_table(&LinkTable::new(c, field)))
}

/// Gorenstein: the core is Gorenstein*.
pub fn check_gorenstein(c: &SimplicialComplex, field: FieldSpec) -> Result<Verdict> {
    check_gorenstein_star(&c.core()?, field)
}

/// Cohen-Macaulay, and every vertex antistar is Cohen-Macaulay of the same dimension.
pub fn check_doubly_cm(c: &SimplicialComplex, field: FieldSpec) -> Result<Verdict> {
    let links = depth_links_witness(c, field)?;
    Ok(doubly_cm_given(c, field, &links))
}

fn doubly_cm_given(c: &SimplicialComplex, field: FieldSpec, links: &LinkDepth) -> Verdict {
    let d = c.d();
    if links.depth != d {
        return Verdict::no(Witness::at(
            c,
            &links.face,
            Some(links.i as isize - 1),
            "not Cohen-Macaulay",
        ));
    }
    for v in c.vertices() {
        let ast = c.antistar(&[v]);
        let face = Face::from_sorted(vec![v]);
        if ast.dim() != c.dim() {
            return Verdict::no(Witness::at(c, &face, None, "removing the vertex lowers the dimension"));
        }
        let dep = depth_links(&ast, field).expect("antistar of a vertex is nonvoid");
        if dep != d {
            return Verdict::no(Witness::at(
                c,
                &face,
                None,
                format!("antistar of the vertex has depth {dep} < {d}"),
            ));
        }
    }
    Verdict::yes()
}

pub fn is_buchsbaum(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(check_buchsbaum(c, field)?.holds)
}

pub fn is_gorenstein_star(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(check_gorenstein_star(c, field)?.holds)
}

pub fn is_gorenstein(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(check_gorenstein(c, field)?.holds)
}

pub fn is_doubly_cm(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    Ok(check_doubly_cm(c, field)?.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub pure: bool,
    pub cohen_macaulay: bool,
    pub buchsbaum: bool,
    pub gorenstein_star: bool,
    pub gorenstein: bool,
    pub doubly_cm: bool,
}

/// Everything [`analyze`] computes about one complex over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagnosticsReport {
    pub field: FieldSpec,
    pub vertices: usize,
    pub facets: usize,
    pub dim: isize,
    pub d: usize,
    pub f_vector: FVector,
    pub h_vector: HVector,
    pub reduced_euler: i64,
    pub betti: BettiVector,
    pub depth: usize,
    pub depth_links: usize,
    pub depth_nerves: usize,
    pub depth_rank: usize,
    pub rank_minimizers: Vec<(Vec<usize>, usize)>,
    pub serre_level: usize,
    pub flags: Flags,
    /// Flags computed from criteria outside the core theory.
    pub extensions: Vec<&'static str>,
    pub witnesses: BTreeMap<String, Witness>,
}

/// Full diagnostics. Fails with [`Error::Consistency`] if the depth routes disagree.
pub fn analyze(c: &SimplicialComplex, field: FieldSpec) -> Result<DiagnosticsReport> {
    nonvoid(c)?;
    let table = LinkTable::new(c, field);
    table.fill();
    let ((links, nerves), rank) = rayon::join(
        || (depth_from_table(&table), depth_nerves(c, field)),
        || depth_poset(c, field),
    );
    let nerves = nerves?;
    let rank = rank?;
    if links.depth != nerves || links.depth != rank.depth {
        return Err(Error::Consistency(format!(
            "depth by links {}, by nerves {}, by rank selection {}",
            links.depth, nerves, rank.depth
        )));
    }
    let depth = links.depth;
    let (serre, serre_w) = serre_from_table(&table);
    let cm = depth == c.d();
    if cm != (serre == c.d()) {
        return Err(Error::Consistency(format!(
            "depth {depth} and Serre level {serre} disagree on Cohen-Macaulayness"
        )));
    }
    let buchs = buchsbaum_from_table(&table);
    let gstar = gorenstein_star_from_table(&table);
    let gor = check_gorenstein(c, field)?;
    let dcm = doubly_cm_given(c, field, &links);

    let mut witnesses = BTreeMap::new();
    if !cm {
        witnesses.insert(
            "cohen_macaulay".to_string(),
            Witness::at(c, &links.face, Some(links.i as isize - 1), format!("depth {depth} < d")),
        );
    }
    if let Some(w) = serre_w {
        witnesses.insert("serre_level".to_string(), w);
    }
    for (name, v) in [
        ("buchsbaum", &buchs),
        ("gorenstein_star", &gstar),
        ("gorenstein", &gor),
        ("doubly_cm", &dcm),
    ] {
        if let Some(w) = &v.witness {
            witnesses.insert(name.to_string(), w.clone());
        }
    }
    if !c.is_pure() {
        let f = c.facets().iter().min_by_key(|f| f.len()).unwrap();
        witnesses.insert("pure".to_string(), Witness::at(c, f, None, "facet smaller than d"));
    }

    Ok(DiagnosticsReport {
        field,
        vertices: c.vertex_count(),
        facets: c.facets().len(),
        dim: c.dim(),
        d: c.d(),
        f_vector: c.f_vector()?,
        h_vector: c.h_vector()?,
        reduced_euler: c.reduced_euler()?,
        betti: table.betti(0).clone(),
        depth,
        depth_links: links.depth,
        depth_nerves: nerves,
        depth_rank: rank.depth,
        rank_minimizers: rank.minimizers,
        serre_level: serre,
        flags: Flags {
            pure: c.is_pure(),
            cohen_macaulay: cm,
            buchsbaum: buchs.holds,
            gorenstein_star: gstar.holds,
            gorenstein: gor.holds,
            doubly_cm: dcm.holds,
        },
        extensions: vec!["buchsbaum", "doubly_cm"],
        witnesses,
    })
}

fn join<T: fmt::Display>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for DiagnosticsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field: {}", self.field)?;
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "facets: {}", self.facets)?;
        writeln!(f, "dim: {}", self.dim)?;
        writeln!(f, "f_vector: ({})", join(self.f_vector.entries(), ","))?;
        writeln!(f, "h_vector: ({})", join(self.h_vector.entries(), ","))?;
        writeln!(f, "reduced_euler: {}", self.reduced_euler)?;
        let betti = self
            .betti
            .ranks()
            .iter()
            .enumerate()
            .map(|(k, r)| format!("{}:{r}", k as isize - 1));
        writeln!(f, "betti: {}", join(betti, " "))?;
        writeln!(f, "depth: {}", self.depth)?;
        writeln!(
            f,
            "depth_by: links={} nerves={} rank={}",
            self.depth_links, self.depth_nerves, self.depth_rank
        )?;
        let mins = self
            .rank_minimizers
            .iter()
            .map(|(s, i)| format!("S={{{}}}/i={i}", join(s, ",")));
        writeln!(f, "rank_minimizers: {}", join(mins, " "))?;
        writeln!(f, "serre_level: {}", self.serre_level)?;
        let fl = &self.flags;
        for (name, v) in [
            ("pure", fl.pure),
            ("cohen_macaulay", fl.cohen_macaulay),
            ("buchsbaum", fl.buchsbaum),
            ("gorenstein_star", fl.gorenstein_star),
            ("gorenstein", fl.gorenstein),
            ("doubly_cm", fl.doubly_cm),
        ] {
            let ext = if self.extensions.contains(&name) { " (extension)" } else { "" };
            writeln!(f, "{name}: {v}{ext}")?;
        }
        for (name, w) in &self.witnesses {
            let deg = w.degree.map(|d| format!(" degree {d}")).unwrap_or_default();
            writeln!(f, "witness {name}: {{{}}}{deg}: {}", w.face.join(","), w.reason)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(faces: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(faces.iter().map(|f| f.split_whitespace())).unwrap()
    }

    const Q: FieldSpec = FieldSpec::RATIONALS;

    #[test]
    fn simplex_depth() {
        for n in 1..5 {
            let s = SimplicialComplex::simplex(n);
            assert_eq!(depth_links(&s, Q).unwrap(), n);
            assert_eq!(depth_nerves(&s, Q).unwrap(), n);
            assert_eq!(depth_rank_selection(&s, Q).unwrap(), n);
            assert_eq!(serre_level(&s, Q).unwrap(), n);
            assert!(is_gorenstein(&s, Q).unwrap());
            assert!(!is_gorenstein_star(&s, Q).unwrap());
        }
    }

    #[test]
    fn irrelevant_complex() {
        let e = SimplicialComplex::irrelevant();
        assert_eq!(depth_links(&e, Q).unwrap(), 0);
        assert_eq!(depth_nerves(&e, Q).unwrap(), 0);
        assert_eq!(depth_rank_selection(&e, Q).unwrap(), 0);
        assert_eq!(serre_level(&e, Q).unwrap(), 0);
        assert!(is_gorenstein_star(&e, Q).unwrap());
        assert!(analyze(&SimplicialComplex::void(), Q).is_err());
    }

    #[test]
    fn disjoint_edges_have_depth_one() {
        let c = cx(&["a b", "c d"]);
        assert_eq!(depth_nerves(&c, Q).unwrap(), 1);
        let r = analyze(&c, Q).unwrap();
        assert_eq!(r.depth, 1);
        assert_eq!(r.serre_level, 1);
        assert!(r.flags.buchsbaum);
    }

    #[test]
    fn hollow_triangle_report() {
        let r = analyze(&cx(&["1 2", "1 3", "2 3"]), Q).unwrap();
        assert_eq!(r.depth, 2);
        assert!(r.flags.cohen_macaulay && r.flags.gorenstein_star && r.flags.gorenstein);
        assert!(r.flags.doubly_cm);
        assert!(r.witnesses.is_empty());
        let text = r.to_string();
        assert!(text.contains("depth: 2\n"));
        assert!(text.contains("serre_level: 2\n"));
    }

    #[test]
    fn non_pure_complex() {
        let c = cx(&["1 2", "3"]);
        let r = analyze(&c, Q).unwrap();
        assert_eq!(r.depth, 1);
        assert_eq!(r.serre_level, 1);
        assert!(!r.flags.pure && !r.flags.buchsbaum);
        assert!(r.witnesses.contains_key("pure"));
    }

    #[test]
    fn link_witness_is_disconnected_vertex_link() {
        let d1 = cx(&["4 5 6", "1 5 6", "1 3 5", "2 3 6", "2 5 6", "2 4 6"]);
        let w = depth_links_witness(&d1, Q).unwrap();
        assert_eq!(w.depth, 2);
        assert_eq!(w.i + w.face.len(), 2);
        let lk = d1.link(&w.face);
        assert_ne!(reduced_betti(&lk, Q).unwrap().get(w.i as isize - 1), 0);
    }
}
