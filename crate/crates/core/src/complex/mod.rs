//! Finite abstract simplicial complexes.
//!
//! A complex is stored as an interned vertex label table plus its list of
//! inclusion-maximal facets. The void complex (no faces at all) and the
//! irrelevant complex `{∅}` are distinct, first-class values: the first has
//! zero facets, the second has the single empty facet.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};

mod ops;
pub(crate) use ops::singletons;

/// Dense index of a vertex inside its owning complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A face: a strictly increasing list of vertex ids. The empty face is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Builds a face from arbitrary-order ids, rejecting repeats.
    pub fn from_ids(ids: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut v: Vec<VertexId> = ids.into_iter().map(VertexId).collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("face has a repeated vertex"));
        }
        Ok(Face(v))
    }

    pub(crate) fn from_sorted(v: Vec<VertexId>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    v.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    v.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    v.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        Face(v)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// The face with its `j`-th smallest vertex removed.
    pub fn without_index(&self, j: usize) -> Face {
        let mut v = self.0.clone();
        v.remove(j);
        Face(v)
    }

    pub fn with_vertex(&self, x: VertexId) -> Face {
        match self.0.binary_search(&x) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, x);
                Face(v)
            }
        }
    }

    /// Bitmask of the face when every id is below 64.
    pub fn mask(&self) -> Option<u64> {
        let mut m = 0u64;
        for v in &self.0 {
            if v.0 >= 64 {
                return None;
            }
            m |= 1 << v.0;
        }
        Some(m)
    }

    /// All subsets of the face, the empty face included.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.len();
        assert!(k < 32, "face too large to enumerate subsets");
        (0u32..(1u32 << k)).map(move |bits| {
            Face(
                (0..k)
                    .filter(|i| bits & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    /// All subsets of cardinality `size`.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Face> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(size);
        fn rec(src: &[VertexId], size: usize, start: usize, buf: &mut Vec<VertexId>, out: &mut Vec<Face>) {
            if buf.len() == size {
                out.push(Face(buf.clone()));
                return;
            }
            let need = size - buf.len();
            for i in start..src.len() {
                if src.len() - i < need {
                    break;
                }
                buf.push(src[i]);
                rec(src, size, i + 1, buf, out);
                buf.pop();
            }
        }
        if size <= self.len() {
            rec(&self.0, size, 0, &mut buf, &mut out);
        }
        out
    }
}

impl FromIterator<VertexId> for Face {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut v: Vec<VertexId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }
}

/// Face counts `f_{-1}, f_0, …, f_{dim}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// `f_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        if i < -1 {
            return 0;
        }
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }
}

/// `h_0, …, h_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A finite abstract simplicial complex.
#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
    masks: Option<Vec<u64>>,
    faces: OnceLock<Arc<Vec<Face>>>,
}

impl SimplicialComplex {
    /// The void complex: no faces, not even the empty one.
    pub fn void() -> Self {
        Self::assemble(Vec::new(), Vec::new())
    }

    /// The irrelevant complex `{∅}`.
    pub fn irrelevant() -> Self {
        Self::assemble(Vec::new(), vec![Face::empty()])
    }

    /// The full simplex on vertices labelled `1..=n`.
    pub fn simplex(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let facet = Face((0..n as u32).map(VertexId).collect());
        Self::assemble(labels, vec![facet])
    }

    /// Builds the complex generated by `faces`, interning labels in order of
    /// first appearance. Non-maximal and repeated faces are absorbed.
    pub fn from_facets<I, F, S>(faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, u32> = HashMap::new();
        let mut out = Vec::new();
        for (fi, face) in faces.into_iter().enumerate() {
            let mut ids = Vec::new();
            for s in face {
                let s = s.as_ref();
                let id = match index.get(s) {
                    Some(&id) => id,
                    None => {
                        let id = labels.len() as u32;
                        labels.push(s.to_string());
                        index.insert(s.to_string(), id);
                        id
                    }
                };
                ids.push(id);
            }
            let face = Face::from_ids(ids).map_err(|_| Error::Parse {
                line: fi + 1,
                column: 1,
                message: "duplicate vertex inside one face".into(),
            })?;
            out.push(face);
        }
        Ok(Self::from_faces_in(&labels, out))
    }

    /// Builds a complex from faces given as ids into `labels`. Labels not used
    /// by any face are dropped and the remaining ids compacted in order.
    pub fn from_id_faces(labels: Vec<String>, faces: Vec<Face>) -> Result<Self> {
        if let Some(bad) = faces
            .iter()
            .flat_map(|f| f.vertices())
            .find(|v| v.index() >= labels.len())
        {
            return Err(Error::domain(format!("vertex id {} has no label", bad.0)));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::domain("vertex labels are not distinct"));
        }
        Ok(Self::from_faces_in(&labels, faces))
    }

    /// Maximalizes `faces` (ids into `labels`) and compacts the vertex table.
    pub(crate) fn from_faces_in(labels: &[String], faces: Vec<Face>) -> Self {
        let facets = maximalize(faces);
        let mut used: Vec<VertexId> = facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        used.sort_unstable();
        used.dedup();
        let identity = used.iter().enumerate().all(|(i, v)| v.index() == i) && used.len() == labels.len();
        if identity {
            return Self::assemble(labels.to_vec(), facets);
        }
        let mut remap = vec![u32::MAX; labels.len()];
        for (new, old) in used.iter().enumerate() {
            remap[old.index()] = new as u32;
        }
        let new_labels = used.iter().map(|v| labels[v.index()].clone()).collect();
        let facets = facets
            .into_iter()
            .map(|f| Face(f.0.iter().map(|v| VertexId(remap[v.index()])).collect()))
            .collect();
        Self::assemble(new_labels, facets)
    }

    fn assemble(labels: Vec<String>, mut facets: Vec<Face>) -> Self {
        facets.sort();
        let masks = if labels.len() <= 64 {
            Some(facets.iter().map(|f| f.mask().expect("ids below 64")).collect())
        } else {
            None
        };
        SimplicialComplex {
            labels,
            facets,
            masks,
            faces: OnceLock::new(),
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(|i| VertexId(i as u32))
    }

    /// Resolves a face given by labels.
    pub fn face_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let mut ids = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            let v = self
                .vertex_id(l)
                .ok_or_else(|| Error::domain(format!("unknown vertex label {l:?}")))?;
            ids.push(v.0);
        }
        Face::from_ids(ids)
    }

    pub fn face_labels(&self, face: &Face) -> Vec<String> {
        face.vertices().iter().map(|v| self.labels[v.index()].clone()).collect()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Facets as label lists, in stored order.
    pub fn labeled_facets(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|f| self.face_labels(f)).collect()
    }

    /// Dimension; the void complex reports −1 like `{∅}` (check [`is_void`](Self::is_void)).
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// Krull dimension of the face ring, `dim Δ + 1`.
    pub fn d(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(_) => {
                let d = self.dim();
                self.facets.iter().all(|f| f.dim() == d)
            }
        }
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        if self.is_void() {
            return false;
        }
        if face.is_empty() {
            return true;
        }
        if let (Some(masks), Some(fm)) = (&self.masks, face.mask()) {
            return masks.iter().any(|m| m & fm == fm);
        }
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn is_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    /// Every face, the empty face first, ordered by cardinality then lexicographically.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| Arc::new(self.enumerate_faces()))
    }

    fn enumerate_faces(&self) -> Vec<Face> {
        let mut all: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        let mut v: Vec<Face> = all.into_iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    /// Faces of dimension `k` (cardinality `k + 1`).
    pub fn faces_of_dim(&self, k: isize) -> impl Iterator<Item = &Face> {
        self.faces().iter().filter(move |f| f.dim() == k)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        if self.is_void() {
            return Err(Error::domain("f-vector of the void complex"));
        }
        let mut counts = vec![0u64; self.d() + 1];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        Ok(FVector(counts))
    }

    pub fn h_vector(&self) -> Result<HVector> {
        let f = self.f_vector()?;
        let d = self.d() as i64;
        let h = (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(d - i, k - i) * f.get((i - 1) as isize) as i64
                    })
                    .sum()
            })
            .collect();
        Ok(HVector(h))
    }

    /// Reduced Euler characteristic `χ̃ = Σ_{i ≥ -1} (-1)^i f_i`.
    pub fn reduced_euler(&self) -> Result<i64> {
        let f = self.f_vector()?;
        Ok(f
            .entries()
            .iter()
            .enumerate()
            .map(|(idx, &c)| if idx % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum())
    }

    /// Canonical form independent of interning order: sorted facets of sorted labels.
    pub fn canonical_facets(&self) -> Vec<Vec<String>> {
        let mut v: Vec<Vec<String>> = self
            .labeled_facets()
            .into_iter()
            .map(|mut f| {
                f.sort();
                f
            })
            .collect();
        v.sort();
        v
    }
}

/// Two complexes are equal when they have the same faces over the same labels,
/// regardless of the order in which labels were interned.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        if self.labels == other.labels {
            return self.facets == other.facets;
        }
        self.canonical_facets() == other.canonical_facets()
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "Void");
        }
        let facets: Vec<String> = self
            .labeled_facets()
            .into_iter()
            .map(|fc| format!("{{{}}}", fc.join(",")))
            .collect();
        write!(f, "Complex[{}]", facets.join(" "))
    }
}

/// Drops repeated and non-maximal faces.
pub(crate) fn maximalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    faces.dedup();
    let use_masks = faces.iter().all(|f| f.mask().is_some());
    let mut kept: Vec<Face> = Vec::new();
    let mut kept_masks: Vec<u64> = Vec::new();
    for f in faces {
        let covered = if use_masks {
            let m = f.mask().unwrap_or(0);
            kept_masks.iter().any(|k| k & m == m)
        } else {
            kept.iter().any(|k| f.is_subset(k))
        };
        if !covered {
            if use_masks {
                kept_masks.push(f.mask().unwrap_or(0));
            }
            kept.push(f);
        }
    }
    kept
}
