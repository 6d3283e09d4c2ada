//! Finite posets, face posets, order complexes and truncated subdivisions.
//!
//! Heights count elements: a minimal element has height 1, so in a face
//! poset `ht(F) = |F|` and the order complex of the full face poset is the
//! barycentric subdivision. Restricting a poset recomputes heights (used for
//! coloring) but every element keeps the height it had in the poset it was
//! first built as (used for rank bookkeeping).

use std::collections::BTreeSet;

use crate::balanced::BalancedComplex;
use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    /// `up[p]`: elements strictly greater than `p`, ascending.
    up: Vec<Vec<usize>>,
    heights: Vec<usize>,
    original_heights: Vec<usize>,
}

impl Poset {
    /// Builds a poset from a strict order given as pairs `(a, b)` meaning
    /// `a < b`. The relation is closed transitively; cycles are rejected.
    pub fn new(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::domain("relation refers to a missing element"));
            }
            less[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|i| less[i][i]) {
            return Err(Error::domain("relation is not a strict partial order"));
        }
        let up = (0..n)
            .map(|i| (0..n).filter(|&j| less[i][j]).collect())
            .collect();
        Ok(Self::from_up_sets(labels, up, None))
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<Vec<usize>>, original: Option<Vec<usize>>) -> Self {
        let n = labels.len();
        let mut down_count = vec![0usize; n];
        for u in &up {
            for &q in u {
                down_count[q] += 1;
            }
        }
        // Process in order of the number of elements below: every element
        // below p has strictly fewer elements below it.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&p| down_count[p]);
        let mut heights = vec![1usize; n];
        for &p in &order {
            for &q in &up[p] {
                heights[q] = heights[q].max(heights[p] + 1);
            }
        }
        let original_heights = original.unwrap_or_else(|| heights.clone());
        Poset {
            labels,
            up,
            heights,
            original_heights,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.up[a].binary_search(&b).is_ok()
    }

    /// Height in this poset.
    pub fn height(&self, p: usize) -> usize {
        self.heights[p]
    }

    /// Height in the poset this one was restricted from.
    pub fn original_height(&self, p: usize) -> usize {
        self.original_heights[p]
    }

    /// `ht P`, 0 for the empty poset.
    pub fn rank(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    fn restrict(&self, keep: impl Fn(usize) -> bool) -> Poset {
        let kept: Vec<usize> = (0..self.len()).filter(|&p| keep(p)).collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (i, &p) in kept.iter().enumerate() {
            new_index[p] = i;
        }
        let labels = kept.iter().map(|&p| self.labels[p].clone()).collect();
        let up = kept
            .iter()
            .map(|&p| {
                self.up[p]
                    .iter()
                    .filter(|&&q| new_index[q] != usize::MAX)
                    .map(|&q| new_index[q])
                    .collect()
            })
            .collect();
        let original = kept.iter().map(|&p| self.original_heights[p]).collect();
        Poset::from_up_sets(labels, up, Some(original))
    }

    /// `P_{>j}`: elements of height greater than `j`.
    pub fn truncate_above(&self, j: usize) -> Poset {
        self.restrict(|p| self.heights[p] > j)
    }

    /// `P̃_S`: elements whose height is not in `s`.
    pub fn restrict_heights(&self, s: &BTreeSet<usize>) -> Poset {
        self.restrict(|p| !s.contains(&self.heights[p]))
    }

    /// Covering pairs `(p, q)` with `p ⋖ q`.
    fn covers(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|p| {
                self.up[p]
                    .iter()
                    .copied()
                    .filter(|&q| !self.up[p].iter().any(|&r| r != q && self.less(r, q)))
                    .collect()
            })
            .collect()
    }

    /// Maximal chains as ascending element lists.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let covers = self.covers();
        let has_lower: Vec<bool> = {
            let mut v = vec![false; self.len()];
            for u in &self.up {
                for &q in u {
                    v[q] = true;
                }
            }
            v
        };
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn walk(p: usize, covers: &[Vec<usize>], stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            stack.push(p);
            if covers[p].is_empty() {
                out.push(stack.clone());
            } else {
                for &q in &covers[p] {
                    walk(q, covers, stack, out);
                }
            }
            stack.pop();
        }
        for p in (0..self.len()).filter(|&p| !has_lower[p]) {
            walk(p, &covers, &mut stack, &mut out);
        }
        out
    }
}

/// Vertex label of a face viewed as a point of a subdivision: `{a,b,c}`.
pub fn face_label(c: &SimplicialComplex, face: &Face) -> String {
    format!("{{{}}}", c.face_labels(face).join(","))
}

/// Nonempty faces ordered by inclusion; `ht(F) = |F|`.
pub fn face_poset(c: &SimplicialComplex) -> Result<Poset> {
    if c.is_void() || c.is_irrelevant() {
        return Err(Error::domain("face poset needs a nonempty face"));
    }
    Ok(face_poset_unchecked(c))
}

fn face_poset_unchecked(c: &SimplicialComplex) -> Poset {
    let faces: Vec<&Face> = c.faces().iter().filter(|f| !f.is_empty()).collect();
    let labels = faces.iter().map(|f| face_label(c, f)).collect();
    let up = faces
        .iter()
        .map(|f| {
            faces
                .iter()
                .enumerate()
                .filter(|(_, g)| g.len() > f.len() && f.is_subset(g))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Poset::from_up_sets(labels, up, None)
}

/// Chains of `P`, colored by height. The empty poset gives `{∅}` with no colors.
pub fn order_complex(p: &Poset) -> BalancedComplex {
    let chains = p.maximal_chains();
    let faces: Vec<Face> = chains
        .into_iter()
        .map(|ch| ch.into_iter().map(|i| VertexId(i as u32)).collect())
        .collect();
    let complex = if p.is_empty() {
        SimplicialComplex::irrelevant()
    } else {
        SimplicialComplex::from_faces_in(p.labels(), faces)
    };
    // Every element lies on a maximal chain, so vertex ids coincide with element indices.
    debug_assert_eq!(complex.vertex_count(), p.len());
    let mut classes = vec![Vec::new(); p.rank()];
    for (i, &h) in p.heights.iter().enumerate() {
        classes[h - 1].push(VertexId(i as u32));
    }
    BalancedComplex::from_parts_unchecked(complex, classes)
}

/// `[Δ]_{>j}`, for `0 ≤ j ≤ dim Δ`. Vertices are labelled by [`face_label`].
pub fn truncated_subdivision(c: &SimplicialComplex, j: usize) -> Result<BalancedComplex> {
    if c.is_void() {
        return Err(Error::domain("subdivision of the void complex"));
    }
    if (j as isize) > c.dim() {
        return Err(Error::domain(format!(
            "truncation index {j} exceeds dimension {}",
            c.dim()
        )));
    }
    let p = face_poset_unchecked(c);
    Ok(order_complex(&p.truncate_above(j)))
}

/// `[Δ]_{>0}`, extended by `[{∅}]_{>0} = {∅}`.
pub fn barycentric(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    if c.is_void() {
        return Err(Error::domain("subdivision of the void complex"));
    }
    if c.is_irrelevant() {
        return Ok(SimplicialComplex::irrelevant());
    }
    Ok(truncated_subdivision(c, 0)?.into_complex())
}
