//! Higher nerve complexes of the facet cover.
//!
//! `N_i(Δ)` lives on the facet indices `1..=r` (labels are 1-based indices
//! into [`SimplicialComplex::facets`]) and contains every index set whose
//! facets share at least `i` vertices.

use std::collections::HashSet;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// `N_1(Δ) ⊇ N_2(Δ) ⊇ … ⊇ N_d(Δ)`.
#[derive(Clone, Debug)]
pub struct NerveFamily {
    facet_count: usize,
    members: Vec<SimplicialComplex>,
}

impl NerveFamily {
    /// Number of facets `r`.
    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    /// `N_i` for `1 ≤ i ≤ d`.
    pub fn get(&self, i: usize) -> Option<&SimplicialComplex> {
        i.checked_sub(1).and_then(|k| self.members.get(k))
    }

    pub fn members(&self) -> &[SimplicialComplex] {
        &self.members
    }
}

/// Every nonempty intersection of facets together with the facets containing it.
///
/// A face `F` of `N_i` lies in the face `{j : A_j ⊇ ⋂_{k∈F} A_k}`, so the
/// facets of every `N_i` are among these closed index sets; there are at most
/// as many of them as faces of `Δ`.
fn closed_index_sets(c: &SimplicialComplex) -> Vec<(Vec<u32>, usize)> {
    let words = c.vertex_count().div_ceil(64).max(1);
    let facet_bits: Vec<Vec<u64>> = c
        .facets()
        .iter()
        .map(|f| {
            let mut b = vec![0u64; words];
            for v in f.vertices() {
                b[v.index() / 64] |= 1 << (v.index() % 64);
            }
            b
        })
        .collect();
    let count = |b: &[u64]| b.iter().map(|w| w.count_ones() as usize).sum::<usize>();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for b in &facet_bits {
        if count(b) > 0 && seen.insert(b.clone()) {
            queue.push(b.clone());
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for b in &facet_bits {
            let meet: Vec<u64> = cur.iter().zip(b).map(|(x, y)| x & y).collect();
            if count(&meet) > 0 && seen.insert(meet.clone()) {
                queue.push(meet);
            }
        }
    }
    queue
        .iter()
        .map(|inter| {
            let members = facet_bits
                .iter()
                .enumerate()
                .filter(|(_, b)| b.iter().zip(inter).all(|(x, y)| x & y == *y))
                .map(|(j, _)| j as u32)
                .collect();
            (members, count(inter))
        })
        .collect()
}

fn assemble(r: usize, sets: impl Iterator<Item = Vec<u32>>) -> SimplicialComplex {
    let labels: Vec<String> = (1..=r).map(|i| i.to_string()).collect();
    let faces = sets
        .map(|s| Face::from_sorted(s.into_iter().map(VertexId).collect()))
        .collect();
    SimplicialComplex::from_faces_in(&labels, faces)
}

/// `N_i(Δ)` for `1 ≤ i ≤ d`.
pub fn higher_nerve(c: &SimplicialComplex, i: usize) -> Result<SimplicialComplex> {
    if c.is_void() {
        return Err(Error::domain("nerve of the void complex"));
    }
    if i == 0 || i > c.d() {
        return Err(Error::domain(format!("nerve index {i} outside 1..={}", c.d())));
    }
    let sets = closed_index_sets(c);
    Ok(assemble(
        c.facets().len(),
        sets.into_iter().filter(|(_, size)| *size >= i).map(|(s, _)| s),
    ))
}

/// All of `N_1, …, N_d` from one intersection enumeration.
pub fn nerve_family(c: &SimplicialComplex) -> Result<NerveFamily> {
    if c.is_void() {
        return Err(Error::domain("nerve of the void complex"));
    }
    let r = c.facets().len();
    let sets = closed_index_sets(c);
    let members = (1..=c.d())
        .map(|i| {
            assemble(
                r,
                sets.iter().filter(|(_, size)| *size >= i).map(|(s, _)| s.clone()),
            )
        })
        .collect();
    Ok(NerveFamily {
        facet_count: r,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(faces: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(faces.iter().map(|f| f.split_whitespace())).unwrap()
    }

    #[test]
    fn two_triangles() {
        let c = cx(&["1 2 3", "2 3 4"]);
        let edge = cx(&["1 2"]);
        assert_eq!(higher_nerve(&c, 1).unwrap(), edge);
        assert_eq!(higher_nerve(&c, 2).unwrap(), edge);
        assert_eq!(higher_nerve(&c, 3).unwrap(), cx(&["1", "2"]));
        assert!(higher_nerve(&c, 4).is_err());
        assert!(higher_nerve(&c, 0).is_err());
    }

    #[test]
    fn single_facet() {
        let s = SimplicialComplex::simplex(3);
        for i in 1..=3 {
            assert_eq!(higher_nerve(&s, i).unwrap(), cx(&["1"]));
        }
    }

    #[test]
    fn disjoint_edges() {
        let c = cx(&["a b", "c d"]);
        assert_eq!(higher_nerve(&c, 1).unwrap(), cx(&["1", "2"]));
    }

    #[test]
    fn family_matches_single_nerves() {
        let d1 = cx(&["4 5 6", "1 5 6", "1 3 5", "2 3 6", "2 5 6", "2 4 6"]);
        let fam = nerve_family(&d1).unwrap();
        assert_eq!(fam.facet_count(), 6);
        assert_eq!(fam.members().len(), 3);
        for i in 1..=3 {
            assert_eq!(fam.get(i).unwrap(), &higher_nerve(&d1, i).unwrap());
        }
        assert!(fam.get(0).is_none());
        assert!(fam.get(4).is_none());
    }

    #[test]
    fn cone_nerve_is_a_simplex() {
        let faces: Vec<Vec<String>> = (0..30).map(|i| vec!["apex".to_string(), format!("v{i}")]).collect();
        let c = SimplicialComplex::from_facets(faces).unwrap();
        let n1 = higher_nerve(&c, 1).unwrap();
        assert_eq!(n1.facets().len(), 1);
        assert_eq!(n1.facets()[0].len(), 30);
        assert_eq!(higher_nerve(&c, 2).unwrap().facets().len(), 30);
    }

    #[test]
    fn nerves_on_many_vertices() {
        // More than 64 vertices exercises multi-word intersections.
        let faces: Vec<Vec<String>> = (0..40)
            .map(|i| vec![format!("v{i}"), format!("v{}", i + 1), format!("w{i}")])
            .collect();
        let c = SimplicialComplex::from_facets(faces).unwrap();
        assert!(c.vertex_count() > 64);
        let n1 = higher_nerve(&c, 1).unwrap();
        assert_eq!(n1.facets().len(), 39);
        assert_eq!(higher_nerve(&c, 2).unwrap().facets().len(), 40);
    }
}
