//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use srx::SimplicialComplex;

pub type Set = BTreeSet<u32>;

pub fn cx(facets: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_facets(facets.iter().map(|f| f.split_whitespace().collect::<Vec<_>>())).unwrap()
}

/// Every face of the complex, as sets of integer labels.
pub fn closure(c: &SimplicialComplex) -> BTreeSet<Set> {
    let mut out = BTreeSet::new();
    for f in c.canonical_facets() {
        let f: Vec<u32> = f.iter().map(|l| l.parse().unwrap()).collect();
        for mask in 0u32..(1 << f.len()) {
            out.insert((0..f.len()).filter(|k| mask >> k & 1 == 1).map(|k| f[k]).collect());
        }
    }
    out
}

pub fn maximal(faces: &BTreeSet<Set>) -> BTreeSet<Set> {
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && f.is_subset(g)))
        .cloned()
        .collect()
}

pub fn from_sets<'a>(sets: impl IntoIterator<Item = &'a Set>) -> SimplicialComplex {
    SimplicialComplex::from_facets(sets.into_iter().map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>()))
        .unwrap()
}

pub fn facet_sets(c: &SimplicialComplex) -> BTreeSet<Set> {
    c.canonical_facets()
        .iter()
        .map(|f| f.iter().map(|l| l.parse().unwrap()).collect())
        .collect()
}

/// Connected components of the 1-skeleton, by flood fill.
pub fn components(c: &SimplicialComplex) -> usize {
    let faces = closure(c);
    let verts: Vec<u32> = faces.iter().filter(|f| f.len() == 1).map(|f| *f.iter().next().unwrap()).collect();
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for &v in &verts {
        if !seen.insert(v) {
            continue;
        }
        count += 1;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for e in faces.iter().filter(|f| f.len() == 2 && f.contains(&x)) {
                for &y in e {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
    }
    count
}

/// Nonempty complexes on labels `0..n` given by arbitrary generating faces.
pub fn any_complex(n: u32, max_faces: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0..n, 1..=(n as usize).min(4)), 1..=max_faces)
        .prop_map(|faces| from_sets(faces.iter()))
}

/// Pure complexes whose facets have `size` vertices.
pub fn pure_complex(n: u32, size: usize, max_faces: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0..n, size), 1..=max_faces)
        .prop_map(|faces| from_sets(faces.iter()))
}

/// Rank over GF(2) of rows packed into bit masks.
pub fn rank_gf2(mut rows: Vec<u128>) -> usize {
    let mut r = 0;
    for bit in 0..128 {
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else { continue };
        rows.swap(r, p);
        let piv = rows[r];
        for row in rows.iter_mut().skip(r + 1) {
            if *row >> bit & 1 == 1 {
                *row ^= piv;
            }
        }
        r += 1;
    }
    r
}

/// Reduced GF(2) Betti numbers from the face lattice, indexed from dimension −1.
pub fn oracle_gf2(c: &SimplicialComplex) -> Vec<usize> {
    let faces = closure(c);
    let top = faces.iter().map(|f| f.len()).max().unwrap();
    let by_size: Vec<Vec<&Set>> = (0..=top).map(|k| faces.iter().filter(|f| f.len() == k).collect()).collect();
    // ∂_k maps size-k faces to size-(k-1) faces.
    let rank_of = |k: usize| -> usize {
        if k == 0 || k > top {
            return 0;
        }
        let lower = &by_size[k - 1];
        let rows = by_size[k]
            .iter()
            .map(|f| {
                lower
                    .iter()
                    .enumerate()
                    .filter(|(_, g)| g.is_subset(f))
                    .fold(0u128, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        rank_gf2(rows)
    };
    (0..=top).map(|k| by_size[k].len() - rank_of(k) - rank_of(k + 1)).collect()
}
