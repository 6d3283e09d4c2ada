//! Small named complexes with known behaviour.

use crate::balanced::BalancedComplex;
use crate::complex::SimplicialComplex;
use crate::poset::truncated_subdivision;

fn from_words(faces: &[&str]) -> SimplicialComplex {
    SimplicialComplex::from_facets(faces.iter().map(|f| f.chars().map(|ch| ch.to_string())))
        .expect("fixture facets are well formed")
}

/// Pure, connected, not `(S_2)`; its truncations look like those of an `(S_2)` complex.
pub fn delta1() -> SimplicialComplex {
    from_words(&["456", "156", "135", "236", "256", "246"])
}

/// `(S_2)` and Buchsbaum, with `b̃_1 ≠ 0` on its subdivision.
pub fn delta2() -> SimplicialComplex {
    from_words(&["456", "356", "235", "234", "134", "246"])
}

/// Gorenstein.
pub fn gamma1() -> SimplicialComplex {
    from_words(&["234", "134", "125", "235", "124", "135"])
}

/// Same truncation homology as [`gamma1`], but neither Gorenstein nor 2-CM.
pub fn gamma2() -> SimplicialComplex {
    from_words(&["123", "124", "134", "234", "125", "135"])
}

pub fn hollow_triangle() -> SimplicialComplex {
    from_words(&["12", "13", "23"])
}

/// `{1,2,3}` and `{2,3,4}`.
pub fn two_triangles() -> SimplicialComplex {
    from_words(&["123", "234"])
}

/// Barycentric subdivision of the hollow triangle: a 6-cycle colored by face size.
pub fn hexagon() -> BalancedComplex {
    truncated_subdivision(&hollow_triangle(), 0).expect("nonvoid")
}

/// Every plain fixture by name.
pub fn all() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("delta1", delta1()),
        ("delta2", delta2()),
        ("gamma1", gamma1()),
        ("gamma2", gamma2()),
        ("hollow-triangle", hollow_triangle()),
        ("two-triangles", two_triangles()),
        ("hexagon", hexagon().into_complex()),
    ]
}
