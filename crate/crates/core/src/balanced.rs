//! Balanced complexes `(Δ, π)` and rank selection.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};

/// Why a proposed coloring is not a balanced structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceViolation {
    WrongRank { classes: usize, expected: usize },
    UnknownVertex(String),
    RepeatedVertex(String),
    UncoveredVertex(String),
    /// Two vertices of one class lie in a common face.
    SameColorFace { face: Vec<String>, class: usize },
}

impl fmt::Display for BalanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BalanceViolation::WrongRank { classes, expected } => {
                write!(f, "{classes} color classes given, dimension requires {expected}")
            }
            BalanceViolation::UnknownVertex(v) => write!(f, "vertex {v:?} is not in the complex"),
            BalanceViolation::RepeatedVertex(v) => write!(f, "vertex {v:?} appears in more than one class"),
            BalanceViolation::UncoveredVertex(v) => write!(f, "vertex {v:?} has no color"),
            BalanceViolation::SameColorFace { face, class } => {
                write!(f, "face {{{}}} has two vertices of color {class}", face.join(","))
            }
        }
    }
}

/// A complex with an ordered partition of its vertices into color classes
/// such that no face has two vertices of the same color.
///
/// Complexes produced by [`rank_select`](Self::rank_select) may carry empty
/// classes, or more classes than `dim + 1` when the parent is not pure;
/// [`verify_balanced`] itself insists on exactly `dim + 1` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedComplex {
    complex: SimplicialComplex,
    classes: Vec<Vec<VertexId>>,
}

/// Validates `partition` (ids into `c`) as a balanced structure on `c`.
pub fn verify_balanced(c: &SimplicialComplex, partition: Vec<Vec<VertexId>>) -> Result<BalancedComplex> {
    let fail = |v: BalanceViolation| Err(Error::Balance(v));
    if c.is_void() {
        return Err(Error::domain("the void complex has no balanced structure"));
    }
    if partition.len() != c.d() {
        return fail(BalanceViolation::WrongRank {
            classes: partition.len(),
            expected: c.d(),
        });
    }
    let mut color = vec![usize::MAX; c.vertex_count()];
    for (i, class) in partition.iter().enumerate() {
        for &v in class {
            if v.index() >= c.vertex_count() {
                return fail(BalanceViolation::UnknownVertex(format!("#{}", v.0)));
            }
            if color[v.index()] != usize::MAX {
                return fail(BalanceViolation::RepeatedVertex(c.label(v).to_string()));
            }
            color[v.index()] = i;
        }
    }
    if let Some(v) = c.vertices().find(|v| color[v.index()] == usize::MAX) {
        return fail(BalanceViolation::UncoveredVertex(c.label(v).to_string()));
    }
    for facet in c.facets() {
        let vs = facet.vertices();
        for (a, &u) in vs.iter().enumerate() {
            for &w in &vs[a + 1..] {
                if color[u.index()] == color[w.index()] {
                    return fail(BalanceViolation::SameColorFace {
                        face: vec![c.label(u).to_string(), c.label(w).to_string()],
                        class: color[u.index()] + 1,
                    });
                }
            }
        }
    }
    let classes = partition
        .into_iter()
        .map(|mut cl| {
            cl.sort_unstable();
            cl
        })
        .collect();
    Ok(BalancedComplex {
        complex: c.clone(),
        classes,
    })
}

/// Same as [`verify_balanced`] with classes given by vertex labels.
pub fn verify_balanced_labels<S: AsRef<str>>(c: &SimplicialComplex, partition: &[Vec<S>]) -> Result<BalancedComplex> {
    let mut ids = Vec::with_capacity(partition.len());
    for class in partition {
        let mut cl = Vec::with_capacity(class.len());
        for l in class {
            let l = l.as_ref();
            match c.vertex_id(l) {
                Some(v) => cl.push(v),
                None => return Err(Error::Balance(BalanceViolation::UnknownVertex(l.to_string()))),
            }
        }
        ids.push(cl);
    }
    verify_balanced(c, ids)
}

impl BalancedComplex {
    pub(crate) fn from_parts_unchecked(complex: SimplicialComplex, mut classes: Vec<Vec<VertexId>>) -> Self {
        for cl in &mut classes {
            cl.sort_unstable();
        }
        BalancedComplex { complex, classes }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    /// Number of color classes.
    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// Class `V_i`, 1-based.
    pub fn class(&self, i: usize) -> &[VertexId] {
        &self.classes[i - 1]
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// 1-based color of `v`.
    pub fn color_of(&self, v: VertexId) -> Option<usize> {
        self.classes.iter().position(|cl| cl.binary_search(&v).is_ok()).map(|i| i + 1)
    }

    fn check_ranks(&self, s: &BTreeSet<usize>) -> Result<()> {
        match s.iter().find(|&&i| i == 0 || i > self.rank()) {
            Some(i) => Err(Error::domain(format!("rank {i} outside 1..={}", self.rank()))),
            None => Ok(()),
        }
    }

    /// `Δ_S`, the subcomplex induced on the classes in `s` (1-based), colored
    /// by those classes in increasing order.
    pub fn rank_select(&self, s: &BTreeSet<usize>) -> Result<BalancedComplex> {
        self.check_ranks(s)?;
        let keep: Vec<VertexId> = s.iter().flat_map(|&i| self.classes[i - 1].iter().copied()).collect();
        let sub = self.complex.induced(&keep);
        let index: HashMap<&str, VertexId> = sub.vertices().map(|v| (sub.label(v), v)).collect();
        let classes = s
            .iter()
            .map(|&i| {
                self.classes[i - 1]
                    .iter()
                    .filter_map(|&v| index.get(self.complex.label(v)).copied())
                    .collect()
            })
            .collect();
        Ok(BalancedComplex::from_parts_unchecked(sub, classes))
    }

    /// `Δ̃_S = Δ_{[d] − S}`.
    pub fn rank_drop(&self, s: &BTreeSet<usize>) -> Result<BalancedComplex> {
        self.check_ranks(s)?;
        let rest: BTreeSet<usize> = (1..=self.rank()).filter(|i| !s.contains(i)).collect();
        self.rank_select(&rest)
    }

    /// Whether a face meets each class at most once.
    pub fn is_rainbow(&self, f: &Face) -> bool {
        let mut seen = BTreeSet::new();
        f.vertices().iter().all(|&v| seen.insert(self.color_of(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::truncated_subdivision;

    fn cx(faces: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(faces.iter().map(|f| f.split_whitespace())).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn tri() -> SimplicialComplex {
        cx(&["1 2", "1 3", "2 3"])
    }

    #[test]
    fn rejects_same_color_edge() {
        let t = tri();
        let err = verify_balanced_labels(&t, &[vec!["1"], vec!["2", "3"]]).unwrap_err();
        assert_eq!(
            err,
            Error::Balance(BalanceViolation::SameColorFace {
                face: vec!["2".into(), "3".into()],
                class: 2
            })
        );
    }

    #[test]
    fn rejects_bad_partitions() {
        let t = tri();
        assert!(matches!(
            verify_balanced_labels(&t, &[vec!["1", "2", "3"]]),
            Err(Error::Balance(BalanceViolation::WrongRank { .. }))
        ));
        assert!(matches!(
            verify_balanced_labels(&t, &[vec!["1"], vec!["2"]]),
            Err(Error::Balance(BalanceViolation::UncoveredVertex(_)))
        ));
        assert!(matches!(
            verify_balanced_labels(&t, &[vec!["1", "2"], vec!["2", "3"]]),
            Err(Error::Balance(BalanceViolation::RepeatedVertex(_)))
        ));
        assert!(matches!(
            verify_balanced_labels(&t, &[vec!["1", "9"], vec!["2", "3"]]),
            Err(Error::Balance(BalanceViolation::UnknownVertex(_)))
        ));
    }

    #[test]
    fn hexagon_coloring_is_valid() {
        let hex = truncated_subdivision(&tri(), 0).unwrap();
        let again = verify_balanced(hex.complex(), hex.classes().to_vec()).unwrap();
        assert_eq!(again, hex);
    }

    #[test]
    fn rank_selection_of_hexagon() {
        let hex = truncated_subdivision(&tri(), 0).unwrap();
        assert_eq!(hex.rank_select(&set(&[1, 2])).unwrap(), hex);
        let low = hex.rank_select(&set(&[1])).unwrap();
        assert_eq!(low.complex(), &cx(&["{1}", "{2}", "{3}"]));
        assert!(hex.rank_select(&set(&[])).unwrap().complex().is_irrelevant());
        assert!(hex.rank_select(&set(&[3])).is_err());
        assert_eq!(hex.rank_drop(&set(&[2])).unwrap(), low);
    }

    #[test]
    fn rank_selection_matches_truncation() {
        let d1 = cx(&["4 5 6", "1 5 6", "1 3 5", "2 3 6", "2 5 6", "2 4 6"]);
        let sd = truncated_subdivision(&d1, 0).unwrap();
        let upper = sd.rank_select(&set(&[2, 3])).unwrap();
        let trunc = truncated_subdivision(&d1, 1).unwrap();
        assert_eq!(upper.complex(), trunc.complex());
    }
}
