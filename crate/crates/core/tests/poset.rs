mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use srx::balanced::{verify_balanced, verify_balanced_labels};
use srx::diagnostics::{depth_balanced, depth_poset};
use srx::poset::{face_poset, order_complex, truncated_subdivision};
use srx::{Error, FieldSpec, Poset, SimplicialComplex};

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[test]
fn two_triangles_subdivisions() {
    let tt = cx(&["1 2 3", "2 3 4"]);
    let sd = truncated_subdivision(&tt, 0).unwrap();
    assert_eq!(sd.complex().f_vector().unwrap().entries(), &[1, 11, 22, 12]);
    let above1 = truncated_subdivision(&tt, 1).unwrap();
    // Edges and triangles, joined when an edge lies in a triangle.
    assert_eq!(above1.complex().f_vector().unwrap().entries(), &[1, 7, 6]);
    let above2 = truncated_subdivision(&tt, 2).unwrap();
    assert_eq!(above2.complex(), &cx(&["{1,2,3}", "{2,3,4}"]));
    assert!(truncated_subdivision(&tt, 3).is_err());
}

#[test]
fn empty_poset_has_irrelevant_order_complex() {
    let p = Poset::new(Vec::new(), &[]).unwrap();
    assert!(order_complex(&p).complex().is_irrelevant());
    assert!(Poset::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]).is_err());
}

#[test]
fn chain_poset_is_a_simplex() {
    let labels = ["a", "b", "c"].map(String::from).to_vec();
    let p = Poset::new(labels, &[(0, 1), (1, 2)]).unwrap();
    let oc = order_complex(&p);
    assert_eq!(oc.complex(), &cx(&["a b c"]));
    assert_eq!(oc.rank(), 3);
    assert_eq!(depth_balanced(&oc, FieldSpec::RATIONALS).unwrap().depth, 3);
}

#[test]
fn hexagon_rank_depth() {
    let hex = verify_balanced_labels(
        &cx(&["1 2", "2 3", "3 4", "4 5", "5 6", "6 1"]),
        &[vec!["1", "3", "5"], vec!["2", "4", "6"]],
    )
    .unwrap();
    let rd = depth_balanced(&hex, FieldSpec::RATIONALS).unwrap();
    assert_eq!(rd.depth, 2);
    let sets: BTreeSet<Vec<usize>> = rd.minimizers.iter().map(|(s, _)| s.clone()).collect();
    assert!(sets.contains(&vec![1]) && sets.contains(&vec![2]));
}

#[test]
fn balance_is_checked() {
    let tri = cx(&["1 2 3"]);
    let ids = |ls: &[&str]| tri.face_of_labels(ls).unwrap().vertices().to_vec();
    assert!(matches!(
        verify_balanced(&tri, vec![ids(&["1", "2"]), ids(&["3"])]),
        Err(Error::Balance(_))
    ));
    assert!(verify_balanced(&tri, vec![ids(&["1"]), ids(&["2"]), ids(&["3"])]).is_ok());
    assert!(verify_balanced(&tri, vec![ids(&["1"]), ids(&["2"])]).is_err());
}

#[test]
fn depth_poset_signals_the_irrelevant_complex() {
    let rd = depth_poset(&SimplicialComplex::irrelevant(), FieldSpec::RATIONALS).unwrap();
    assert_eq!(rd.depth, 0);
    assert!(face_poset(&SimplicialComplex::irrelevant()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subdivision_counts(c in any_complex(6, 5), j in 0usize..3) {
        prop_assume!((j as isize) <= c.dim());
        let faces = closure(&c);
        let sd = truncated_subdivision(&c, j).unwrap();
        let f = sd.complex().f_vector().unwrap();
        prop_assert_eq!(f.get(0) as usize, faces.iter().filter(|s| s.len() > j).count());
        // Maximal chains run from a face of size j+1 up to a facet F: |F|!/(j+1)! of them.
        let chains: u64 = facet_sets(&c)
            .iter()
            .filter(|s| s.len() > j)
            .map(|s| factorial(s.len()) / factorial(j + 1))
            .sum();
        prop_assert_eq!(sd.complex().facets().len() as u64, chains);
    }

    #[test]
    fn order_complexes_are_balanced(c in any_complex(6, 5), j in 0usize..3) {
        prop_assume!((j as isize) <= c.dim());
        let sd = truncated_subdivision(&c, j).unwrap();
        prop_assert!(verify_balanced(sd.complex(), sd.classes().to_vec()).is_ok());
        for f in sd.complex().facets() {
            prop_assert!(sd.is_rainbow(f));
        }
    }

    #[test]
    fn rank_selection_of_top_ranks_is_truncation(c in pure_complex(6, 3, 6), j in 0usize..3) {
        let full = truncated_subdivision(&c, 0).unwrap();
        let keep: BTreeSet<usize> = (j + 1..=3).collect();
        let sel = full.rank_select(&keep).unwrap();
        let expected = truncated_subdivision(&c, j).unwrap();
        prop_assert_eq!(sel.complex(), expected.complex());
        let drop: BTreeSet<usize> = (1..=j).collect();
        let dropped = full.rank_drop(&drop).unwrap();
        prop_assert_eq!(dropped.complex(), sel.complex());
    }
}
