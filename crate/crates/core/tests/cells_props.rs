use std::collections::BTreeSet;

use cellscope::cells::{
    approx_cells, is_union_of_left_cells, local_union_check, rs_cells, rs_insert, CellPartition,
};
use cellscope::parabolic::{
    conjugate_intersection, double_coset_reps, longest_element, min_left_coset_reps,
};
use cellscope::perm::{factorial, group_elements};
use cellscope::{ElementSet, GenSet, Permutation, RankCap};
use proptest::prelude::*;

#[test]
fn rs_is_a_bijection_onto_pairs_of_equal_shape() {
    for n in 1..=6 {
        let mut seen = BTreeSet::new();
        for w in group_elements(n, RankCap::default()).unwrap() {
            let sp = rs_insert(&w);
            assert_eq!(sp.p.shape(), sp.q.shape());
            assert!(sp.p.is_standard() && sp.q.is_standard());
            assert_eq!(rs_insert(&w.inverse()).p, sp.q, "w={w}");
            seen.insert((sp.p, sp.q));
        }
        assert_eq!(seen.len(), factorial(n));
    }
}

#[test]
fn cell_counts_are_involution_counts() {
    // one left cell per standard Young tableau; the count is the number of involutions
    for (n, count) in [(1, 1), (2, 2), (3, 4), (4, 10), (5, 26), (6, 76), (7, 232)] {
        assert_eq!(rs_cells(n, RankCap::default()).unwrap().num_cells(), count);
    }
}

/// `y` in `Sym(k)` viewed inside `Sym(n)`, fixing `k+1..=n`.
fn embed(y: &Permutation, n: usize) -> Permutation {
    let mut images = y.images().to_vec();
    images.extend(y.rank() + 1..=n);
    Permutation::new(images).unwrap()
}

#[test]
fn cells_restrict_to_parabolic_subgroups() {
    for n in 2..=5 {
        let cp = approx_cells(n, RankCap::default()).unwrap();
        let small: Vec<CellPartition> = (1..=n)
            .map(|k| approx_cells(k, RankCap::default()).unwrap())
            .collect();
        for j in GenSet::all_subsets(n) {
            let wj = longest_element(&j, n).unwrap();
            let djwj = min_left_coset_reps(&j, n, RankCap::default())
                .unwrap()
                .right_translate(&wj)
                .unwrap();
            for cell in cp
                .cells()
                .iter()
                .filter(|c| c.iter().all(|x| djwj.contains(x)))
            {
                let untranslated = cell.right_translate(&wj).unwrap();
                for k in 1..=n {
                    // K = {s_1, ..., s_{k-1}}, so W_K is Sym(k) on the first k points
                    let kset = GenSet::new(n, 1..k).unwrap();
                    let sub = group_elements(k, RankCap::default()).unwrap();
                    for d in &double_coset_reps(&kset, &j, n, RankCap::default()).unwrap() {
                        let m = conjugate_intersection(&kset, d, &j);
                        let wm = longest_element(&GenSet::new(k, m.iter()).unwrap(), k).unwrap();
                        let trace = ElementSet::from_members(
                            k,
                            sub.iter()
                                .filter(|y| untranslated.contains(&(&embed(y, n) * d)))
                                .map(|y| y * &wm),
                        )
                        .unwrap();
                        assert!(
                            is_union_of_left_cells(&trace, &small[k - 1]).unwrap(),
                            "n={n} J={{{j}}} k={k} d={d}"
                        );
                    }
                }
            }
        }
    }
}

fn subset(max_n: usize) -> impl Strategy<Value = ElementSet> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), factorial(n)).prop_map(move |keep| {
            let all = group_elements(n, RankCap::default()).unwrap();
            ElementSet::from_members(
                n,
                all.into_iter()
                    .zip(keep)
                    .filter(|(_, k)| *k)
                    .map(|(w, _)| w),
            )
            .unwrap()
        })
    })
}

fn unions_of_cells(max_n: usize) -> impl Strategy<Value = ElementSet> {
    (1..=max_n).prop_flat_map(|n| {
        let cp = rs_cells(n, RankCap::default()).unwrap();
        proptest::collection::vec(any::<bool>(), cp.num_cells()).prop_map(move |keep| {
            let members = cp
                .cells()
                .iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .flat_map(|(c, _)| c.iter().cloned().collect::<Vec<_>>());
            ElementSet::from_members(n, members).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn local_check_agrees_on_random_sets(x in subset(5)) {
        let cp = approx_cells(x.rank(), RankCap::default()).unwrap();
        prop_assert_eq!(local_union_check(&x), is_union_of_left_cells(&x, &cp).unwrap());
    }

    #[test]
    fn local_check_accepts_unions_of_cells(x in unions_of_cells(6)) {
        prop_assert!(local_union_check(&x));
    }
}
