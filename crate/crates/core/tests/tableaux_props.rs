mod common;

use std::collections::{BTreeMap, BTreeSet};

use cellscope::parabolic::min_left_coset_reps;
use cellscope::perm::{group_elements, left_weak_leq};
use cellscope::tableaux::{
    basic_skew_shapes, canonical_tableau, enumerate_std, is_squashed, perm_of, restrict_above,
    restrict_below, shape_genset, squash, tau_col, tau_top, word_of, SkewShape, SkewTableau,
};
use cellscope::{Permutation, RankCap};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn perm_is_word_times_column_word_inverse() {
    for n in 1..=5 {
        for t in common::standard_tableaux_of_size(n) {
            let col = word_of(&tau_col(t.shape(), 0)).unwrap();
            assert_eq!(
                perm_of(&t).unwrap(),
                &word_of(&t).unwrap() * &col.inverse(),
                "{t:?}"
            );
        }
    }
}

#[test]
fn squashing_a_maximal_tableau_drops_empty_rows() {
    for n in 1..=6 {
        for shape in common::shapes_of_size(n) {
            let expected = tau_top(&shape.without_empty_rows(), 0);
            assert_eq!(squash(&tau_top(&shape, 0)).unwrap(), expected, "{shape}");
        }
    }
}

#[test]
fn squash_agrees_exactly_when_perms_agree() {
    // comparable tableaux have the same column lengths, column by column
    let column_lengths = |s: &SkewShape| -> Vec<usize> {
        let (lc, mc) = (s.lambda().conjugate(), s.mu().conjugate());
        (1..=s.num_cols())
            .map(|j| lc.part(j) - mc.part(j))
            .collect()
    };
    for n in 1..=4 {
        let mut by_columns: BTreeMap<Vec<usize>, Vec<SkewTableau>> = BTreeMap::new();
        for t in common::standard_tableaux_of_size(n) {
            by_columns
                .entry(column_lengths(t.shape()))
                .or_default()
                .push(t);
        }
        for tabs in by_columns.values() {
            for a in tabs {
                for b in tabs {
                    let same_perm = perm_of(a).unwrap() == perm_of(b).unwrap();
                    assert_eq!(
                        squash(a).unwrap() == squash(b).unwrap(),
                        same_perm,
                        "{a:?} {b:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn canonical_tableau_is_the_squash_class_representative() {
    for n in 1..=5 {
        let basic = basic_skew_shapes(n)
            .iter()
            .flat_map(|s| enumerate_std(s, 0).unwrap())
            .collect::<Vec<_>>();
        for t in basic {
            let j = shape_genset(t.shape());
            let c = canonical_tableau(&j, &perm_of(&t).unwrap()).unwrap();
            assert!(is_squashed(&c).unwrap());
            assert_eq!(shape_genset(c.shape()), j);
            assert_eq!(squash(&t).unwrap(), c, "{t:?}");
        }
    }
}

#[test]
fn restriction_identities() {
    for n in 2..=5 {
        for t in common::standard_tableaux_of_size(n) {
            common::check_restriction_identities(&t).unwrap();
        }
    }
}

fn shape(lambda: &[usize], mu: &[usize]) -> SkewShape {
    SkewShape::from_parts(lambda, mu).unwrap()
}

#[test]
fn restrictions_of_maximal_tableaux_squash_to_maximal_tableaux() {
    for n in 2..=6 {
        for s in basic_skew_shapes(n) {
            assert!(!s.has_empty_rows());
            let top = tau_top(&s, 0);
            let lam = s.lambda().parts().to_vec();
            let mu: Vec<usize> = (1..=lam.len()).map(|i| s.mu().part(i)).collect();

            let u = squash(&restrict_above(&top, 1).unwrap()).unwrap();
            let expected_u = if mu[0] + 1 < lam[0] {
                let mut nu = mu.clone();
                nu[0] += 1;
                tau_top(&shape(&lam, &nu), 1)
            } else {
                tau_top(&shape(&lam[1..], &mu[1..]), 1)
            };
            assert_eq!(u, expected_u, "upper restriction of {s}");

            let q = lam.len();
            let r = squash(&restrict_below(&top, n).unwrap()).unwrap();
            let expected_r = if mu[q - 1] + 1 < lam[q - 1] {
                let mut kappa = lam.clone();
                kappa[q - 1] -= 1;
                tau_top(&shape(&kappa, &mu), 0)
            } else {
                tau_top(&shape(&lam[..q - 1], &mu[..q - 1]), 0)
            };
            assert_eq!(r, expected_r, "lower restriction of {s}");
        }
    }
}

#[test]
fn coset_reps_give_the_column_standard_tableaux() {
    for n in 1..=5 {
        let all = group_elements(n, RankCap::default()).unwrap();
        for s in common::shapes_of_size(n) {
            let j = shape_genset(&s);
            let col = tau_col(&s, 0);
            let from_reps: BTreeSet<SkewTableau> = min_left_coset_reps(&j, n, RankCap::default())
                .unwrap()
                .iter()
                .map(|d| col.act(d).unwrap())
                .collect();
            let column_standard: BTreeSet<SkewTableau> = all
                .iter()
                .map(|w| col.act(w).unwrap())
                .filter(|t| t.is_column_standard())
                .collect();
            assert_eq!(from_reps, column_standard, "{s}");
        }
    }
}

#[test]
fn standard_iff_below_the_maximal_perm() {
    for n in 1..=5 {
        let all = group_elements(n, RankCap::default()).unwrap();
        for s in common::shapes_of_size(n) {
            let top = perm_of(&tau_top(&s, 0)).unwrap();
            let col = tau_col(&s, 0);
            for w in &all {
                let t = col.act(w).unwrap();
                assert_eq!(t.is_standard(), left_weak_leq(w, &top).unwrap(), "{s} {w}");
            }
        }
    }
}

proptest! {
    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 1usize..=8) {
        let t = common::random_standard_tableau(&mut StdRng::seed_from_u64(seed), n);
        let text = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<SkewTableau>(&text).unwrap(), t);
    }

    #[test]
    fn shifting_keeps_perm(seed in any::<u64>(), n in 1usize..=8, h in 0usize..5) {
        let t = common::random_standard_tableau(&mut StdRng::seed_from_u64(seed), n);
        let moved = t.shifted(h as isize).unwrap();
        prop_assert_eq!(moved.offset(), h);
        prop_assert_eq!(perm_of(&moved).unwrap(), perm_of(&t).unwrap());
        prop_assert_eq!(squash(&moved).unwrap().shifted(-(h as isize)).unwrap(), squash(&t).unwrap());
    }

    #[test]
    fn acting_composes(seed in any::<u64>(), n in 1usize..=7) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = common::random_standard_tableau(&mut rng, n);
        let x = Permutation::from_lex_rank(n, (seed as usize) % cellscope::perm::factorial(n)).unwrap();
        let y = perm_of(&t).unwrap();
        prop_assert_eq!(tau_col(t.shape(), 0).act(&y).unwrap(), t.clone());
        prop_assert_eq!(t.act(&x).unwrap(), tau_col(t.shape(), 0).act(&(&x * &y)).unwrap());
    }
}
