//! Standard parabolic subgroups `W_J`, their longest elements, and minimal
//! coset representatives.

use crate::error::{Error, Result};
use crate::perm::{group_elements, ElementSet, GenSet, Permutation, RankCap};

/// `w = left_component * min_rep` with `left_component` in `W_K` and
/// `min_rep` the shortest element of the right coset `W_K w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub left_component: Permutation,
    pub min_rep: Permutation,
    pub k: GenSet,
}

/// The longest element `w_J`: reverses each block of points.
pub fn longest_element(j: &GenSet, n: usize) -> Result<Permutation> {
    if j.rank() != n {
        return Err(Error::RankMismatch {
            left: j.rank(),
            right: n,
        });
    }
    let mut images: Vec<usize> = (1..=n).collect();
    for (a, b) in j.blocks() {
        images[a - 1..b].reverse();
    }
    Permutation::new(images)
}

/// `w(i) < w(i+1)` for every `i` in `J`.
pub fn in_dj(w: &Permutation, j: &GenSet) -> bool {
    j.iter().all(|i| w.apply(i) < w.apply(i + 1))
}

/// No left descent of `d` lies in `K`, i.e. `d` is in `D_K^{-1}`.
pub fn in_dk_inverse(d: &Permutation, k: &GenSet) -> bool {
    d.left_descents().mask() & k.mask() == 0
}

/// Whether `w` lies in `W_K`, i.e. maps every block of `K` to itself.
pub fn in_parabolic(w: &Permutation, k: &GenSet) -> bool {
    k.blocks()
        .into_iter()
        .all(|(a, b)| (a..=b).all(|p| (a..=b).contains(&w.apply(p))))
}

/// `D_J`, in lexicographic order.
pub fn min_left_coset_reps(j: &GenSet, n: usize, cap: RankCap) -> Result<ElementSet> {
    ElementSet::from_members(
        n,
        group_elements(n, cap)?.into_iter().filter(|w| in_dj(w, j)),
    )
}

/// `D_{K,J} = D_K^{-1} ∩ D_J`.
pub fn double_coset_reps(k: &GenSet, j: &GenSet, n: usize, cap: RankCap) -> Result<ElementSet> {
    ElementSet::from_members(
        n,
        group_elements(n, cap)?
            .into_iter()
            .filter(|d| in_dk_inverse(d, k) && in_dj(d, j)),
    )
}

/// Splits `w` into its left `W_K`-component and `D_K^{-1}`-component.
///
/// Left multiplication by `W_K` permutes values inside each block of `K`, so
/// the shortest element of `W_K w` places each block's values in increasing
/// order of position.
pub fn left_decompose(w: &Permutation, k: &GenSet) -> Result<CosetDecomposition> {
    let n = w.rank();
    if k.rank() != n {
        return Err(Error::RankMismatch {
            left: k.rank(),
            right: n,
        });
    }
    let mut block_of = vec![0usize; n + 1];
    let blocks = k.blocks();
    for (idx, &(a, b)) in blocks.iter().enumerate() {
        for v in a..=b {
            block_of[v] = idx;
        }
    }
    let mut next_value: Vec<usize> = blocks.iter().map(|&(a, _)| a).collect();
    let mut rep = Vec::with_capacity(n);
    for &v in w.images() {
        let b = block_of[v];
        rep.push(next_value[b]);
        next_value[b] += 1;
    }
    let min_rep = Permutation::new(rep)?;
    let left_component = w.multiply(&min_rep.inverse())?;
    Ok(CosetDecomposition {
        left_component,
        min_rep,
        k: *k,
    })
}

/// `d J d^{-1} ∩ K`: the `s_i` in `K` whose conjugate `d^{-1} s_i d` is a
/// generator in `J`.
pub fn conjugate_intersection(k: &GenSet, d: &Permutation, j: &GenSet) -> GenSet {
    let mut out = GenSet::empty(k.rank());
    for i in j.iter() {
        let (a, b) = (d.apply(i), d.apply(i + 1));
        let lo = a.min(b);
        if a.abs_diff(b) == 1 && k.contains(lo) {
            out.insert(lo);
        }
    }
    out
}
