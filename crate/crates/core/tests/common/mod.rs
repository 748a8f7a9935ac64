//! Helpers shared by the integration test targets.

#![allow(dead_code)]

use cellscope::parabolic::{conjugate_intersection, left_decompose};
use cellscope::tableaux::{
    enumerate_std, perm_of, restrict_above, restrict_below, shape_genset, skew_shapes_in_box,
    tau_col, SkewShape, SkewTableau,
};
use cellscope::{GenSet, Permutation};
use rand::Rng;

/// Every skew shape with exactly `n` boxes whose outer partition fits in an
/// `n x n` box. Shapes with empty rows or columns are included.
pub fn shapes_of_size(n: usize) -> Vec<SkewShape> {
    skew_shapes_in_box(n, n, n)
}

pub fn standard_tableaux_of_size(n: usize) -> Vec<SkewTableau> {
    shapes_of_size(n)
        .iter()
        .flat_map(|s| enumerate_std(s, 0).unwrap())
        .collect()
}

/// A random standard tableau with `n` boxes: a random inner partition, then
/// `n` boxes added one at a time at random outer corners.
pub fn random_standard_tableau<R: Rng>(rng: &mut R, n: usize) -> SkewTableau {
    let rows = rng.gen_range(1..=n + 1);
    let mut mu: Vec<usize> = (0..rows).map(|_| rng.gen_range(0..=n)).collect();
    mu.sort_unstable_by(|a, b| b.cmp(a));
    let mut lambda = mu.clone();
    let mut entries = Vec::with_capacity(n);
    for k in 1..=n {
        let corners: Vec<usize> = (0..lambda.len())
            .filter(|&i| i == 0 || lambda[i] < lambda[i - 1])
            .collect();
        let i = corners[rng.gen_range(0..corners.len())];
        lambda[i] += 1;
        entries.push((i + 1, lambda[i], k));
    }
    let shape = SkewShape::from_parts(&lambda, &mu).unwrap();
    SkewTableau::from_entries(shape, 0, &entries).unwrap()
}

/// `y` in `Sym(n-1)` viewed inside `Sym(n)`, fixing `n`.
pub fn embed_low(y: &Permutation) -> Permutation {
    let mut images = y.images().to_vec();
    images.push(y.rank() + 1);
    Permutation::new(images).unwrap()
}

/// `y` in `Sym(n-1)` viewed inside `Sym(n)` acting on `2..=n`, fixing `1`.
pub fn embed_high(y: &Permutation) -> Permutation {
    let images = std::iter::once(1)
        .chain(y.images().iter().map(|v| v + 1))
        .collect();
    Permutation::new(images).unwrap()
}

/// Checks both parts of the restriction identities for one standard tableau
/// with at least two boxes and offset 0. Returns a description of the first
/// identity that fails.
pub fn check_restriction_identities(t: &SkewTableau) -> Result<(), String> {
    let n = t.size();
    let w = perm_of(t).unwrap();
    let j = shape_genset(t.shape());
    let k = GenSet::new(n, 1..=n - 2).unwrap();
    let l = GenSet::new(n, 2..=n - 1).unwrap();
    let fail = |what: &str| Err(format!("{what} for {t:?}"));

    let below = restrict_below(t, n).unwrap();
    let dk = left_decompose(&w, &k).unwrap();
    if embed_low(&perm_of(&below).unwrap()) != dk.left_component {
        return fail("left K-component");
    }
    let mut entries = tau_col(below.shape(), 0).entries();
    let (i, c) = t.position(n).unwrap();
    entries.push((i, c, n));
    let t1 = SkewTableau::from_entries(t.shape().clone(), 0, &entries).unwrap();
    if perm_of(&t1).unwrap() != dk.min_rep {
        return fail("D_K^-1 component");
    }
    let jk = shape_genset(below.shape());
    if conjugate_intersection(&k, &dk.min_rep, &j) != GenSet::new(n, jk.iter()).unwrap() {
        return fail("K-intersection");
    }

    let above = restrict_above(t, 1).unwrap();
    let dl = left_decompose(&w, &l).unwrap();
    if embed_high(&perm_of(&above).unwrap()) != dl.left_component {
        return fail("left L-component");
    }
    let mut entries = tau_col(above.shape(), 1).entries();
    let (i, c) = t.position(1).unwrap();
    entries.push((i, c, 1));
    let t2 = SkewTableau::from_entries(t.shape().clone(), 0, &entries).unwrap();
    if perm_of(&t2).unwrap() != dl.min_rep {
        return fail("D_L^-1 component");
    }
    let jl = shape_genset(above.shape());
    if conjugate_intersection(&l, &dl.min_rep, &j)
        != GenSet::new(n, jl.iter().map(|i| i + 1)).unwrap()
    {
        return fail("L-intersection");
    }
    Ok(())
}
