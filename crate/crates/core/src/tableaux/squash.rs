//! Column slides and the squash normal form.
//!
//! `slide_bound(t, j)` is how far column `j` can move up relative to column
//! `j + 1` while the tableau stays standard. Squashing moves every column `j`
//! up by the sum of the bounds of columns `j..=λ_1`, which keeps `perm(t)`.

use super::shape::{Partition, SkewShape};
use super::tableau::{perm_of, tau_col, SkewTableau};
use crate::error::{Error, Result};
use crate::parabolic::in_dj;
use crate::perm::{GenSet, Permutation};

/// `m(t, j)`: the largest `k <= min(λ*_j - λ*_{j+1}, μ*_j - μ*_{j+1})` such
/// that `t(i + k, j) < t(i, j + 1)` whenever both boxes exist.
pub fn slide_bound(t: &SkewTableau, j: usize) -> Result<usize> {
    let shape = t.shape();
    if j == 0 || j > shape.num_cols() {
        return Err(Error::ColumnOutOfRange {
            j,
            max: shape.num_cols(),
        });
    }
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let lc = shape.lambda().conjugate();
    let mc = shape.mu().conjugate();
    Ok(slide_bound_unchecked(t, j, &lc, &mc))
}

fn slide_bound_unchecked(t: &SkewTableau, j: usize, lc: &Partition, mc: &Partition) -> usize {
    let limit = (lc.part(j) - lc.part(j + 1)).min(mc.part(j) - mc.part(j + 1));
    // M(t, j) is an interval [0, m(t, j)], so stop at the first failure.
    let mut best = 0;
    for k in 1..=limit {
        let fits = (mc.part(j) + 1 - k..=lc.part(j + 1)).all(|i| {
            t.get(i + k, j).expect("box in column j") < t.get(i, j + 1).expect("box in column j+1")
        });
        if !fits {
            break;
        }
        best = k;
    }
    best
}

/// `sqsh(t)`: slides every column up by `δ_j(t) = Σ_{l >= j} m(t, l)`.
pub fn squash(t: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let shape = t.shape();
    let cols = shape.num_cols();
    let lc = shape.lambda().conjugate();
    let mc = shape.mu().conjugate();
    let bounds: Vec<usize> = (1..=cols)
        .map(|j| slide_bound_unchecked(t, j, &lc, &mc))
        .collect();
    let mut delta = vec![0usize; cols + 2];
    for j in (1..=cols).rev() {
        delta[j] = delta[j + 1] + bounds[j - 1];
    }
    if delta[1] == 0 {
        return Ok(t.clone());
    }
    let zeta_conj: Vec<usize> = (1..=cols).map(|j| lc.part(j) - delta[j]).collect();
    let eta_conj: Vec<usize> = (1..=cols).map(|j| mc.part(j) - delta[j]).collect();
    let zeta = Partition::new(zeta_conj)?.conjugate();
    let eta = Partition::new(eta_conj)?.conjugate();
    let new_shape = SkewShape::new(zeta, eta)?;
    let entries: Vec<_> = new_shape
        .boxes()
        .into_iter()
        .map(|(i, j)| {
            let v = t
                .get(i + delta[j], j)
                .expect("slid box comes from the old shape");
            (i, j, v)
        })
        .collect();
    SkewTableau::from_entries(new_shape, t.offset(), &entries)
}

pub fn is_squashed(t: &SkewTableau) -> Result<bool> {
    Ok(squash(t)? == *t)
}

/// The shape in which every row has length 1 and column `c` holds the `c`-th
/// block of `J`, columns stacked so that later columns sit higher.
pub fn staircase_shape(j: &GenSet) -> SkewShape {
    let blocks = j.blocks();
    let mut lambda = Vec::with_capacity(j.rank());
    for (c, &(a, b)) in blocks.iter().enumerate().rev() {
        lambda.extend(std::iter::repeat_n(c + 1, b - a + 1));
    }
    let mu: Vec<usize> = lambda.iter().map(|&p| p - 1).collect();
    SkewShape::new(
        Partition::new(lambda).expect("column indices decrease down the rows"),
        Partition::new(mu).expect("column indices decrease down the rows"),
    )
    .expect("μ_i = λ_i - 1")
}

/// `τ(J, w)`: the unique squashed standard tableau with `perm = w` whose
/// shape has generator set `J`.
pub fn canonical_tableau(j: &GenSet, w: &Permutation) -> Result<SkewTableau> {
    if j.rank() != w.rank() {
        return Err(Error::RankMismatch {
            left: j.rank(),
            right: w.rank(),
        });
    }
    if !in_dj(w, j) {
        return Err(Error::NotInDJ {
            w: w.to_string(),
            j: j.to_string(),
        });
    }
    let shape = staircase_shape(j);
    let t = tau_col(&shape, 0).act(w)?;
    let sq = squash(&t)?;
    debug_assert_eq!(perm_of(&sq).as_ref(), Ok(w));
    Ok(sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::tableau::{shape_genset, tau_top};

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn tab(s: &str, entries: &[(usize, usize, usize)]) -> SkewTableau {
        SkewTableau::from_entries(shape(s), 0, entries).unwrap()
    }

    #[test]
    fn slide_bound_examples() {
        assert_eq!(slide_bound(&tau_top(&shape("2,2/1"), 0), 1).unwrap(), 0);
        assert_eq!(
            slide_bound(&tab("2,1/1", &[(2, 1, 1), (1, 2, 2)]), 1).unwrap(),
            1
        );
        assert_eq!(
            slide_bound(&tab("2,1/1", &[(2, 1, 2), (1, 2, 1)]), 1).unwrap(),
            0
        );
        assert!(slide_bound(&tau_top(&shape("2,1"), 0), 3).is_err());
        assert!(slide_bound(&tau_top(&shape("2,1"), 0), 0).is_err());
    }

    #[test]
    fn squash_examples() {
        let t = tau_top(&shape("2,1"), 0);
        assert_eq!(squash(&t).unwrap(), t);
        let slid = tab("2,1/1", &[(2, 1, 1), (1, 2, 2)]);
        assert_eq!(squash(&slid).unwrap(), tau_top(&shape("2"), 0));
        let empty_top = tau_top(&shape("2,2/2"), 0);
        assert_eq!(empty_top.get(2, 1), Some(1));
        assert_eq!(squash(&empty_top).unwrap(), tau_top(&shape("2"), 0));
    }

    #[test]
    fn squashed_examples() {
        assert!(is_squashed(&tau_top(&shape("2,1"), 0)).unwrap());
        assert!(!is_squashed(&tab("2,1/1", &[(2, 1, 1), (1, 2, 2)])).unwrap());
        for s in ["1", "3/2", "2/1"] {
            assert!(is_squashed(&tau_top(&shape(s), 0)).unwrap(), "{s}");
        }
        // a single box below an empty row is lifted into the first row
        let low = tau_top(&shape("2,1/2"), 0);
        assert!(!is_squashed(&low).unwrap());
        assert_eq!(squash(&low).unwrap(), tau_top(&shape("1"), 0));
    }

    #[test]
    fn staircase() {
        assert_eq!(staircase_shape(&GenSet::empty(2)), shape("2,1/1"));
        assert_eq!(staircase_shape(&GenSet::full(3)), shape("1,1,1"));
        let j = GenSet::new(4, [1, 3]).unwrap();
        let s = staircase_shape(&j);
        assert_eq!(s, shape("2,2,1,1/1,1"));
        assert_eq!(shape_genset(&s), j);
    }

    #[test]
    fn canonical_examples() {
        let e2 = Permutation::identity(2).unwrap();
        assert_eq!(
            canonical_tableau(&GenSet::empty(2), &e2).unwrap(),
            tau_top(&shape("2"), 0)
        );
        let e3 = Permutation::identity(3).unwrap();
        assert_eq!(
            canonical_tableau(&GenSet::full(3), &e3).unwrap(),
            tau_top(&shape("1,1,1"), 0)
        );
        let j1 = GenSet::new(3, [1]).unwrap();
        let w: Permutation = "1,3,2".parse().unwrap();
        assert_eq!(
            canonical_tableau(&j1, &w).unwrap(),
            tau_top(&shape("2,1"), 0)
        );
        let bad: Permutation = "2,1,3".parse().unwrap();
        assert!(matches!(
            canonical_tableau(&j1, &bad),
            Err(Error::NotInDJ { .. })
        ));
    }
}
