//! Kazhdan–Lusztig left cells of `Sym(n)`.
//!
//! Two independent constructions are provided: the closure of the relation
//! `x ≈ s x` (for `x < s x` with `L(x) ⊄ L(s x)`), and the fibers of the
//! Robinson–Schensted recording tableau. [`cross_validated_cells`] builds
//! both and refuses to return if they disagree.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::parabolic::left_decompose;
use crate::perm::{group_elements, ElementSet, GenSet, Permutation, RankCap};
use crate::tableaux::{Partition, SkewShape, SkewTableau};

/// A partition of `Sym(n)` into left cells, numbered in order of their
/// lexicographically smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPartition {
    n: usize,
    /// Cell id indexed by lexicographic rank.
    cell_of: Vec<u32>,
    cells: Vec<ElementSet>,
}

impl CellPartition {
    /// `labels[k]` is an arbitrary class label for the `k`-th element of
    /// `elements` (lexicographic order); ids are reassigned canonically.
    fn from_labels(n: usize, elements: Vec<Permutation>, labels: &[usize]) -> Self {
        let mut relabel: HashMap<usize, u32> = HashMap::new();
        let mut cell_of = Vec::with_capacity(elements.len());
        let mut cells: Vec<ElementSet> = Vec::new();
        for (w, &label) in elements.into_iter().zip(labels) {
            let next = relabel.len() as u32;
            let id = *relabel.entry(label).or_insert(next);
            if id as usize == cells.len() {
                cells.push(ElementSet::new(n));
            }
            cell_of.push(id);
            cells[id as usize].insert(w).expect("uniform rank");
        }
        CellPartition { n, cell_of, cells }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn cell_id(&self, w: &Permutation) -> usize {
        self.cell_of[w.lex_rank()] as usize
    }

    pub fn cells(&self) -> &[ElementSet] {
        &self.cells
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cell(&self, id: usize) -> &ElementSet {
        &self.cells[id]
    }
}

/// Disjoint-set forest with path halving and union by size.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// The generating edges `(x, s_i x)` of `≈`, as pairs of lexicographic ranks.
fn approx_edges(elements: &[Permutation]) -> Vec<(usize, usize)> {
    let masks: Vec<u64> = elements.iter().map(|w| w.left_descents().mask()).collect();
    let mut edges = Vec::new();
    for (k, x) in elements.iter().enumerate() {
        for i in 1..x.rank() {
            if masks[k] & (1 << i) != 0 {
                continue;
            }
            let y = x.left_mul_simple(i);
            let ky = y.lex_rank();
            if masks[k] & !masks[ky] != 0 {
                edges.push((k, ky));
            }
        }
    }
    edges
}

/// Left cells as the classes of the `≈` closure.
pub fn approx_cells(n: usize, cap: RankCap) -> Result<CellPartition> {
    let elements = group_elements(n, cap)?;
    let mut uf = UnionFind::new(elements.len());
    for (a, b) in approx_edges(&elements) {
        uf.union(a, b);
    }
    let labels: Vec<usize> = (0..elements.len()).map(|k| uf.find(k)).collect();
    Ok(CellPartition::from_labels(n, elements, &labels))
}

/// Insertion tableau `P(w)` and recording tableau `Q(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPairing {
    pub p: SkewTableau,
    pub q: SkewTableau,
}

/// Robinson–Schensted row insertion of `w(1), ..., w(n)`.
pub fn rs_insert(w: &Permutation) -> StandardPairing {
    let mut p_rows: Vec<Vec<usize>> = Vec::new();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (step, &value) in w.images().iter().enumerate() {
        let mut x = value;
        let mut row = 0;
        loop {
            if row == p_rows.len() {
                p_rows.push(vec![x]);
                q_rows.push(vec![step + 1]);
                break;
            }
            let r = &mut p_rows[row];
            match r.iter().position(|&y| y > x) {
                Some(pos) => {
                    x = std::mem::replace(&mut r[pos], x);
                    row += 1;
                }
                None => {
                    r.push(x);
                    q_rows[row].push(step + 1);
                    break;
                }
            }
        }
    }
    let shape = SkewShape::straight(
        Partition::new(p_rows.iter().map(Vec::len).collect()).expect("RS shapes are partitions"),
    );
    StandardPairing {
        p: SkewTableau::new(shape.clone(), 0, p_rows).expect("RS produces a tableau"),
        q: SkewTableau::new(shape, 0, q_rows).expect("RS produces a tableau"),
    }
}

/// Left cells as the fibers of `w -> Q(w)`.
pub fn rs_cells(n: usize, cap: RankCap) -> Result<CellPartition> {
    let elements = group_elements(n, cap)?;
    let mut ids: HashMap<SkewTableau, usize> = HashMap::new();
    let labels: Vec<usize> = elements
        .iter()
        .map(|w| {
            let next = ids.len();
            *ids.entry(rs_insert(w).q).or_insert(next)
        })
        .collect();
    Ok(CellPartition::from_labels(n, elements, &labels))
}

/// Builds the `≈` partition and checks it against the RS partition. On
/// disagreement the error names a witness pair.
pub fn cross_validated_cells(n: usize, cap: RankCap) -> Result<CellPartition> {
    let approx = approx_cells(n, cap)?;
    let rs = rs_cells(n, cap)?;
    if approx == rs {
        return Ok(approx);
    }
    let elements = group_elements(n, cap)?;
    for (a, b) in approx_edges(&elements) {
        if rs.cell_of[a] != rs.cell_of[b] {
            return Err(Error::OracleMismatch {
                n,
                detail: format!(
                    "edge {} ~ {} joins elements with different Q-symbols",
                    elements[a], elements[b]
                ),
            });
        }
    }
    for cell in rs.cells() {
        let mut it = cell.iter();
        let first = it.next().expect("cells are nonempty");
        if let Some(other) = it.find(|w| approx.cell_id(w) != approx.cell_id(first)) {
            return Err(Error::OracleMismatch {
                n,
                detail: format!("{first} and {other} share a Q-symbol but are not ≈-equivalent"),
            });
        }
    }
    unreachable!("partitions differ but no witness was found")
}

/// Every cell is either contained in `x` or disjoint from it.
pub fn is_union_of_left_cells(x: &ElementSet, cp: &CellPartition) -> Result<bool> {
    if x.rank() != cp.rank() {
        return Err(Error::RankMismatch {
            left: x.rank(),
            right: cp.rank(),
        });
    }
    let mut hits: HashMap<usize, usize> = HashMap::new();
    for w in x {
        *hits.entry(cp.cell_id(w)).or_default() += 1;
    }
    Ok(hits
        .into_iter()
        .all(|(id, count)| cp.cell(id).len() == count))
}

/// The union-of-cells test done one rank-2 coset at a time.
///
/// For each adjacent pair `s = s_i`, `t = s_{i+1}` and each `d` with
/// `s d > d`, `t d > d`, the trace `{y in <s, t> : y d in X}` must contain
/// `t` iff it contains `st`, and `s` iff it contains `ts`. Only cosets that
/// meet `X` need checking, since an empty trace passes.
pub fn local_union_check(x: &ElementSet) -> bool {
    let n = x.rank();
    if n < 3 {
        // Sym(1) and Sym(2) have only singleton cells
        return true;
    }
    let mut visited: BTreeSet<(usize, Permutation)> = BTreeSet::new();
    for w in x {
        for i in 1..n - 1 {
            let k = GenSet::new(n, [i, i + 1]).expect("adjacent pair in range");
            let d = left_decompose(w, &k).expect("ranks agree").min_rep;
            if !visited.insert((i, d.clone())) {
                continue;
            }
            let (s, t) = (i, i + 1);
            let td = d.left_mul_simple(t);
            let sd = d.left_mul_simple(s);
            let std = td.left_mul_simple(s);
            let tsd = sd.left_mul_simple(t);
            if x.contains(&td) != x.contains(&std) || x.contains(&sd) != x.contains(&tsd) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(n: usize, v: &[&str]) -> ElementSet {
        ElementSet::from_members(n, v.iter().map(|s| p(s))).unwrap()
    }

    fn as_sets(cp: &CellPartition) -> BTreeSet<Vec<Permutation>> {
        cp.cells()
            .iter()
            .map(|c| c.iter().cloned().collect())
            .collect()
    }

    #[test]
    fn rank_two_cells_are_singletons() {
        let cap = RankCap::default();
        for cp in [approx_cells(2, cap).unwrap(), rs_cells(2, cap).unwrap()] {
            assert_eq!(
                as_sets(&cp),
                BTreeSet::from([vec![p("1,2")], vec![p("2,1")]])
            );
        }
    }

    #[test]
    fn rank_three_cells() {
        // {e}, {s_2, s_1 s_2}, {s_1, s_2 s_1}, {s_1 s_2 s_1}
        let expected = BTreeSet::from([
            vec![p("1,2,3")],
            vec![p("1,3,2"), p("2,3,1")],
            vec![p("2,1,3"), p("3,1,2")],
            vec![p("3,2,1")],
        ]);
        let cap = RankCap::default();
        assert_eq!(as_sets(&approx_cells(3, cap).unwrap()), expected);
        assert_eq!(as_sets(&rs_cells(3, cap).unwrap()), expected);
    }

    #[test]
    fn rank_four_and_five_counts() {
        let cap = RankCap::default();
        let c4 = approx_cells(4, cap).unwrap();
        assert_eq!(c4.num_cells(), 10);
        assert_eq!(c4.cells().iter().map(ElementSet::len).sum::<usize>(), 24);
        assert_eq!(c4, rs_cells(4, cap).unwrap());
        assert_eq!(rs_cells(5, cap).unwrap().num_cells(), 26);
    }

    #[test]
    fn rs_examples() {
        let tab = |rows: Vec<Vec<usize>>| {
            let shape =
                SkewShape::straight(Partition::new(rows.iter().map(Vec::len).collect()).unwrap());
            SkewTableau::new(shape, 0, rows).unwrap()
        };
        let e = rs_insert(&p("1,2,3"));
        assert_eq!(e.p, tab(vec![vec![1, 2, 3]]));
        assert_eq!(e.q, tab(vec![vec![1, 2, 3]]));
        let w = rs_insert(&p("2,3,1"));
        assert_eq!(w.p, tab(vec![vec![1, 3], vec![2]]));
        assert_eq!(w.q, tab(vec![vec![1, 2], vec![3]]));
        let w = rs_insert(&p("1,3,2"));
        assert_eq!(w.p, tab(vec![vec![1, 2], vec![3]]));
        assert_eq!(w.q, tab(vec![vec![1, 2], vec![3]]));
    }

    #[test]
    fn union_examples() {
        let cp = approx_cells(3, RankCap::default()).unwrap();
        assert!(is_union_of_left_cells(&ElementSet::new(3), &cp).unwrap());
        assert!(is_union_of_left_cells(&set(3, &["1,3,2", "2,3,1"]), &cp).unwrap());
        assert!(!is_union_of_left_cells(&set(3, &["1,3,2"]), &cp).unwrap());
        assert!(is_union_of_left_cells(&set(4, &["1,2,3,4"]), &cp).is_err());
    }

    #[test]
    fn local_examples() {
        assert!(local_union_check(&ElementSet::new(3)));
        assert!(local_union_check(&set(3, &["1,3,2", "2,3,1"])));
        assert!(!local_union_check(&set(3, &["1,3,2"])));
    }

    #[test]
    fn cross_validation_passes() {
        for n in 1..=6 {
            cross_validated_cells(n, RankCap::default()).unwrap();
        }
    }
}
