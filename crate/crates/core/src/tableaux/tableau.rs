//! Skew tableaux with target interval `[m+1, m+n]`, the canonical fillings
//! `τ^{λ/μ}` (rows in order) and `τ_{λ/μ}` (columns in order), and the
//! bijection between tableaux of a fixed shape and `Sym(n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::perm::{GenSet, Permutation};

/// Default bound on the box count for [`enumerate_std`].
pub const DEFAULT_STD_CAP: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct SkewTableau {
    shape: SkewShape,
    offset: usize,
    /// `rows[i - 1]` holds row `i` from column `μ_i + 1` to `λ_i`.
    rows: Vec<Vec<usize>>,
}

/// Wire form: `{"lambda":[..],"mu":[..],"m":0,"entries":[[row,col,value],..]}`.
#[derive(Serialize, Deserialize)]
struct TableauJson {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    m: usize,
    entries: Vec<[usize; 3]>,
}

impl From<SkewTableau> for TableauJson {
    fn from(t: SkewTableau) -> Self {
        TableauJson {
            lambda: t.shape.lambda().parts().to_vec(),
            mu: t.shape.mu().parts().to_vec(),
            m: t.offset,
            entries: t.entries().into_iter().map(|(r, c, v)| [r, c, v]).collect(),
        }
    }
}

impl TryFrom<TableauJson> for SkewTableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        let shape = SkewShape::from_parts(&j.lambda, &j.mu)?;
        let entries: Vec<_> = j.entries.iter().map(|e| (e[0], e[1], e[2])).collect();
        SkewTableau::from_entries(shape, j.m, &entries)
    }
}

impl SkewTableau {
    /// Builds a tableau from its rows; must be a bijection onto `[m+1, m+n]`.
    pub fn new(shape: SkewShape, offset: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.size();
        if rows.len() != shape.num_rows()
            || rows
                .iter()
                .enumerate()
                .any(|(i, r)| r.len() != shape.row_len(i + 1))
        {
            return Err(Error::InvalidTableau(format!(
                "rows {rows:?} do not fit shape {shape}"
            )));
        }
        let mut seen = vec![false; n];
        for &v in rows.iter().flatten() {
            if v <= offset || v > offset + n || seen[v - offset - 1] {
                return Err(Error::InvalidTableau(format!(
                    "entries {rows:?} are not a bijection onto [{}, {}]",
                    offset + 1,
                    offset + n
                )));
            }
            seen[v - offset - 1] = true;
        }
        Ok(SkewTableau {
            shape,
            offset,
            rows,
        })
    }

    /// Builds a tableau from `(row, col, value)` triples in any order.
    pub fn from_entries(
        shape: SkewShape,
        offset: usize,
        entries: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let mut rows: Vec<Vec<Option<usize>>> = (1..=shape.num_rows())
            .map(|i| vec![None; shape.row_len(i)])
            .collect();
        for &(r, c, v) in entries {
            if !shape.contains_box(r, c) {
                return Err(Error::InvalidTableau(format!(
                    "box ({r},{c}) is not in shape {shape}"
                )));
            }
            let slot = &mut rows[r - 1][c - shape.mu().part(r) - 1];
            if slot.is_some() {
                return Err(Error::InvalidTableau(format!("box ({r},{c}) filled twice")));
            }
            *slot = Some(v);
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidTableau(format!("unfilled boxes in shape {shape}")))?;
        SkewTableau::new(shape, offset, rows)
    }

    /// Fills the boxes of `shape`, in the given order, with `offset + 1, offset + 2, ...`.
    fn fill_in_order(shape: &SkewShape, offset: usize, order: &[(usize, usize)]) -> Self {
        let mut rows: Vec<Vec<usize>> = (1..=shape.num_rows())
            .map(|i| vec![0; shape.row_len(i)])
            .collect();
        for (k, &(i, j)) in order.iter().enumerate() {
            rows[i - 1][j - shape.mu().part(i) - 1] = offset + k + 1;
        }
        SkewTableau {
            shape: shape.clone(),
            offset,
            rows,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        if !self.shape.contains_box(i, j) {
            return None;
        }
        Some(self.rows[i - 1][j - self.shape.mu().part(i) - 1])
    }

    /// `(row, col, value)` in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, usize)> {
        self.shape
            .boxes()
            .into_iter()
            .map(|(i, j)| (i, j, self.get(i, j).expect("box of own shape")))
            .collect()
    }

    /// `(row(t, a), col(t, a))`.
    pub fn position(&self, a: usize) -> Option<(usize, usize)> {
        self.entries()
            .into_iter()
            .find(|&(_, _, v)| v == a)
            .map(|(i, j, _)| (i, j))
    }

    pub fn row_of(&self, a: usize) -> Option<usize> {
        self.position(a).map(|p| p.0)
    }

    pub fn col_of(&self, a: usize) -> Option<usize> {
        self.position(a).map(|p| p.1)
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        self.shape
            .boxes()
            .into_iter()
            .all(|(i, j)| match self.get(i + 1, j) {
                Some(below) => self.get(i, j).expect("box of own shape") < below,
                None => true,
            })
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// `h + t`: adds `h` to every entry (`h` may be negative).
    pub fn shifted(&self, h: isize) -> Result<SkewTableau> {
        let offset = self.offset as isize + h;
        if offset < 0 {
            return Err(Error::EntryOutOfRange {
                k: 0,
                lo: self.offset + 1,
                hi: self.offset + self.size(),
            });
        }
        Ok(SkewTableau {
            shape: self.shape.clone(),
            offset: offset as usize,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| (v as isize + h) as usize).collect())
                .collect(),
        })
    }

    /// `w t`, with `w` acting on the target window: `m + w(t(b) - m)`.
    pub fn act(&self, w: &Permutation) -> Result<SkewTableau> {
        if w.rank() != self.size() {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.size(),
            });
        }
        let m = self.offset;
        Ok(SkewTableau {
            shape: self.shape.clone(),
            offset: m,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| m + w.apply(v - m)).collect())
                .collect(),
        })
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|m={}|", self.shape, self.offset)?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Boxes in the order that fills columns left to right, each top to bottom.
fn column_order(shape: &SkewShape) -> Vec<(usize, usize)> {
    let lc = shape.lambda().conjugate();
    let mc = shape.mu().conjugate();
    (1..=shape.num_cols())
        .flat_map(|j| (mc.part(j) + 1..=lc.part(j)).map(move |i| (i, j)))
        .collect()
}

/// The maximal tableau `m + τ^{λ/μ}`: rows filled in order, top to bottom.
pub fn tau_top(shape: &SkewShape, offset: usize) -> SkewTableau {
    SkewTableau::fill_in_order(shape, offset, &shape.boxes())
}

/// `m + τ_{λ/μ}`: columns filled in order, left to right.
pub fn tau_col(shape: &SkewShape, offset: usize) -> SkewTableau {
    SkewTableau::fill_in_order(shape, offset, &column_order(shape))
}

/// The rank-`n` permutation `w` with `w (m + τ_{λ/μ}) = t`, read on the
/// shifted window `[m+1, m+n]`.
pub fn perm_of(t: &SkewTableau) -> Result<Permutation> {
    if t.size() == 0 {
        return Err(Error::EmptyTableau);
    }
    let m = t.offset();
    let images = column_order(t.shape())
        .into_iter()
        .map(|(i, j)| t.get(i, j).expect("box of own shape") - m)
        .collect();
    Permutation::new(images)
}

/// The permutation `i -> a_i` for the reading word `(a_1, ..., a_n)`: rows
/// concatenated from the last row to the first.
pub fn word_of(t: &SkewTableau) -> Result<Permutation> {
    if t.offset() != 0 {
        return Err(Error::NonzeroOffset(t.offset()));
    }
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    if t.size() == 0 {
        return Err(Error::EmptyTableau);
    }
    Permutation::new(t.rows().iter().rev().flatten().copied().collect())
}

/// `J_{λ/μ}`: the `s_i` with `i` and `i + 1` in the same column of `τ_{λ/μ}`.
pub fn shape_genset(shape: &SkewShape) -> GenSet {
    let n = shape.size();
    let mut j = GenSet::empty(n);
    let lc = shape.lambda().conjugate();
    let mc = shape.mu().conjugate();
    let mut next = 1;
    for col in 1..=shape.num_cols() {
        let height = lc.part(col) - mc.part(col);
        for k in 0..height.saturating_sub(1) {
            j.insert(next + k);
        }
        next += height;
    }
    j
}

/// All standard tableaux of `shape` with target `[m+1, m+n]`, sorted by their
/// entries in row-major box order.
pub fn enumerate_std(shape: &SkewShape, offset: usize) -> Result<Vec<SkewTableau>> {
    enumerate_std_with_cap(shape, offset, DEFAULT_STD_CAP)
}

pub fn enumerate_std_with_cap(
    shape: &SkewShape,
    offset: usize,
    cap: usize,
) -> Result<Vec<SkewTableau>> {
    let n = shape.size();
    if n > cap {
        return Err(Error::SizeCapExceeded(n));
    }
    // filled[i] = number of boxes of row i+1 already holding an entry; the
    // filled boxes of each row form a prefix.
    let rows = shape.num_rows();
    let mut filled = vec![0usize; rows];
    let mut grid: Vec<Vec<usize>> = (1..=rows).map(|i| vec![0; shape.row_len(i)]).collect();
    let mut out = Vec::new();

    fn rec(
        shape: &SkewShape,
        offset: usize,
        next: usize,
        n: usize,
        filled: &mut [usize],
        grid: &mut [Vec<usize>],
        out: &mut Vec<SkewTableau>,
    ) {
        if next > n {
            out.push(SkewTableau {
                shape: shape.clone(),
                offset,
                rows: grid.to_vec(),
            });
            return;
        }
        for i in 1..=filled.len() {
            if filled[i - 1] == shape.row_len(i) {
                continue;
            }
            let j = shape.mu().part(i) + filled[i - 1] + 1;
            // the box above must be outside the shape or already filled
            let above_ok = i == 1
                || !shape.contains_box(i - 1, j)
                || shape.mu().part(i - 1) + filled[i - 2] >= j;
            if !above_ok {
                continue;
            }
            grid[i - 1][filled[i - 1]] = offset + next;
            filled[i - 1] += 1;
            rec(shape, offset, next + 1, n, filled, grid, out);
            filled[i - 1] -= 1;
        }
    }

    rec(shape, offset, 1, n, &mut filled, &mut grid, &mut out);
    out.sort();
    Ok(out)
}

/// `t<k`: drops every box whose entry is at least `k`.
pub fn restrict_below(t: &SkewTableau, k: usize) -> Result<SkewTableau> {
    let (m, n) = (t.offset(), t.size());
    if k <= m || k > m + n + 1 {
        return Err(Error::EntryOutOfRange {
            k,
            lo: m + 1,
            hi: m + n + 1,
        });
    }
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let kept: Vec<Vec<usize>> = t
        .rows()
        .iter()
        .map(|r| r.iter().copied().filter(|&v| v < k).collect())
        .collect();
    let kappa: Vec<usize> = kept
        .iter()
        .enumerate()
        .map(|(i, r)| t.shape().mu().part(i + 1) + r.len())
        .collect();
    let shape = SkewShape::new(Partition::new(kappa)?, t.shape().mu().clone())?;
    let rows = kept.into_iter().take(shape.num_rows()).collect();
    SkewTableau::new(shape, m, rows)
}

/// `t>k`: drops every box whose entry is at most `k`; the result has offset `k`.
pub fn restrict_above(t: &SkewTableau, k: usize) -> Result<SkewTableau> {
    let (m, n) = (t.offset(), t.size());
    if k < m || k > m + n {
        return Err(Error::EntryOutOfRange {
            k,
            lo: m,
            hi: m + n,
        });
    }
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let nu: Vec<usize> = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| t.shape().mu().part(i + 1) + r.iter().filter(|&&v| v <= k).count())
        .collect();
    let shape = SkewShape::new(t.shape().lambda().clone(), Partition::new(nu)?)?;
    let rows = t
        .rows()
        .iter()
        .map(|r| r.iter().copied().filter(|&v| v > k).collect())
        .collect();
    SkewTableau::new(shape, k, rows)
}
