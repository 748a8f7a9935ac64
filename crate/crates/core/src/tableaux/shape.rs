//! Partitions and skew shapes. Rows and columns are 1-based throughout, and a
//! partition's part `i` is zero beyond its last part.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; any other zero or increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i`, zero for `i` past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ*_j = #{ i : λ_i >= j }`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.num_parts() <= self.num_parts()
            && (1..=other.num_parts()).all(|i| other.part(i) <= self.part(i))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                    what: "partition",
                    token: tok.trim().to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew partition `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if !lambda.contains(&mu) {
            return Err(Error::NotContained {
                lambda: lambda.0,
                mu: mu.0,
            });
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape {
            lambda,
            mu: Partition::empty(),
        }
    }

    pub fn from_parts(lambda: &[usize], mu: &[usize]) -> Result<Self> {
        SkewShape::new(
            Partition::new(lambda.to_vec())?,
            Partition::new(mu.to_vec())?,
        )
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn size(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    /// `λ_1`, the number of columns of the diagram.
    pub fn num_cols(&self) -> usize {
        self.lambda.part(1)
    }

    /// `λ*_1`, the number of rows of the diagram.
    pub fn num_rows(&self) -> usize {
        self.lambda.num_parts()
    }

    /// Columns `μ_i + 1 ..= λ_i` of row `i`.
    pub fn row_span(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        self.mu.part(i) + 1..=self.lambda.part(i)
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.lambda.part(i) - self.mu.part(i)
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.mu.part(i) < j && j <= self.lambda.part(i)
    }

    /// The boxes in row-major order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        (1..=self.num_rows())
            .flat_map(|i| self.row_span(i).map(move |j| (i, j)))
            .collect()
    }

    /// All rows and all columns of the diagram are nonempty.
    pub fn is_basic(&self) -> bool {
        let lc = self.lambda.conjugate();
        let mc = self.mu.conjugate();
        (1..=self.num_rows()).all(|i| self.lambda.part(i) > self.mu.part(i))
            && (1..=self.num_cols()).all(|j| lc.part(j) > mc.part(j))
    }

    pub fn has_empty_rows(&self) -> bool {
        (1..=self.num_rows()).any(|i| self.row_len(i) == 0)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            lambda: self.lambda.conjugate(),
            mu: self.mu.conjugate(),
        }
    }

    /// Deletes empty rows, shifting the rows below up.
    pub fn without_empty_rows(&self) -> SkewShape {
        let keep: Vec<usize> = (1..=self.num_rows())
            .filter(|&i| self.row_len(i) > 0)
            .collect();
        let lambda = keep.iter().map(|&i| self.lambda.part(i)).collect();
        let mu = keep.iter().map(|&i| self.mu.part(i)).collect();
        SkewShape {
            lambda: Partition::new(lambda).expect("rows of a skew shape stay ordered"),
            mu: Partition::new(mu).expect("rows of a skew shape stay ordered"),
        }
    }

    /// The basic shape obtained by deleting empty rows and then empty columns.
    pub fn basic_normalized(&self) -> SkewShape {
        self.without_empty_rows()
            .conjugate()
            .without_empty_rows()
            .conjugate()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)?;
        if !self.mu.is_empty() {
            write!(f, "/{}", self.mu)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.lambda, self.mu)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `"3,2,2/1,1"`; the `/μ` part may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let mut halves = s.splitn(2, '/');
        let lambda: Partition = halves.next().unwrap_or("").parse()?;
        let mu: Partition = match halves.next() {
            Some(m) => m.parse()?,
            None => Partition::empty(),
        };
        if lambda.is_empty() {
            return Err(Error::Parse {
                what: "shape",
                token: s.to_string(),
            });
        }
        SkewShape::new(lambda, mu)
    }
}

/// All partitions fitting in a `rows x cols` box, in lexicographic order.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for p in 1..=max_part {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every skew shape with `n` boxes whose outer partition fits in a
/// `rows x cols` box.
pub fn skew_shapes_in_box(n: usize, rows: usize, cols: usize) -> Vec<SkewShape> {
    let parts = partitions_in_box(rows, cols);
    let mut out = Vec::new();
    for lambda in &parts {
        if lambda.size() < n {
            continue;
        }
        for mu in &parts {
            if mu.size() + n == lambda.size() && lambda.contains(mu) {
                out.push(SkewShape {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                });
            }
        }
    }
    out
}

/// The basic skew shapes with `n` boxes. A basic diagram has at most `n`
/// rows and `n` columns.
pub fn basic_skew_shapes(n: usize) -> Vec<SkewShape> {
    skew_shapes_in_box(n, n, n)
        .into_iter()
        .filter(|s| s.is_basic())
        .collect()
}
