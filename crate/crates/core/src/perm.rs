//! Permutations of `{1, ..., n}` in one-line notation, generator sets, and
//! weak-order ideals.
//!
//! Composition follows the left-operator convention: `(x * y)(i) = x(y(i))`.
//! Multiplying by `s_i` on the left swaps the *values* `i` and `i + 1`;
//! multiplying on the right swaps the *positions* `i` and `i + 1`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default upper bound on the rank for whole-group computations (9! = 362880).
pub const DEFAULT_RANK_CAP: usize = 9;

/// Largest rank a [`GenSet`] bitmask can hold.
pub const MAX_RANK: usize = 64;

/// Upper bound on `n` for operations that materialize all of `Sym(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankCap(pub usize);

impl Default for RankCap {
    fn default() -> Self {
        RankCap(DEFAULT_RANK_CAP)
    }
}

impl RankCap {
    pub fn check(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        if n > self.0 {
            return Err(Error::RankCapExceeded { n, cap: self.0 });
        }
        Ok(())
    }
}

/// An element of `Sym(n)`; `images[i - 1]` is `w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        if n > MAX_RANK {
            return Err(Error::NotAPermutation { n, images });
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation { n, images });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_RANK {
            return Err(Error::InvalidRank(n));
        }
        Ok(Permutation {
            images: (1..=n).collect(),
        })
    }

    /// The simple transposition `s_i = (i, i+1)` in `Sym(n)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut w = Permutation::identity(n)?;
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// Product `s_{i_1} s_{i_2} ... s_{i_k}` of simple transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Permutation::identity(n)?;
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::GeneratorOutOfRange { index: i, n });
            }
            w = w.right_mul_simple(i);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.rank()];
        for (pos, &v) in self.images.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        check_ranks(self.rank(), other.rank())?;
        Ok(self.compose(other))
    }

    fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        }
    }

    /// `s_i * self`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    /// `self * s_i`: swaps the entries at positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    fn left_descent_mask(&self) -> u64 {
        let inv = self.inverse();
        let mut mask = 0u64;
        for i in 1..self.rank() {
            if inv.images[i] < inv.images[i - 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    fn right_descent_mask(&self) -> u64 {
        let mut mask = 0u64;
        for i in 1..self.rank() {
            if self.images[i - 1] > self.images[i] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// `{ i : l(s_i w) < l(w) }`: `i + 1` appears before `i`.
    pub fn left_descents(&self) -> GenSet {
        GenSet {
            n: self.rank(),
            mask: self.left_descent_mask(),
        }
    }

    /// `{ i : w(i) > w(i + 1) }`.
    pub fn right_descents(&self) -> GenSet {
        GenSet {
            n: self.rank(),
            mask: self.right_descent_mask(),
        }
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        let (mut pos_i, mut pos_next) = (0, 0);
        for (p, &v) in self.images.iter().enumerate() {
            if v == i {
                pos_i = p;
            } else if v == i + 1 {
                pos_next = p;
            }
        }
        pos_next < pos_i
    }

    /// Index of `self` in the lexicographic ordering of `Sym(n)`, via the
    /// Lehmer code.
    pub fn lex_rank(&self) -> usize {
        let n = self.rank();
        let mut rank = 0;
        let mut used = 0u64;
        for (pos, &v) in self.images.iter().enumerate() {
            let smaller_unused = (v - 1) - (used & ((1u64 << (v - 1)) - 1)).count_ones() as usize;
            rank = rank * (n - pos) + smaller_unused;
            used |= 1 << (v - 1);
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Result<Permutation> {
        if n == 0 || n > 20 {
            return Err(Error::InvalidRank(n));
        }
        let total = factorial(n);
        if rank >= total {
            return Err(Error::Parse {
                what: "lexicographic rank",
                token: rank.to_string(),
            });
        }
        let mut digits = vec![0; n];
        for (k, d) in digits.iter_mut().enumerate().rev() {
            let base = n - k;
            *d = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Ok(Permutation { images })
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn check_ranks(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on rank mismatch; use [`Permutation::multiply`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch in product");
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.images.iter())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                    what: "permutation",
                    token: tok.trim().to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (k, item) in items.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// `y <=_L x` iff `l(x y^{-1}) = l(x) - l(y)`.
pub fn left_weak_leq(y: &Permutation, x: &Permutation) -> Result<bool> {
    check_ranks(y.rank(), x.rank())?;
    let (ly, lx) = (y.length(), x.length());
    Ok(ly <= lx && (x * &y.inverse()).length() == lx - ly)
}

/// Bruhat order by the dot criterion: `y <= x` iff every upper-left rank
/// count `#{a <= i : y(a) >= j}` is dominated by the same count for `x`.
pub fn bruhat_leq(y: &Permutation, x: &Permutation) -> Result<bool> {
    check_ranks(y.rank(), x.rank())?;
    let n = x.rank();
    // counts[j] = #{a <= i : w(a) >= j}, updated row by row
    let mut cy = vec![0usize; n + 2];
    let mut cx = vec![0usize; n + 2];
    for i in 1..=n {
        for j in 1..=y.apply(i) {
            cy[j] += 1;
        }
        for j in 1..=x.apply(i) {
            cx[j] += 1;
        }
        if (1..=n).any(|j| cy[j] > cx[j]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A subset of the simple transpositions `{s_1, ..., s_{n-1}}`, stored as a
/// bitmask with bit `i` standing for `s_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet {
    n: usize,
    mask: u64,
}

impl GenSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for i in members {
            if i == 0 || i >= n || i >= MAX_RANK {
                return Err(Error::GeneratorOutOfRange { index: i, n });
            }
            mask |= 1 << i;
        }
        Ok(GenSet { n, mask })
    }

    pub fn empty(n: usize) -> Self {
        GenSet { n, mask: 0 }
    }

    pub fn full(n: usize) -> Self {
        GenSet {
            n,
            mask: Self::all_bits(n),
        }
    }

    fn all_bits(n: usize) -> u64 {
        if n <= 1 {
            0
        } else {
            ((1u64 << (n - 1)) - 1) << 1
        }
    }

    /// The `k`-th subset in mask order: bit `b` of `k` selects `s_{b+1}`.
    pub fn from_index(n: usize, k: u64) -> Self {
        GenSet {
            n,
            mask: (k << 1) & Self::all_bits(n),
        }
    }

    /// All `2^(n-1)` subsets in mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = GenSet> {
        let count = if n <= 1 { 1u64 } else { 1u64 << (n - 1) };
        (0..count).map(move |k| GenSet::from_index(n, k))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.mask & (1 << i) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_subset(&self, other: &GenSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&i| self.contains(i))
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i >= 1 && i < self.n);
        self.mask |= 1 << i;
    }

    /// The point intervals `[a, b]` permuted by the irreducible components of
    /// `W_J`, one per maximal run of consecutive generators, including the
    /// singletons fixed by `W_J`. Together they partition `1..=n`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut blocks = Vec::new();
        let mut start = 1;
        for p in 1..=self.n {
            if !self.contains(p) {
                blocks.push((start, p));
                start = p + 1;
            }
        }
        blocks
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.iter())
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}

impl GenSet {
    /// Parses `"1,3"`; the empty string is the empty set.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(GenSet::empty(n));
        }
        let members = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::Parse {
                    what: "generator set",
                    token: tok.trim().to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GenSet::new(n, members)
    }
}

/// A set of permutations of a common rank, kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementSet {
    n: usize,
    members: BTreeSet<Permutation>,
}

impl ElementSet {
    pub fn new(n: usize) -> Self {
        ElementSet {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn from_members(n: usize, members: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut set = ElementSet::new(n);
        for w in members {
            set.insert(w)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, w: Permutation) -> Result<bool> {
        check_ranks(self.n, w.rank())?;
        Ok(self.members.insert(w))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.members.contains(w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.members.iter()
    }

    /// `{ x * g : x in self }`.
    pub fn right_translate(&self, g: &Permutation) -> Result<ElementSet> {
        check_ranks(self.n, g.rank())?;
        Ok(ElementSet {
            n: self.n,
            members: self.members.iter().map(|x| x * g).collect(),
        })
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Permutation;
    type IntoIter = std::collections::btree_set::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Every element of `Sym(n)` in lexicographic order.
pub fn group_elements(n: usize, cap: RankCap) -> Result<Vec<Permutation>> {
    cap.check(n)?;
    let mut out = Vec::with_capacity(factorial(n));
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::from_images_unchecked(cur.clone()));
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(out)
}

pub fn enumerate_group(n: usize, cap: RankCap) -> Result<ElementSet> {
    ElementSet::from_members(n, group_elements(n, cap)?)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `I(w) = { v : v <=_L w }`, by repeatedly stripping left descents.
pub fn principal_weak_ideal(w: &Permutation) -> ElementSet {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(u) = queue.pop_front() {
        for i in u.left_descents().iter() {
            let v = u.left_mul_simple(i);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    ElementSet {
        n: w.rank(),
        members: seen,
    }
}

/// Whether `x` is downward closed in the left weak order. The covers of
/// `<=_L` below `w` are `s_i w` for `i` a left descent of `w`.
pub fn is_weak_ideal(x: &ElementSet) -> bool {
    x.iter().all(|w| {
        w.left_descents()
            .iter()
            .all(|i| x.contains(&w.left_mul_simple(i)))
    })
}
