//! Classification of the pairs `(w, J)` whose weak-order interval
//! `[w_J, w w_J]` is a nonempty union of left cells, and the exhaustive
//! checks that maximal squashed tableaux are exactly the cell ideal
//! generating ones.

use rayon::prelude::*;
use serde::Serialize;

use crate::cells::{
    cross_validated_cells, is_union_of_left_cells, local_union_check, rs_cells, rs_insert,
    CellPartition,
};
use crate::error::{Error, Result};
use crate::parabolic::{in_dj, longest_element};
use crate::perm::{
    factorial, group_elements, is_weak_ideal, left_weak_leq, principal_weak_ideal, ElementSet,
    GenSet, Permutation, RankCap,
};
use crate::tableaux::{
    basic_skew_shapes, canonical_tableau, enumerate_std, perm_of, shape_genset, tau_col, tau_top,
    Partition, SkewShape, SkewTableau,
};

/// How the union-of-cells test is decided.
#[derive(Debug, Clone, Copy)]
pub enum CellTest<'a> {
    /// Against a precomputed partition of `Sym(n)`.
    Global(&'a CellPartition),
    /// Coset by coset through rank-2 parabolic subgroups.
    Local,
}

impl CellTest<'_> {
    pub fn is_union(&self, x: &ElementSet) -> Result<bool> {
        match self {
            CellTest::Global(cp) => is_union_of_left_cells(x, cp),
            CellTest::Local => Ok(local_union_check(x)),
        }
    }
}

/// Which cell construction backs a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// `≈` closure, cross-checked against RS before use.
    Approx,
    /// Robinson–Schensted fibers.
    Rs,
    /// No global partition; rank-2 local test.
    Local,
}

/// Owns whatever partition a [`Method`] needs.
pub struct CellOracle {
    partition: Option<CellPartition>,
}

impl CellOracle {
    pub fn build(n: usize, method: Method, cap: RankCap) -> Result<Self> {
        let partition = match method {
            Method::Approx => Some(cross_validated_cells(n, cap)?),
            Method::Rs => Some(rs_cells(n, cap)?),
            Method::Local => {
                cap.check(n)?;
                None
            }
        };
        Ok(CellOracle { partition })
    }

    pub fn test(&self) -> CellTest<'_> {
        match &self.partition {
            Some(cp) => CellTest::Global(cp),
            None => CellTest::Local,
        }
    }
}

/// `t` is the maximal tableau `m + τ^{λ/μ}` of its shape.
pub fn is_maximal_tableau(t: &SkewTableau) -> Result<bool> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(*t == tau_top(t.shape(), t.offset()))
}

/// `I(perm(t)) w_J` is a union of left cells, where `J = J_{λ/μ}`.
pub fn is_cell_ideal_generating(t: &SkewTableau, test: CellTest<'_>) -> Result<bool> {
    if t.offset() != 0 {
        return Err(Error::NonzeroOffset(t.offset()));
    }
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let w = perm_of(t)?;
    let j = shape_genset(t.shape());
    ideal_translate_is_union(&w, &j, test)
}

fn ideal_translate_is_union(w: &Permutation, j: &GenSet, test: CellTest<'_>) -> Result<bool> {
    let wj = longest_element(j, w.rank())?;
    test.is_union(&principal_weak_ideal(w).right_translate(&wj)?)
}

/// `{ x : w_J <=_L x <=_L w w_J }`.
pub fn weak_interval(w: &Permutation, j: &GenSet) -> Result<ElementSet> {
    let wj = longest_element(j, w.rank())?;
    let top = w.multiply(&wj)?;
    if !left_weak_leq(&wj, &top)? {
        return Ok(ElementSet::new(w.rank()));
    }
    let mut out = ElementSet::new(w.rank());
    for x in principal_weak_ideal(&top).iter() {
        if left_weak_leq(&wj, x)? {
            out.insert(x.clone())?;
        }
    }
    Ok(out)
}

/// One `(J, w)` pair of a [`VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    #[serde(serialize_with = "ser_display")]
    pub j: GenSet,
    #[serde(serialize_with = "ser_display")]
    pub w: Permutation,
    pub is_maximal: bool,
    pub is_cig: bool,
    /// Shape of `τ(J, w)` when the pair qualifies.
    #[serde(serialize_with = "ser_opt_display")]
    pub shape: Option<SkewShape>,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_opt_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub records: Vec<PairRecord>,
    pub mismatches: Vec<PairRecord>,
    pub qualifying_count: usize,
    pub basic_shape_count: usize,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.qualifying_count == self.basic_shape_count
    }
}

/// For every `J` and every `w` in `D_J`, compares "`τ(J, w)` is maximal"
/// with "`τ(J, w)` is cell ideal generating".
pub fn verify_main_theorem(n: usize, method: Method, cap: RankCap) -> Result<VerificationReport> {
    let oracle = CellOracle::build(n, method, cap)?;
    verify_main_theorem_with(n, oracle.test(), cap)
}

pub fn verify_main_theorem_with(
    n: usize,
    test: CellTest<'_>,
    cap: RankCap,
) -> Result<VerificationReport> {
    let elements = group_elements(n, cap)?;
    let subsets: Vec<GenSet> = GenSet::all_subsets(n).collect();
    let per_subset: Vec<Vec<PairRecord>> = subsets
        .par_iter()
        .map(|j| {
            elements
                .iter()
                .filter(|w| in_dj(w, j))
                .map(|w| {
                    let t = canonical_tableau(j, w)?;
                    let is_maximal = is_maximal_tableau(&t)?;
                    let is_cig = ideal_translate_is_union(w, j, test)?;
                    Ok(PairRecord {
                        j: *j,
                        w: w.clone(),
                        is_maximal,
                        is_cig,
                        shape: is_cig.then(|| t.shape().clone()),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let records: Vec<PairRecord> = per_subset.into_iter().flatten().collect();
    let mismatches = records
        .iter()
        .filter(|r| r.is_maximal != r.is_cig)
        .cloned()
        .collect();
    let qualifying_count = records.iter().filter(|r| r.is_cig).count();
    Ok(VerificationReport {
        n,
        records,
        mismatches,
        qualifying_count,
        basic_shape_count: basic_skew_shapes(n).len(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QualifyingPair {
    #[serde(serialize_with = "ser_display")]
    pub j: GenSet,
    #[serde(serialize_with = "ser_display")]
    pub w: Permutation,
    pub interval_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalReport {
    pub n: usize,
    pub pairs_checked: usize,
    /// Pairs whose interval is a nonempty union of left cells.
    pub qualifying: Vec<QualifyingPair>,
    /// Number of basic skew shapes with `n` boxes.
    pub basic_shape_count: usize,
    /// Qualifying pairs that no basic shape accounts for.
    pub unexpected: Vec<QualifyingPair>,
    /// Shapes whose pair `(perm(τ^{λ/μ}), J_{λ/μ})` does not qualify.
    #[serde(serialize_with = "ser_display_vec")]
    pub missing: Vec<SkewShape>,
    /// Shapes where `x -> x w_J τ_{λ/μ}` is not a bijection onto `STD(λ/μ)`.
    #[serde(serialize_with = "ser_display_vec")]
    pub bijection_failures: Vec<SkewShape>,
}

fn ser_display_vec<T: std::fmt::Display, S: serde::Serializer>(
    v: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl IntervalReport {
    pub fn holds(&self) -> bool {
        self.unexpected.is_empty()
            && self.missing.is_empty()
            && self.bijection_failures.is_empty()
            && self.qualifying.len() == self.basic_shape_count
    }
}

/// The pair `(perm(τ^{λ/μ}), J_{λ/μ})` attached to a shape.
pub fn shape_pair(shape: &SkewShape) -> Result<(Permutation, GenSet)> {
    Ok((perm_of(&tau_top(shape, 0))?, shape_genset(shape)))
}

/// Checks that `x -> x w_J τ_{λ/μ}` maps the interval of `shape` bijectively
/// onto the independently enumerated `STD(λ/μ)`.
pub fn interval_matches_std(shape: &SkewShape) -> Result<bool> {
    let (w, j) = shape_pair(shape)?;
    let wj = longest_element(&j, w.rank())?;
    let interval = weak_interval(&w, &j)?;
    let tc = tau_col(shape, 0);
    let mut image: Vec<SkewTableau> = interval
        .iter()
        .map(|x| tc.act(&(x * &wj)))
        .collect::<Result<_>>()?;
    image.sort();
    image.dedup();
    let std = enumerate_std(shape, 0)?;
    Ok(image.len() == interval.len() && image == std)
}

/// Scans every `(w, J)` in `Sym(n) x 2^S` and compares the qualifying pairs
/// with those coming from basic skew shapes.
pub fn interval_classification_check(
    n: usize,
    test: CellTest<'_>,
    cap: RankCap,
) -> Result<IntervalReport> {
    let elements = group_elements(n, cap)?;
    let subsets: Vec<GenSet> = GenSet::all_subsets(n).collect();
    let qualifying: Vec<QualifyingPair> = subsets
        .par_iter()
        .map(|j| {
            let mut found = Vec::new();
            for w in &elements {
                let interval = weak_interval(w, j)?;
                if !interval.is_empty() && test.is_union(&interval)? {
                    found.push(QualifyingPair {
                        j: *j,
                        w: w.clone(),
                        interval_size: interval.len(),
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<Vec<_>>>>()?
        .into_iter()
        .flatten()
        .collect();

    let shapes = basic_skew_shapes(n);
    let mut expected = Vec::with_capacity(shapes.len());
    let mut bijection_failures = Vec::new();
    for shape in &shapes {
        expected.push(shape_pair(shape)?);
        if !interval_matches_std(shape)? {
            bijection_failures.push(shape.clone());
        }
    }
    let unexpected = qualifying
        .iter()
        .filter(|q| !expected.iter().any(|(w, j)| *w == q.w && *j == q.j))
        .cloned()
        .collect();
    let missing = shapes
        .iter()
        .zip(&expected)
        .filter(|(_, (w, j))| !qualifying.iter().any(|q| q.w == *w && q.j == *j))
        .map(|(s, _)| s.clone())
        .collect();
    Ok(IntervalReport {
        n,
        pairs_checked: elements.len() * subsets.len(),
        qualifying,
        basic_shape_count: shapes.len(),
        unexpected,
        missing,
        bijection_failures,
    })
}

/// The two families of squashed standard tableaux that are not cell ideal
/// generating: `t` on `(n-1, 2)/(1)` and `u` on `(n-1, n-2)/(n-3)`.
pub fn exceptional_tableaux(n: usize) -> Result<(SkewTableau, SkewTableau)> {
    if n < 3 {
        return Err(Error::InvalidRank(n));
    }
    let t_shape = SkewShape::from_parts(&[n - 1, 2], &[1])?;
    let t_rows = vec![(2..n).collect(), vec![1, n]];
    let t = SkewTableau::new(t_shape, 0, t_rows)?;
    let u_shape = SkewShape::from_parts(&[n - 1, n - 2], &[n - 3])?;
    let u_rows = vec![vec![1, n], (2..n).collect()];
    let u = SkewTableau::new(u_shape, 0, u_rows)?;
    Ok((t, u))
}

/// The Q-symbols (rows) of the left cells of `Sym(6)` whose union is claimed
/// to be a weak-order ideal that is not a W-graph ideal. The source list
/// shows twelve tableaux; `1245/36` appears twice.
pub const A5_LISTED_TABLEAUX: [&[&[usize]]; 12] = [
    &[&[1, 2, 3, 6], &[4, 5]],
    &[&[1, 2, 5, 6], &[3, 4]],
    &[&[1, 2, 4, 5], &[3, 6]],
    &[&[1, 2, 5], &[3, 4, 6]],
    &[&[1, 2, 4, 5], &[3, 6]],
    &[&[1, 2, 3, 5, 6], &[4]],
    &[&[1, 2, 4, 5, 6], &[3]],
    &[&[1, 2, 3, 5], &[4, 6]],
    &[&[1, 2, 3, 4, 5, 6]],
    &[&[1, 2, 5], &[3, 6], &[4]],
    &[&[1, 2, 5, 6], &[3], &[4]],
    &[&[1, 2, 3, 4, 5], &[6]],
];

fn straight_tableau(rows: &[&[usize]]) -> Result<SkewTableau> {
    let shape = SkewShape::straight(Partition::new(rows.iter().map(|r| r.len()).collect())?);
    SkewTableau::new(shape, 0, rows.iter().map(|r| r.to_vec()).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct A5Report {
    pub listed: usize,
    pub distinct: Vec<SkewTableau>,
    pub union_size: usize,
    pub is_weak_ideal: bool,
    pub is_union_of_left_cells: bool,
    /// The W-graph half of the claim needs the W-graph construction, which
    /// this tool does not implement.
    pub w_graph_ideal: &'static str,
    /// Filled only when the listed union is not an ideal: tableaux whose
    /// fiber, added to the union, yields an ideal.
    pub one_tableau_extensions: Vec<SkewTableau>,
}

impl A5Report {
    pub fn holds(&self) -> bool {
        self.is_weak_ideal && self.is_union_of_left_cells
    }
}

/// Builds the union of the listed Q-fibers in `Sym(6)` and checks that it is
/// a weak-order ideal.
pub fn a5_ideal_check() -> Result<A5Report> {
    let n = 6;
    let mut distinct: Vec<SkewTableau> = A5_LISTED_TABLEAUX
        .iter()
        .map(|rows| straight_tableau(rows))
        .collect::<Result<_>>()?;
    distinct.sort();
    distinct.dedup();

    let elements = group_elements(n, RankCap(n))?;
    let q_of: Vec<SkewTableau> = elements.iter().map(|w| rs_insert(w).q).collect();
    let union_of = |qs: &[SkewTableau]| -> Result<ElementSet> {
        ElementSet::from_members(
            n,
            elements
                .iter()
                .zip(&q_of)
                .filter(|(_, q)| qs.contains(q))
                .map(|(w, _)| w.clone()),
        )
    };
    let union = union_of(&distinct)?;
    let cp = rs_cells(n, RankCap(n))?;
    let is_ideal = is_weak_ideal(&union);

    let mut one_tableau_extensions = Vec::new();
    if !is_ideal {
        let mut all_q: Vec<SkewTableau> = q_of.clone();
        all_q.sort();
        all_q.dedup();
        for extra in all_q.into_iter().filter(|q| !distinct.contains(q)) {
            let mut qs = distinct.clone();
            qs.push(extra.clone());
            if is_weak_ideal(&union_of(&qs)?) {
                one_tableau_extensions.push(extra);
            }
        }
    }
    debug_assert_eq!(elements.len(), factorial(n));
    Ok(A5Report {
        listed: A5_LISTED_TABLEAUX.len(),
        union_size: union.len(),
        is_weak_ideal: is_ideal,
        is_union_of_left_cells: is_union_of_left_cells(&union, &cp)?,
        w_graph_ideal: "not checked",
        distinct,
        one_tableau_extensions,
    })
}
