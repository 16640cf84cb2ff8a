//! Step-set and alignment data model.
//!
//! An alignment of `N` sequences with lengths `(l1, ..., lN)` is an `N x k`
//! matrix of non-negative integers whose rows sum to the respective lengths
//! and whose every column belongs to a *step set* `S`, a subset of the
//! non-negative integer vectors excluding the all-zero vector. Step sets may
//! be given explicitly or as intensional families (possibly infinite); the
//! infinite ones are only ever filtered to a finite box on demand.

use std::fmt;

use crate::error::{Error, Result};

/// A single allowable alignment column: a non-negative integer vector that is
/// not all zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepVector(Vec<u32>);

impl StepVector {
    /// Builds a step vector, rejecting the all-zero vector and dimension 0.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if entries.iter().all(|&e| e == 0) {
            return Err(Error::ZeroStep);
        }
        Ok(StepVector(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// Sum of the entries; at least 1 for any valid step.
    pub fn column_sum(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self <= bound`.
    pub fn fits_within(&self, bound: &[u32]) -> bool {
        self.0.iter().zip(bound).all(|(&s, &b)| s <= b)
    }
}

impl fmt::Display for StepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Target sequence lengths `(l1, ..., lN)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LengthTuple(Vec<u32>);

impl LengthTuple {
    pub fn new(lengths: Vec<u32>) -> Self {
        LengthTuple(lengths)
    }

    /// The constant tuple `(l, ..., l)` of the given dimension.
    pub fn diagonal(l: u32, dimension: usize) -> Self {
        LengthTuple(vec![l; dimension])
    }

    pub fn lengths(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&l| l == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&l| l as u64).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &LengthTuple) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }
}

impl fmt::Display for LengthTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", v)?;
    }
    write!(f, ")")
}

/// A set of allowed part sizes in one coordinate of a product step set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseSet {
    /// A finite set of non-negative integers (kept sorted and deduplicated).
    Finite(Vec<u32>),
    /// All non-negative integers `{0, 1, 2, ...}`.
    Nat,
    /// All positive integers `{1, 2, 3, ...}`.
    NatPos,
}

impl BaseSet {
    pub fn finite(mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        BaseSet::Finite(members)
    }

    pub fn contains(&self, v: u32) -> bool {
        match self {
            BaseSet::Finite(m) => m.binary_search(&v).is_ok(),
            BaseSet::Nat => true,
            BaseSet::NatPos => v >= 1,
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, BaseSet::Finite(_))
    }

    /// Members not exceeding `max`, ascending.
    pub fn members_up_to(&self, max: u32) -> Vec<u32> {
        match self {
            BaseSet::Finite(m) => m.iter().copied().filter(|&v| v <= max).collect(),
            BaseSet::Nat => (0..=max).collect(),
            BaseSet::NatPos => (1..=max).collect(),
        }
    }
}

impl fmt::Display for BaseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSet::Finite(m) => {
                write!(f, "{{")?;
                for (i, v) in m.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", v)?;
                }
                write!(f, "}}")
            }
            BaseSet::Nat => write!(f, "nat"),
            BaseSet::NatPos => write!(f, "natpos"),
        }
    }
}

/// An unvalidated step-set description, as produced by the DSL parser or
/// constructed programmatically. Call [`StepSet::validate`] before use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepSet {
    /// An explicit list of steps (possibly empty).
    Explicit { dimension: usize, steps: Vec<StepVector> },
    /// `{0,1}^N` minus the zero vector: the classical alignment columns.
    UnitCube { dimension: usize },
    /// `{low..=high}^N` with `1 <= low <= high`.
    Box { low: u32, high: u32, dimension: usize },
    /// All non-zero vectors of non-negative integers.
    AllPositiveWeak { dimension: usize },
    /// `{(x, y) | x >= 1, y >= 0}`; two sequences only.
    HalfOpen,
    /// A cartesian product of per-coordinate base sets.
    Product { bases: Vec<BaseSet> },
}

impl StepSet {
    /// Explicit set from a non-empty list of steps; the dimension is taken
    /// from the first step.
    pub fn explicit(steps: Vec<StepVector>) -> Result<Self> {
        let dimension = match steps.first() {
            Some(s) => s.dimension(),
            None => return Err(Error::Parse("empty explicit step set needs a dimension".into())),
        };
        Ok(StepSet::Explicit { dimension, steps })
    }

    pub fn explicit_in_dimension(dimension: usize, steps: Vec<StepVector>) -> Self {
        StepSet::Explicit { dimension, steps }
    }

    pub fn dimension(&self) -> usize {
        match self {
            StepSet::Explicit { dimension, .. }
            | StepSet::UnitCube { dimension }
            | StepSet::Box { dimension, .. }
            | StepSet::AllPositiveWeak { dimension } => *dimension,
            StepSet::HalfOpen => 2,
            StepSet::Product { bases } => bases.len(),
        }
    }

    /// Checks the invariants of the set and brings it to canonical form:
    /// finite sets (explicit lists, unit cubes, boxes, finite products)
    /// become sorted deduplicated explicit lists; infinite families stay
    /// intensional and are filtered to a box on demand.
    pub fn validate(self) -> Result<ValidatedStepSet> {
        match self {
            StepSet::Explicit { dimension, mut steps } => {
                if dimension == 0 {
                    return Err(Error::DimensionMismatch { expected: 1, found: 0 });
                }
                for s in &steps {
                    if s.dimension() != dimension {
                        return Err(Error::DimensionMismatch {
                            expected: dimension,
                            found: s.dimension(),
                        });
                    }
                }
                steps.sort_unstable();
                steps.dedup();
                Ok(ValidatedStepSet { dimension, body: SetBody::Explicit(steps) })
            }
            StepSet::UnitCube { dimension } => {
                if dimension == 0 {
                    return Err(Error::DimensionMismatch { expected: 1, found: 0 });
                }
                let mut steps = Vec::with_capacity((1usize << dimension) - 1);
                for mask in 1u64..(1u64 << dimension) {
                    let entries =
                        (0..dimension).map(|i| ((mask >> i) & 1) as u32).collect::<Vec<_>>();
                    steps.push(StepVector::new(entries).expect("nonzero mask"));
                }
                steps.sort_unstable();
                Ok(ValidatedStepSet { dimension, body: SetBody::Explicit(steps) })
            }
            StepSet::Box { low, high, dimension } => {
                if low == 0 {
                    return Err(Error::ZeroStep);
                }
                if low > high {
                    return Err(Error::DomainError(format!("empty box range {}..{}", low, high)));
                }
                let bases = vec![BaseSet::finite((low..=high).collect()); dimension];
                StepSet::Product { bases }.validate()
            }
            StepSet::AllPositiveWeak { dimension } => {
                if dimension == 0 {
                    return Err(Error::DimensionMismatch { expected: 1, found: 0 });
                }
                Ok(ValidatedStepSet { dimension, body: SetBody::AllPositiveWeak })
            }
            StepSet::HalfOpen => StepSet::Product { bases: vec![BaseSet::NatPos, BaseSet::Nat] }.validate(),
            StepSet::Product { bases } => {
                let dimension = bases.len();
                if dimension == 0 {
                    return Err(Error::DimensionMismatch { expected: 1, found: 0 });
                }
                if bases.iter().all(|b| b.contains_zero()) {
                    return Err(Error::ZeroStep);
                }
                if bases.iter().all(|b| b.is_finite()) {
                    let mut steps = Vec::new();
                    let mut current = vec![0u32; dimension];
                    cartesian(&bases, 0, &mut current, &mut steps)?;
                    steps.sort_unstable();
                    steps.dedup();
                    Ok(ValidatedStepSet { dimension, body: SetBody::Explicit(steps) })
                } else {
                    let bases = bases
                        .into_iter()
                        .map(|b| match b {
                            BaseSet::Finite(m) => BaseSet::Finite(m),
                            other => other,
                        })
                        .collect();
                    Ok(ValidatedStepSet { dimension, body: SetBody::BaseProduct(bases) })
                }
            }
        }
    }
}

fn cartesian(
    bases: &[BaseSet],
    coord: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<StepVector>,
) -> Result<()> {
    if coord == bases.len() {
        // The zero vector cannot appear here: validation already rejected
        // products where every base contains 0.
        out.push(StepVector::new(current.clone())?);
        return Ok(());
    }
    let members = match &bases[coord] {
        BaseSet::Finite(m) => m.clone(),
        _ => unreachable!("cartesian is only called on finite products"),
    };
    for v in members {
        current[coord] = v;
        cartesian(bases, coord + 1, current, out)?;
    }
    Ok(())
}

/// Canonical form of a validated step set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum SetBody {
    /// Sorted, deduplicated, zero-free list of steps.
    Explicit(Vec<StepVector>),
    /// All non-zero vectors of non-negative integers.
    AllPositiveWeak,
    /// Product of base sets, at least one of them infinite, not all
    /// containing zero.
    BaseProduct(Vec<BaseSet>),
}

/// A step set that passed validation. Immutable; cheap to clone and safe to
/// share across threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValidatedStepSet {
    dimension: usize,
    body: SetBody,
}

impl ValidatedStepSet {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of steps if the set is finite.
    pub fn cardinality(&self) -> Option<usize> {
        match &self.body {
            SetBody::Explicit(steps) => Some(steps.len()),
            _ => None,
        }
    }

    /// The explicit steps of a finite set, sorted lexicographically.
    pub fn explicit_steps(&self) -> Option<&[StepVector]> {
        match &self.body {
            SetBody::Explicit(steps) => Some(steps),
            _ => None,
        }
    }

    /// Membership test without materialization.
    pub fn contains(&self, entries: &[u32]) -> bool {
        if entries.len() != self.dimension || entries.iter().all(|&e| e == 0) {
            return false;
        }
        match &self.body {
            SetBody::Explicit(steps) => {
                steps.binary_search_by(|s| s.entries().cmp(entries)).is_ok()
            }
            SetBody::AllPositiveWeak => true,
            SetBody::BaseProduct(bases) => {
                bases.iter().zip(entries).all(|(b, &e)| b.contains(e))
            }
        }
    }

    /// All members of the set fitting inside the box, sorted
    /// lexicographically. Infinite families contribute only finitely many
    /// steps inside any box.
    pub fn materialize(&self, bound: &LengthTuple) -> Result<Vec<StepVector>> {
        if bound.dimension() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: bound.dimension(),
            });
        }
        let b = bound.lengths();
        let steps = match &self.body {
            SetBody::Explicit(steps) => {
                steps.iter().filter(|s| s.fits_within(b)).cloned().collect()
            }
            SetBody::AllPositiveWeak => {
                let mut out = Vec::new();
                let mut current = vec![0u32; self.dimension];
                enumerate_box(b, 0, &mut current, &mut out);
                out
            }
            SetBody::BaseProduct(bases) => {
                let members: Vec<Vec<u32>> =
                    bases.iter().zip(b).map(|(base, &m)| base.members_up_to(m)).collect();
                let mut out = Vec::new();
                let mut current = vec![0u32; self.dimension];
                product_of(&members, 0, &mut current, &mut out);
                out
            }
        };
        Ok(steps)
    }

    /// Applies a coordinate permutation: coordinate `i` of every step moves
    /// to position `perm[i]`. Families closed under permutation are returned
    /// unchanged. Panics if `perm` is not a permutation of `0..N`.
    pub fn permute(&self, perm: &[usize]) -> ValidatedStepSet {
        assert_eq!(perm.len(), self.dimension, "permutation length must match dimension");
        let mut seen = vec![false; self.dimension];
        for &p in perm {
            assert!(p < self.dimension && !seen[p], "not a permutation of 0..N");
            seen[p] = true;
        }
        let body = match &self.body {
            SetBody::Explicit(steps) => {
                let mut permuted: Vec<StepVector> = steps
                    .iter()
                    .map(|s| {
                        let mut e = vec![0u32; self.dimension];
                        for (i, &v) in s.entries().iter().enumerate() {
                            e[perm[i]] = v;
                        }
                        StepVector::new(e).expect("permutation preserves nonzero")
                    })
                    .collect();
                permuted.sort_unstable();
                SetBody::Explicit(permuted)
            }
            SetBody::AllPositiveWeak => SetBody::AllPositiveWeak,
            SetBody::BaseProduct(bases) => {
                let mut permuted = vec![BaseSet::Nat; self.dimension];
                for (i, b) in bases.iter().enumerate() {
                    permuted[perm[i]] = b.clone();
                }
                SetBody::BaseProduct(permuted)
            }
        };
        ValidatedStepSet { dimension: self.dimension, body }
    }
}

fn enumerate_box(bound: &[u32], coord: usize, current: &mut Vec<u32>, out: &mut Vec<StepVector>) {
    if coord == bound.len() {
        if current.iter().any(|&e| e > 0) {
            out.push(StepVector(current.clone()));
        }
        return;
    }
    for v in 0..=bound[coord] {
        current[coord] = v;
        enumerate_box(bound, coord + 1, current, out);
    }
}

fn product_of(members: &[Vec<u32>], coord: usize, current: &mut Vec<u32>, out: &mut Vec<StepVector>) {
    if coord == members.len() {
        // Not all bases contain zero, so the zero vector never shows up.
        out.push(StepVector(current.clone()));
        return;
    }
    for &v in &members[coord] {
        current[coord] = v;
        product_of(members, coord + 1, current, out);
    }
}

impl fmt::Display for ValidatedStepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.body {
            SetBody::Explicit(steps) => {
                write!(f, "{{")?;
                for (i, s) in steps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", s)?;
                }
                write!(f, "}}")
            }
            SetBody::AllPositiveWeak => write!(f, "natpos({})", self.dimension),
            SetBody::BaseProduct(bases) => {
                write!(f, "prod(")?;
                for (i, b) in bases.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", b)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An `N x k` alignment matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlignmentMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl AlignmentMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(AlignmentMatrix { rows, cols, data })
    }

    /// Builds the matrix whose columns are the given steps, in order.
    pub fn from_columns(rows: usize, columns: &[StepVector]) -> Self {
        let cols = columns.len();
        let mut data = vec![0u32; rows * cols];
        for (c, col) in columns.iter().enumerate() {
            for (r, &v) in col.entries().iter().enumerate() {
                data[r * cols + c] = v;
            }
        }
        AlignmentMatrix { rows, cols, data }
    }

    /// The empty alignment of the given number of rows (k = 0).
    pub fn empty(rows: usize) -> Self {
        AlignmentMatrix { rows, cols: 0, data: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.entry(r, col)).collect()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.rows).map(|r| self.row(r).iter().map(|&v| v as u64).sum()).collect()
    }
}

impl fmt::Display for AlignmentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Checks both alignment conditions: every row sums to its target length and
/// every column is a member of the step set. The empty matrix (k = 0) aligns
/// exactly the all-zero length tuple.
pub fn is_alignment(
    matrix: &AlignmentMatrix,
    steps: &ValidatedStepSet,
    lengths: &LengthTuple,
) -> Result<bool> {
    if matrix.rows() != steps.dimension() {
        return Err(Error::DimensionMismatch { expected: steps.dimension(), found: matrix.rows() });
    }
    if lengths.dimension() != steps.dimension() {
        return Err(Error::DimensionMismatch {
            expected: steps.dimension(),
            found: lengths.dimension(),
        });
    }
    let sums = matrix.row_sums();
    if sums.iter().zip(lengths.lengths()).any(|(&s, &l)| s != l as u64) {
        return Ok(false);
    }
    for c in 0..matrix.cols() {
        if !steps.contains(&matrix.column(c)) {
            return Ok(false);
        }
    }
    Ok(true)
}
