//! Exact integer H-polytopes and finite lattice point sets.
//!
//! Lattice points are enumerated by depth-first assignment in coordinate
//! order. After a prefix is fixed, the feasible interval of the next
//! coordinate is recomputed from every row, bounding the free coordinates by
//! `[0, box_bound]`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer vector in the root-indexed coordinate space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dot(&self, d: &[i64]) -> Result<i64> {
        checked_dot(d, &self.0)
    }

    pub fn checked_add(&self, other: &LatticePoint) -> Result<LatticePoint> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("adding points")))
            .collect::<Result<Vec<_>>>()
            .map(LatticePoint)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn checked_dot(a: &[i64], x: &[i64]) -> Result<i64> {
    if a.len() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: x.len(),
        });
    }
    a.iter().zip(x).try_fold(0i64, |acc, (c, v)| {
        c.checked_mul(*v)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("evaluating an inequality"))
    })
}

/// One inequality `a . x <= b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Row {
    pub a: Vec<i64>,
    pub b: i64,
}

/// `{ x : a_r . x <= b_r for all rows r }`, intersected with `x >= 0` when `nonneg` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytope {
    pub dim: usize,
    pub nonneg: bool,
    pub rows: Vec<Row>,
}

/// A returned point touches the enumeration box on a coordinate that the
/// inequalities do not cap below the box on their own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundWarning {
    pub coordinate: usize,
    pub point: LatticePoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub points: PointSet,
    pub warnings: Vec<BoundWarning>,
}

impl HPolytope {
    pub fn new(dim: usize, nonneg: bool) -> Self {
        HPolytope {
            dim,
            nonneg,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, a: Vec<i64>, b: i64) -> Result<()> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: a.len(),
            });
        }
        self.rows.push(Row { a, b });
        Ok(())
    }

    /// Sorts rows and drops exact duplicates.
    pub fn normalize(&mut self) {
        let set: BTreeSet<Row> = self.rows.drain(..).collect();
        self.rows = set.into_iter().collect();
    }

    pub fn contains(&self, x: &LatticePoint) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        if self.nonneg && x.0.iter().any(|&c| c < 0) {
            return Ok(false);
        }
        for row in &self.rows {
            if checked_dot(&row.a, &x.0)? > row.b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first row violated by `x`, if any.
    pub fn violated_row(&self, x: &LatticePoint) -> Result<Option<&Row>> {
        for row in &self.rows {
            if checked_dot(&row.a, &x.0)? > row.b {
                return Ok(Some(row));
            }
        }
        Ok(None)
    }

    /// Upper bound on coordinate `c` implied by a single row together with
    /// `x >= 0`: a row with positive coefficient on `c` and no negative ones.
    pub fn single_row_cap(&self, c: usize) -> Option<i64> {
        if !self.nonneg {
            return None;
        }
        self.rows
            .iter()
            .filter(|r| r.a[c] > 0 && r.a.iter().all(|&v| v >= 0))
            .map(|r| r.b.div_euclid(r.a[c]))
            .min()
    }

    /// All integer points of the polytope inside `[0, box_bound]^dim`.
    pub fn lattice_points(&self, box_bound: i64) -> Result<Enumeration> {
        if box_bound < 0 {
            return Ok(Enumeration {
                points: PointSet::empty(self.dim),
                warnings: Vec::new(),
            });
        }
        self.check_magnitudes(box_bound)?;

        let dim = self.dim;
        let rows = &self.rows;
        // neg_tail[r][i]: sum over coordinates j >= i with a_j < 0 of a_j * box
        let neg_tail: Vec<Vec<i64>> = rows
            .iter()
            .map(|row| {
                let mut tail = vec![0i64; dim + 1];
                for i in (0..dim).rev() {
                    let c = row.a[i];
                    tail[i] = tail[i + 1] + if c < 0 { c * box_bound } else { 0 };
                }
                tail
            })
            .collect();

        let mut found = Vec::new();
        let mut point = vec![0i64; dim];
        let mut fixed = vec![0i64; rows.len()];
        self.descend(0, box_bound, &neg_tail, &mut fixed, &mut point, &mut found);

        let points = PointSet::from_sorted_unique(dim, found);
        let caps: Vec<Option<i64>> = (0..dim).map(|c| self.single_row_cap(c)).collect();
        let mut warnings = Vec::new();
        for p in points.iter() {
            for (c, cap) in caps.iter().enumerate() {
                let capped = cap.is_some_and(|v| v <= box_bound);
                if p.0[c] == box_bound && !capped {
                    warnings.push(BoundWarning {
                        coordinate: c,
                        point: p.clone(),
                    });
                }
            }
        }
        Ok(Enumeration { points, warnings })
    }

    fn check_magnitudes(&self, box_bound: i64) -> Result<()> {
        for row in &self.rows {
            let mut acc: i64 = row.b.checked_abs().ok_or(Error::Overflow("bounding rows"))?;
            for &c in &row.a {
                let term = c
                    .checked_abs()
                    .and_then(|v| v.checked_mul(box_bound))
                    .ok_or(Error::Overflow("bounding rows"))?;
                acc = acc.checked_add(term).ok_or(Error::Overflow("bounding rows"))?;
            }
        }
        Ok(())
    }

    fn descend(
        &self,
        i: usize,
        box_bound: i64,
        neg_tail: &[Vec<i64>],
        fixed: &mut [i64],
        point: &mut Vec<i64>,
        out: &mut Vec<LatticePoint>,
    ) {
        if i == self.dim {
            if self.rows.iter().zip(fixed.iter()).all(|(r, &f)| f <= r.b) {
                out.push(LatticePoint(point.clone()));
            }
            return;
        }
        let (mut lo, mut hi) = (0i64, box_bound);
        for (r, row) in self.rows.iter().enumerate() {
            let residual = row.b - fixed[r] - neg_tail[r][i + 1];
            let c = row.a[i];
            if c > 0 {
                hi = hi.min(residual.div_euclid(c));
            } else if c < 0 {
                // c * x <= residual  <=>  x >= ceil(residual / c)
                lo = lo.max(-(residual.div_euclid(-c)));
            } else if residual < 0 {
                return;
            }
            if lo > hi {
                return;
            }
        }
        for v in lo..=hi {
            point[i] = v;
            for (r, row) in self.rows.iter().enumerate() {
                fixed[r] += row.a[i] * v;
            }
            self.descend(i + 1, box_bound, neg_tail, fixed, point, out);
            for (r, row) in self.rows.iter().enumerate() {
                fixed[r] -= row.a[i] * v;
            }
        }
        point[i] = 0;
    }
}

/// A finite set of lattice points of a common dimension, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    points: Vec<LatticePoint>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Self {
        PointSet {
            dim,
            points: Vec::new(),
        }
    }

    pub fn singleton(p: LatticePoint) -> Self {
        PointSet {
            dim: p.dim(),
            points: vec![p],
        }
    }

    pub fn from_points<I: IntoIterator<Item = LatticePoint>>(dim: usize, it: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in it {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
            set.insert(p);
        }
        Ok(PointSet {
            dim,
            points: set.into_iter().collect(),
        })
    }

    fn from_sorted_unique(dim: usize, mut points: Vec<LatticePoint>) -> Self {
        points.sort();
        points.dedup();
        PointSet { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn insert(&mut self, p: LatticePoint) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        match self.points.binary_search(&p) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.points.insert(pos, p);
                Ok(true)
            }
        }
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// Points of `self` missing from `other`.
    pub fn difference<'a>(&'a self, other: &'a PointSet) -> impl Iterator<Item = &'a LatticePoint> {
        self.points.iter().filter(move |p| !other.contains(p))
    }

    pub fn filter<F: Fn(&LatticePoint) -> bool>(&self, keep: F) -> PointSet {
        PointSet {
            dim: self.dim,
            points: self.points.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a LatticePoint;
    type IntoIter = std::slice::Iter<'a, LatticePoint>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<LatticePoint> = Vec::deserialize(deserializer)?;
        let dim = raw.first().map_or(0, LatticePoint::dim);
        PointSet::from_points(dim, raw).map_err(serde::de::Error::custom)
    }
}

/// Minkowski sum `{a + b}` of two point sets.
pub fn sumset(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let mut out = BTreeSet::new();
    for p in a {
        for q in b {
            out.insert(p.checked_add(q)?);
        }
    }
    Ok(PointSet {
        dim: a.dim(),
        points: out.into_iter().collect(),
    })
}

/// `max_{a in A} d . a`.
pub fn support(a: &PointSet, d: &[i64]) -> Result<i64> {
    let mut best: Option<i64> = None;
    for p in a {
        let v = p.dot(d)?;
        best = Some(best.map_or(v, |b| b.max(v)));
    }
    best.ok_or(Error::EmptyPointSet)
}
