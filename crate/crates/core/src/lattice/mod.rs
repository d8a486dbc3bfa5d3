//! Integer points, finite lattice sets and the structures built directly on
//! them: affine sublattices, generalized arithmetic progressions, row and
//! hyperplane fibers, and coordinate compression.

pub mod compress;
pub mod fibers;
pub mod gap;
pub mod io;
pub mod sublattice;

use std::fmt;
use std::ops::Index;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A point of `Z^k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point(SmallVec<[i64; 4]>);

impl Point {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Point(coords.into_iter().collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point(SmallVec::from_elem(0, dim))
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut p = Self::zero(dim);
        p.0[i] = 1;
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn checked_add(&self, other: &Point) -> Result<Point> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Point) -> Result<Point> {
        self.zip_with(other, i64::checked_sub)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Point> {
        self.0
            .iter()
            .map(|&c| c.checked_mul(factor).ok_or(Error::Overflow("point scaling")))
            .collect::<Result<SmallVec<_>>>()
            .map(Point)
    }

    pub fn neg(&self) -> Result<Point> {
        self.checked_scale(-1)
    }

    pub fn dot(&self, other: &[i64]) -> Result<i64> {
        debug_assert_eq!(self.dim(), other.len());
        let mut acc: i64 = 0;
        for (a, b) in self.0.iter().zip(other) {
            acc = a
                .checked_mul(*b)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow("dot product"))?;
        }
        Ok(acc)
    }

    /// Drops the first coordinate.
    pub fn tail(&self) -> Point {
        Point(self.0[1..].iter().copied().collect())
    }

    /// Prepends `first` to the coordinates.
    pub fn with_head(first: i64, tail: &Point) -> Point {
        let mut v = SmallVec::with_capacity(tail.dim() + 1);
        v.push(first);
        v.extend_from_slice(&tail.0);
        Point(v)
    }

    pub(crate) fn set(&mut self, i: usize, value: i64) {
        self.0[i] = value;
    }

    fn zip_with(&self, other: &Point, op: fn(i64, i64) -> Option<i64>) -> Result<Point> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow("point arithmetic")))
            .collect::<Result<SmallVec<_>>>()
            .map(Point)
    }
}

impl Index<usize> for Point {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point(SmallVec::from_vec(v))
    }
}

impl From<&[i64]> for Point {
    fn from(v: &[i64]) -> Self {
        Point(SmallVec::from_slice(v))
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(v: [i64; N]) -> Self {
        Point(SmallVec::from_slice(&v))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite set of points of `Z^k`, kept sorted lexicographically and free of
/// duplicates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeSet {
    dim: usize,
    points: Vec<Point>,
}

impl LatticeSet {
    pub fn empty(dim: usize) -> Self {
        assert!(dim >= 1, "lattice sets live in dimension at least 1");
        LatticeSet { dim, points: Vec::new() }
    }

    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0, "dimension must be at least 1"));
        }
        let mut pts: Vec<Point> = points.into_iter().collect();
        if let Some(bad) = pts.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        pts.sort_unstable();
        pts.dedup();
        Ok(LatticeSet { dim, points: pts })
    }

    /// Builds a set from points already sorted and deduplicated.
    pub(crate) fn from_sorted(dim: usize, points: Vec<Point>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(points.iter().all(|p| p.dim() == dim));
        LatticeSet { dim, points }
    }

    /// Convenience constructor from fixed-size coordinate arrays.
    pub fn from_arrays<const N: usize>(points: &[[i64; N]]) -> Self {
        Self::new(N, points.iter().map(|p| Point::from(*p))).expect("N >= 1 and uniform")
    }

    /// A one-dimensional set.
    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(1, values.iter().map(|&v| Point::from([v]))).expect("dimension 1")
    }

    /// The discrete interval `{lo, ..., hi}` in `Z`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        Self::from_sorted(1, (lo..=hi).map(|v| Point::from([v])).collect())
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

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &LatticeSet) -> bool {
        self.dim == other.dim && self.points.iter().all(|p| other.contains(p))
    }

    /// Number of points of `self` not in `other`.
    pub fn difference_count(&self, other: &LatticeSet) -> usize {
        self.points.iter().filter(|p| !other.contains(p)).count()
    }

    pub fn union(&self, other: &LatticeSet) -> Result<LatticeSet> {
        self.check_dim(other)?;
        let mut pts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            match self.points[i].cmp(&other.points[j]) {
                std::cmp::Ordering::Less => {
                    pts.push(self.points[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    pts.push(other.points[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    pts.push(self.points[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        pts.extend_from_slice(&self.points[i..]);
        pts.extend_from_slice(&other.points[j..]);
        Ok(LatticeSet::from_sorted(self.dim, pts))
    }

    pub fn filter(&self, mut keep: impl FnMut(&Point) -> bool) -> LatticeSet {
        LatticeSet::from_sorted(self.dim, self.points.iter().filter(|p| keep(p)).cloned().collect())
    }

    pub fn translate(&self, t: &Point) -> Result<LatticeSet> {
        if t.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: t.dim() });
        }
        let pts = self.points.iter().map(|p| p.checked_add(t)).collect::<Result<Vec<_>>>()?;
        Ok(LatticeSet::from_sorted(self.dim, pts))
    }

    /// Applies an arbitrary coordinate map and re-canonicalizes.
    pub fn map(&self, dim: usize, f: impl FnMut(&Point) -> Result<Point>) -> Result<LatticeSet> {
        let pts = self.points.iter().map(f).collect::<Result<Vec<_>>>()?;
        LatticeSet::new(dim, pts)
    }

    /// Coordinate-wise minimum and maximum.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let first = self.points.first()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for p in &self.points[1..] {
            for i in 0..self.dim {
                if p[i] < lo[i] {
                    lo.set(i, p[i]);
                }
                if p[i] > hi[i] {
                    hi.set(i, p[i]);
                }
            }
        }
        Some((lo, hi))
    }

    pub(crate) fn check_dim(&self, other: &LatticeSet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptySet)
        } else {
            Ok(())
        }
    }

    /// Coordinates as plain vectors, for the geometry routines.
    pub(crate) fn coordinate_rows(&self) -> Vec<Vec<i64>> {
        self.points.iter().map(|p| p.coords().to_vec()).collect()
    }
}

impl<'a> IntoIterator for &'a LatticeSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}
