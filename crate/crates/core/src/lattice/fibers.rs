//! Projection away from the first coordinate, rows `R_x` and hyperplanes `H_y`.

use std::collections::BTreeMap;

use super::{LatticeSet, Point};
use crate::error::{Error, Result};

fn require_k2(set: &LatticeSet) -> Result<()> {
    if set.dim() < 2 {
        return Err(Error::InvalidDimension(set.dim(), "projection needs k >= 2"));
    }
    Ok(())
}

/// `π(A)`, written in the coordinates of `Z^{k-1}`.
pub fn project_pi(set: &LatticeSet) -> Result<LatticeSet> {
    require_k2(set)?;
    LatticeSet::new(set.dim() - 1, set.iter().map(Point::tail))
}

/// The rows of a set: for each projected point `x`, the sorted first
/// coordinates of `π^{-1}(x) ∩ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowDecomposition {
    dim: usize,
    rows: BTreeMap<Point, Vec<i64>>,
}

impl RowDecomposition {
    /// Ambient dimension `k` of the decomposed set.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, x: &Point) -> Option<&[i64]> {
        self.rows.get(x).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &[i64])> {
        self.rows.iter().map(|(k, v)| (k, v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `Σ_x |R_x|`.
    pub fn total(&self) -> usize {
        self.rows.values().map(Vec::len).sum()
    }

    pub fn reassemble(&self) -> LatticeSet {
        let pts = self
            .rows
            .iter()
            .flat_map(|(x, r)| r.iter().map(move |&a| Point::with_head(a, x)))
            .collect::<Vec<_>>();
        LatticeSet::new(self.dim, pts).expect("uniform dimension")
    }
}

pub fn rows(set: &LatticeSet) -> Result<RowDecomposition> {
    require_k2(set)?;
    let mut rows: BTreeMap<Point, Vec<i64>> = BTreeMap::new();
    for p in set {
        rows.entry(p.tail()).or_default().push(p[0]);
    }
    for r in rows.values_mut() {
        r.sort_unstable();
    }
    Ok(RowDecomposition { dim: set.dim(), rows })
}

/// Slices `H_y` of `A` by the value `y` of the second coordinate.
pub fn hyperplane_slices(set: &LatticeSet) -> Result<BTreeMap<i64, LatticeSet>> {
    require_k2(set)?;
    let mut slices: BTreeMap<i64, Vec<Point>> = BTreeMap::new();
    for p in set {
        slices.entry(p[1]).or_default().push(p.clone());
    }
    Ok(slices
        .into_iter()
        .map(|(y, pts)| (y, LatticeSet::from_sorted(set.dim(), pts)))
        .collect())
}
