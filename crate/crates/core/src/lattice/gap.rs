//! Generalized arithmetic progressions `B(n_1..n_r; v_1..v_r; b)` and boxes.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{LatticeSet, Point};
use crate::error::{Error, Result};

/// `{ b + Σ l_i v_i : 0 <= l_i < n_i }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    base: Point,
    vectors: Vec<Point>,
    lengths: Vec<u64>,
}

impl Gap {
    pub fn new(base: Point, vectors: Vec<Point>, lengths: Vec<u64>) -> Result<Self> {
        if vectors.len() != lengths.len() {
            return Err(Error::InvalidParameter(format!(
                "{} vectors but {} lengths",
                vectors.len(),
                lengths.len()
            )));
        }
        if base.dim() == 0 {
            return Err(Error::InvalidDimension(0, "dimension must be at least 1"));
        }
        if let Some(v) = vectors.iter().find(|v| v.dim() != base.dim()) {
            return Err(Error::DimensionMismatch { expected: base.dim(), found: v.dim() });
        }
        if lengths.iter().any(|&n| n == 0) {
            return Err(Error::InvalidParameter("lengths must be positive".into()));
        }
        Ok(Gap { base, vectors, lengths })
    }

    /// The box `B(n_1, ..., n_k) = Π {1, ..., n_i}`.
    pub fn standard_box(lengths: &[u64]) -> Result<Self> {
        Self::box_at(Point::new(std::iter::repeat(1).take(lengths.len())), lengths)
    }

    /// The box `Π {lo_i, ..., lo_i + n_i - 1}`.
    pub fn box_at(lo: Point, lengths: &[u64]) -> Result<Self> {
        let k = lengths.len();
        if lo.dim() != k {
            return Err(Error::DimensionMismatch { expected: k, found: lo.dim() });
        }
        Self::new(lo, (0..k).map(|i| Point::unit(k, i)).collect(), lengths.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn vectors(&self) -> &[Point] {
        &self.vectors
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    /// `Π n_i`, the size when the parametrization is injective.
    pub fn nominal_size(&self) -> u128 {
        self.lengths.iter().map(|&n| n as u128).product()
    }

    pub fn elements(&self) -> Result<LatticeSet> {
        let mut pts = vec![self.base.clone()];
        for (v, &n) in self.vectors.iter().zip(&self.lengths) {
            let mut next = Vec::with_capacity(pts.len() * n as usize);
            for p in &pts {
                let mut q = p.clone();
                for _ in 0..n {
                    next.push(q.clone());
                    q = q.checked_add(v)?;
                }
            }
            pts = next;
        }
        LatticeSet::new(self.dim(), pts)
    }

    /// Whether the parametrization is injective (a proper progression).
    pub fn is_proper(&self) -> Result<bool> {
        Ok(self.elements()?.len() as u128 == self.nominal_size())
    }

    /// Views the progression as an axis-aligned unit-step box.
    pub fn as_box(&self) -> Result<AxisBox> {
        let k = self.dim();
        if self.vectors.len() != k || self.vectors.iter().enumerate().any(|(i, v)| *v != Point::unit(k, i)) {
            return Err(Error::NotABox);
        }
        Ok(AxisBox { lo: self.base.clone(), lengths: self.lengths.clone() })
    }
}

/// An axis-aligned box `Π {lo_i, ..., lo_i + n_i - 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisBox {
    lo: Point,
    lengths: Vec<u64>,
}

impl AxisBox {
    pub fn new(lo: Point, lengths: Vec<u64>) -> Result<Self> {
        Gap::box_at(lo, &lengths)?.as_box()
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn lo(&self) -> &Point {
        &self.lo
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn hi(&self, i: usize) -> i64 {
        self.lo[i] + self.lengths[i] as i64 - 1
    }

    pub fn min_side(&self) -> u64 {
        *self.lengths.iter().min().expect("dimension >= 1")
    }

    /// `|B|`.
    pub fn size(&self) -> u128 {
        self.lengths.iter().map(|&n| n as u128).product()
    }

    pub fn size_big(&self) -> BigInt {
        BigInt::from(self.size())
    }

    /// `min{n_i}^{-1} |B|`.
    pub fn size_over_min_side(&self) -> BigRational {
        BigRational::new(self.size_big(), BigInt::from(self.min_side()))
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim() && (0..self.dim()).all(|i| p[i] >= self.lo[i] && p[i] <= self.hi(i))
    }

    pub fn contains_set(&self, set: &LatticeSet) -> bool {
        set.dim() == self.dim() && set.iter().all(|p| self.contains(p))
    }

    /// The projection `π(B)` away from the first coordinate.
    pub fn projected(&self) -> Result<AxisBox> {
        if self.dim() < 2 {
            return Err(Error::InvalidDimension(self.dim(), "projection needs k >= 2"));
        }
        AxisBox::new(self.lo.tail(), self.lengths[1..].to_vec())
    }

    pub fn elements(&self) -> LatticeSet {
        Gap::box_at(self.lo.clone(), &self.lengths)
            .and_then(|g| g.elements())
            .expect("boxes enumerate")
    }
}
