//! Exact comparisons between continuous bodies and their lattice points
//! inside a box `B`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::polytope::Polytope;
use crate::error::{Error, Result};
use crate::lattice::gap::AxisBox;
use crate::lattice::{LatticeSet, Point};
use crate::rational::{self, int};

/// `|vol(P) - |P ∩ Z^k||` against `2k(k+1) min{n_i}^{-1} |B|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VolumeCountCheck {
    #[serde(with = "rational::serde_str")]
    pub volume: BigRational,
    pub count: u64,
    #[serde(with = "rational::serde_str")]
    pub difference: BigRational,
    #[serde(with = "rational::serde_str")]
    pub bound: BigRational,
    pub holds: bool,
}

/// A count compared against an exact bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub count: u64,
    #[serde(with = "rational::serde_str")]
    pub bound: BigRational,
    pub holds: bool,
}

impl CountCheck {
    fn new(count: u64, bound: BigRational) -> Self {
        let holds = int(count as i64) <= bound;
        CountCheck { count, bound, holds }
    }
}

fn inside_box(p: &Polytope, boxed: &AxisBox) -> bool {
    p.vertices().iter().all(|v| {
        v.iter()
            .enumerate()
            .all(|(i, x)| *x >= int(boxed.lo()[i]) && *x <= int(boxed.hi(i)))
    })
}

pub fn volume_count_check(p: &Polytope, boxed: &AxisBox) -> Result<VolumeCountCheck> {
    if p.dim() != boxed.dim() {
        return Err(Error::DimensionMismatch { expected: boxed.dim(), found: p.dim() });
    }
    if !inside_box(p, boxed) {
        return Err(Error::NotContained);
    }
    let k = p.dim() as i64;
    let volume = p.volume().clone();
    let count = p.lattice_points()?.len() as u64;
    let difference = rational::abs(&(&volume - int(count as i64)));
    let bound = int(2 * k * (k + 1)) * boxed.size_over_min_side();
    let holds = difference <= bound;
    Ok(VolumeCountCheck { volume, count, difference, bound, holds })
}

/// Counts `x` with exactly one of `x`, `x + v` in `co(Y)`, for `Y ⊆ π(B)`.
/// The bound is `2(k-1) min{n_i}^{-1} n_1^{-1} |B|`.
pub fn boundary_straddle_count(y: &LatticeSet, v: &Point, boxed: &AxisBox) -> Result<CountCheck> {
    let k = boxed.dim();
    let projected = boxed.projected()?;
    if v.dim() != k - 1 {
        return Err(Error::DimensionMismatch { expected: k - 1, found: v.dim() });
    }
    if v.coords().iter().all(|&c| c == 0) || v.coords().iter().any(|&c| c != 0 && c != 1) {
        return Err(Error::InvalidShift);
    }
    if !projected.contains_set(y) {
        return Err(Error::NotContained);
    }
    let bound = BigRational::new(
        BigInt::from(2 * (k as u64 - 1)) * boxed.size_big(),
        BigInt::from(boxed.min_side()) * BigInt::from(boxed.lengths()[0]),
    );
    if y.is_empty() {
        return Ok(CountCheck::new(0, bound));
    }
    let co = Polytope::convex_hull(y)?.lattice_points()?;
    let shifted = co.translate(&v.neg()?)?;
    let count = co.difference_count(&shifted) + shifted.difference_count(&co);
    Ok(CountCheck::new(count as u64, bound))
}

/// `|H ∩ B| <= min{n_i}^{-1} |B|` for the hyperplane `normal · x = offset`.
pub fn hyperplane_box_check(normal: &[i64], offset: i64, boxed: &AxisBox) -> Result<CountCheck> {
    if normal.len() != boxed.dim() {
        return Err(Error::DimensionMismatch { expected: boxed.dim(), found: normal.len() });
    }
    if normal.iter().all(|&c| c == 0) {
        return Err(Error::InvalidParameter("hyperplane normal must be nonzero".into()));
    }
    let mut count = 0u64;
    for p in boxed.elements().iter() {
        let lhs: i128 = p.coords().iter().zip(normal).map(|(&a, &b)| a as i128 * b as i128).sum();
        if lhs == offset as i128 {
            count += 1;
        }
    }
    Ok(CountCheck::new(count, boxed.size_over_min_side()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn unit_box(lengths: &[u64]) -> AxisBox {
        AxisBox::new(Point::from(vec![0; lengths.len()]), lengths.to_vec()).unwrap()
    }

    #[test]
    fn square_in_box() {
        let sq: Vec<[i64; 2]> = (0..4).flat_map(|x| (0..4).map(move |y| [x, y])).collect();
        let p = Polytope::convex_hull(&LatticeSet::from_arrays(&sq)).unwrap();
        let c = volume_count_check(&p, &unit_box(&[4, 4])).unwrap();
        assert_eq!((c.volume.clone(), c.count, c.difference.clone()), (int(9), 16, int(7)));
        assert_eq!(c.bound, int(48));
        assert!(c.holds);
    }

    #[test]
    fn triangle_and_point() {
        let t = Polytope::convex_hull(&LatticeSet::from_arrays(&[[0, 0], [4, 0], [0, 4]])).unwrap();
        let c = volume_count_check(&t, &unit_box(&[5, 5])).unwrap();
        assert_eq!((c.volume.clone(), c.count), (int(8), 15));
        assert_eq!(c.bound, int(60));
        let p = Polytope::convex_hull(&LatticeSet::from_arrays(&[[1, 1]])).unwrap();
        let c = volume_count_check(&p, &unit_box(&[2, 2])).unwrap();
        assert_eq!((c.volume.clone(), c.count, c.holds), (int(0), 1, true));
        let far = Polytope::convex_hull(&LatticeSet::from_arrays(&[[9, 9]])).unwrap();
        assert!(matches!(volume_count_check(&far, &unit_box(&[2, 2])), Err(Error::NotContained)));
    }

    #[test]
    fn straddlers() {
        let y = LatticeSet::interval(0, 2);
        let c = boundary_straddle_count(&y, &Point::from(vec![1]), &unit_box(&[3, 3])).unwrap();
        assert_eq!(c.count, 2);
        assert_eq!(c.bound, int(2));
        let sq: Vec<[i64; 2]> = (0..3).flat_map(|x| (0..3).map(move |y| [x, y])).collect();
        let c = boundary_straddle_count(
            &LatticeSet::from_arrays(&sq),
            &Point::from(vec![1, 0]),
            &unit_box(&[3, 3, 3]),
        )
        .unwrap();
        assert_eq!(c.count, 6);
        let empty = boundary_straddle_count(&LatticeSet::empty(1), &Point::from(vec![1]), &unit_box(&[3, 3]));
        assert_eq!(empty.unwrap().count, 0);
        assert!(boundary_straddle_count(&y, &Point::from(vec![0]), &unit_box(&[3, 3])).is_err());
    }

    #[test]
    fn hyperplane_counts() {
        let c = hyperplane_box_check(&[1, 1], 3, &unit_box(&[4, 6])).unwrap();
        assert_eq!(c.count, 4);
        assert_eq!(c.bound, int(6));
        let c = hyperplane_box_check(&[0, 2], 1, &unit_box(&[4, 6])).unwrap();
        assert_eq!(c.count, 0);
        assert_eq!(hyperplane_box_check(&[1, 0, 0], 0, &unit_box(&[3, 4, 5])).unwrap().bound, ratio(60, 3));
    }
}
