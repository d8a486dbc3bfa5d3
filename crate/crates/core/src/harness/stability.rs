//! Stability reports and the converse inequality
//! `d_k(A) <= 2^k |co(A) \ A| + 2^{k+2} k (k+1) min{n_i}^{-1} |B|`.

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::convex_progression;
use crate::lattice::gap::AxisBox;
use crate::lattice::LatticeSet;
use crate::rational::{self, int};
use crate::sumset::bounds::BoundCheck;
use crate::sumset::doubling::pow2;
use crate::sumset::doubling_deficit;
use crate::sumset::thickness::{thickness_upper, ThicknessEstimate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub card_a: usize,
    pub deficit: i64,
    #[serde(with = "rational::serde_str")]
    pub delta: BigRational,
    pub gap: u64,
    /// `gap / deficit`, present only for positive deficit.
    #[serde(with = "rational::serde_opt_str")]
    pub ratio: Option<BigRational>,
    pub thickness: ThicknessEstimate,
}

pub fn check_stability(a: &LatticeSet, normal_bound: u32) -> Result<StabilityReport> {
    let doubling = doubling_deficit(a)?;
    let gap = convex_progression(a)?.gap;
    let ratio = (doubling.deficit > 0).then(|| rational::ratio(gap as i64, doubling.deficit));
    Ok(StabilityReport {
        card_a: doubling.card_a,
        deficit: doubling.deficit,
        delta: doubling.normalized_delta,
        gap,
        ratio,
        thickness: thickness_upper(a, normal_bound)?,
    })
}

pub fn check_converse(a: &LatticeSet, boxed: &AxisBox) -> Result<BoundCheck> {
    if !boxed.contains_set(a) {
        return Err(Error::NotContained);
    }
    let k = a.dim();
    let deficit = doubling_deficit(a)?.deficit;
    let co_gap = convex_progression(a)?.co_gap(a) as i64;
    let ki = k as i64;
    let rhs = int(pow2(k)? * co_gap) + int(pow2(k + 2)? * ki * (ki + 1)) * boxed.size_over_min_side();
    Ok(BoundCheck::le(int(deficit), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Point;

    fn b33() -> AxisBox {
        AxisBox::new(Point::from(vec![1, 1]), vec![3, 3]).unwrap()
    }

    #[test]
    fn stability_examples() {
        let r = check_stability(&LatticeSet::interval(0, 9), 3).unwrap();
        assert_eq!((r.deficit, r.gap, r.ratio.clone()), (-1, 0, None));
        assert_eq!(r.thickness.count, 10);
        let r = check_stability(&LatticeSet::from_ints(&[0, 1, 2, 4]), 3).unwrap();
        assert_eq!((r.deficit, r.gap, r.ratio.clone()), (0, 1, None));
        let r = check_stability(&LatticeSet::from_ints(&[0, 1, 2, 5]), 3).unwrap();
        assert_eq!((r.deficit, r.gap, r.ratio), (1, 2, Some(int(2))));
    }

    #[test]
    fn converse_examples() {
        let full = b33().elements();
        let c = check_converse(&full, &b33()).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.holds), (int(-11), int(288), true));
        let c = check_converse(&LatticeSet::from_arrays(&[[1, 1], [3, 3]]), &b33()).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (int(-5), int(292)));
        let b22 = AxisBox::new(Point::from(vec![0, 0]), vec![2, 2]).unwrap();
        assert!(check_converse(&LatticeSet::from_arrays(&[[1, 0]]), &b22).unwrap().holds);
        assert!(check_converse(&LatticeSet::from_arrays(&[[5, 0]]), &b22).is_err());
    }
}
