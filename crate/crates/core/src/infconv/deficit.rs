//! Epigraph lifts and the functional deficit.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{inf_convolution, lower_convex_hull, LatticeFunction};
use crate::error::{Error, Result};
use crate::lattice::{LatticeSet, Point};
use crate::rational::{self, ceil_i64, int};
use crate::sumset::doubling::pow2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctionalDeficitReport {
    /// `Σ (f - f̂)`.
    #[serde(with = "rational::serde_str")]
    pub hull_deficit: BigRational,
    /// `2^{k+1} Σ f - Σ f^□`.
    #[serde(with = "rational::serde_str")]
    pub conv_deficit: BigRational,
    /// `hull_deficit / conv_deficit` when the latter is positive.
    #[serde(with = "rational::serde_opt_str")]
    pub ratio: Option<BigRational>,
}

/// `{(a, x) : a ∈ A, ⌈N f(a)⌉ <= x <= M}`, with the height last.
pub fn epigraph_lift(f: &LatticeFunction, n: u64, m: i64) -> Result<LatticeSet> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let k = f.domain().dim();
    let scale = int(n);
    let mut points = Vec::new();
    for (a, v) in f.iter() {
        let lo = ceil_i64(&(v * &scale))?;
        if lo > m {
            return Err(Error::InvalidParameter(format!("M = {m} is below ⌈N f(a)⌉ = {lo} at {a}")));
        }
        for x in lo..=m {
            let mut c = a.coords().to_vec();
            c.push(x);
            points.push(Point::from(c));
        }
    }
    LatticeSet::new(k + 1, points)
}

pub fn functional_deficit(f: &LatticeFunction) -> Result<FunctionalDeficitReport> {
    let k = f.domain().dim();
    let hull = lower_convex_hull(f)?;
    let hull_deficit = f.sum() - hull.sum();
    let conv = inf_convolution(f)?;
    let conv_deficit = int(pow2(k + 1)?) * f.sum() - conv.sum();
    let ratio = conv_deficit.is_positive().then(|| &hull_deficit / &conv_deficit);
    debug_assert!(!hull_deficit.is_negative() || hull_deficit.is_zero());
    Ok(FunctionalDeficitReport { hull_deficit, conv_deficit, ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn f1(values: &[BigRational]) -> LatticeFunction {
        LatticeFunction::new(LatticeSet::interval(0, values.len() as i64 - 1), values.to_vec()).unwrap()
    }

    #[test]
    fn lifts() {
        let f = f1(&[int(0), ratio(1, 2)]);
        let lift = epigraph_lift(&f, 2, 3).unwrap();
        assert_eq!(lift, LatticeSet::from_arrays(&[[0, 0], [0, 1], [0, 2], [0, 3], [1, 1], [1, 2], [1, 3]]));
        let zero = LatticeFunction::zero(LatticeSet::interval(0, 2));
        assert_eq!(epigraph_lift(&zero, 5, 1).unwrap().len(), 6);
        let one = f1(&[int(1)]);
        assert_eq!(epigraph_lift(&one, 1, 1).unwrap(), LatticeSet::from_arrays(&[[0, 1]]));
        assert!(epigraph_lift(&one, 2, 1).is_err());
    }

    #[test]
    fn ceiling_for_fractional_heights() {
        let f = f1(&[ratio(1, 3)]);
        assert_eq!(epigraph_lift(&f, 2, 2).unwrap(), LatticeSet::from_arrays(&[[0, 1], [0, 2]]));
    }

    #[test]
    fn deficits() {
        let r = functional_deficit(&f1(&[int(0), int(1), int(0)])).unwrap();
        assert_eq!((r.hull_deficit.clone(), r.conv_deficit.clone(), r.ratio.clone()), (int(1), int(2), Some(ratio(1, 2))));
        let r = functional_deficit(&LatticeFunction::zero(LatticeSet::interval(0, 4))).unwrap();
        assert_eq!((r.hull_deficit.clone(), r.conv_deficit.clone(), r.ratio), (int(0), int(0), None));
        let r = functional_deficit(&f1(&[int(0), int(1), int(2)])).unwrap();
        assert_eq!(r.hull_deficit, int(0));
        assert!(r.ratio.map_or(true, |q| q.is_zero()));
    }
}
