//! Box-relative lower bounds on sumsets and the subset comparison of deficits.

use num_rational::BigRational;
use serde::Serialize;

use super::doubling::{doubling_deficit, pow2};
use super::minkowski_sum;
use crate::error::{Error, Result};
use crate::lattice::gap::AxisBox;
use crate::lattice::LatticeSet;
use crate::rational::{self, int};

/// Both sides of an inequality `lhs <= rhs`, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    #[serde(with = "rational::serde_str")]
    pub lhs: BigRational,
    #[serde(with = "rational::serde_str")]
    pub rhs: BigRational,
    pub holds: bool,
}

impl BoundCheck {
    pub fn le(lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs <= rhs;
        BoundCheck { lhs, rhs, holds }
    }

    pub fn ge(lhs: BigRational, rhs: BigRational) -> Self {
        let holds = lhs >= rhs;
        BoundCheck { lhs, rhs, holds }
    }
}

/// `|X_1 + X_2| >= 2^k min(|X_1|, |X_2|) - 2^{2k} min{n_i}^{-1} |B|` for `X_1, X_2 ⊆ B`.
pub fn box_lower_bound_check(x1: &LatticeSet, x2: &LatticeSet, boxed: &AxisBox) -> Result<BoundCheck> {
    let k = boxed.dim();
    if !boxed.contains_set(x1) || !boxed.contains_set(x2) {
        return Err(Error::NotContained);
    }
    let lhs = int(minkowski_sum(x1, x2)?.len() as i64);
    let min_card = x1.len().min(x2.len()) as i64;
    let rhs = int(pow2(k)? * min_card) - int(pow2(2 * k)?) * boxed.size_over_min_side();
    Ok(BoundCheck::ge(lhs, rhs))
}

/// The projected form for `Y_1, Y_2 ⊆ π(B)`:
/// `|Y_1 + Y_2| >= 2^{k-1} min(|Y_1|, |Y_2|) - 2^{2(k-1)} min{n_i}^{-1} n_1^{-1} |B|`,
/// where `min{n_i}` ranges over all sides of `B`.
pub fn projected_lower_bound_check(
    y1: &LatticeSet,
    y2: &LatticeSet,
    boxed: &AxisBox,
) -> Result<BoundCheck> {
    let k = boxed.dim();
    let projected = boxed.projected()?;
    if !projected.contains_set(y1) || !projected.contains_set(y2) {
        return Err(Error::NotContained);
    }
    let lhs = int(minkowski_sum(y1, y2)?.len() as i64);
    let min_card = y1.len().min(y2.len()) as i64;
    let n1 = boxed.lengths()[0] as i64;
    let rhs = int(pow2(k - 1)? * min_card)
        - int(pow2(2 * (k - 1))?) * boxed.size_over_min_side() / int(n1);
    Ok(BoundCheck::ge(lhs, rhs))
}

/// `d_k(X) <= d_k(Y) + 2^k |Y \ X|` for nonempty `X ⊆ Y`.
pub fn subset_deficit_check(x: &LatticeSet, y: &LatticeSet) -> Result<BoundCheck> {
    if !x.is_subset(y) {
        return Err(Error::NotContained);
    }
    let dx = doubling_deficit(x)?.deficit;
    let dy = doubling_deficit(y)?.deficit;
    let extra = pow2(y.dim())? * y.difference_count(x) as i64;
    Ok(BoundCheck::le(int(dx), int(dy + extra)))
}
