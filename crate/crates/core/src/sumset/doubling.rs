use num_rational::BigRational;
use serde::Serialize;

use super::minkowski_sum;
use crate::error::{Error, Result};
use crate::lattice::LatticeSet;
use crate::rational;

/// `d_k(A) = |A+A| - 2^k |A|` together with its normalization `δ = d_k(A)/|A|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoublingReport {
    pub card_a: usize,
    pub card_sum: usize,
    pub deficit: i64,
    #[serde(with = "rational::serde_str")]
    pub normalized_delta: BigRational,
}

/// `2^k`, checked.
pub(crate) fn pow2(k: usize) -> Result<i64> {
    1i64.checked_shl(k as u32).filter(|v| *v > 0).ok_or(Error::Overflow("2^k"))
}

pub(crate) fn deficit_from(k: usize, card_a: usize, card_sum: usize) -> Result<i64> {
    pow2(k)?
        .checked_mul(card_a as i64)
        .and_then(|t| (card_sum as i64).checked_sub(t))
        .ok_or(Error::Overflow("doubling deficit"))
}

pub fn doubling_deficit(set: &LatticeSet) -> Result<DoublingReport> {
    set.require_nonempty()?;
    let card_sum = minkowski_sum(set, set)?.len();
    let deficit = deficit_from(set.dim(), set.len(), card_sum)?;
    Ok(DoublingReport {
        card_a: set.len(),
        card_sum,
        deficit,
        normalized_delta: rational::ratio(deficit, set.len() as i64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Point;
    use proptest::prelude::*;

    #[test]
    fn interval_has_deficit_minus_one() {
        for n in 1..20 {
            assert_eq!(doubling_deficit(&LatticeSet::interval(0, n - 1)).unwrap().deficit, -1);
        }
    }

    #[test]
    fn unit_square() {
        let r = doubling_deficit(&LatticeSet::from_arrays(&[[0, 0], [0, 1], [1, 0], [1, 1]])).unwrap();
        assert_eq!((r.card_sum, r.deficit), (9, -7));
        assert_eq!(r.normalized_delta, rational::ratio(-7, 4));
    }

    #[test]
    fn zero_deficit_set() {
        let r = doubling_deficit(&LatticeSet::from_ints(&[0, 1, 2, 4])).unwrap();
        assert_eq!((r.card_a, r.card_sum, r.deficit), (4, 8, 0));
    }

    #[test]
    fn empty_is_an_error() {
        assert_eq!(doubling_deficit(&LatticeSet::empty(2)), Err(Error::EmptySet));
    }

    fn set(k: usize) -> impl Strategy<Value = LatticeSet> {
        proptest::collection::vec(proptest::collection::vec(-6i64..6, k), 1..20)
            .prop_map(move |v| LatticeSet::new(k, v.into_iter().map(Point::from)).unwrap())
    }

    proptest! {
        #[test]
        fn one_dimensional_deficit_at_least_minus_one(a in set(1)) {
            prop_assert!(doubling_deficit(&a).unwrap().deficit >= -1);
        }

        #[test]
        fn unimodular_invariance(a in set(3), t in proptest::collection::vec(-9i64..9, 3), perm in Just([2usize, 0, 1]), flips in proptest::collection::vec(any::<bool>(), 3)) {
            let d = doubling_deficit(&a).unwrap().deficit;
            let shifted = a.translate(&Point::from(t)).unwrap();
            prop_assert_eq!(doubling_deficit(&shifted).unwrap().deficit, d);
            let moved = a.map(3, |p| Ok(Point::new((0..3).map(|i| {
                let c = p[perm[i]];
                if flips[i] { -c } else { c }
            })))).unwrap();
            prop_assert_eq!(doubling_deficit(&moved).unwrap().deficit, d);
        }
    }
}
