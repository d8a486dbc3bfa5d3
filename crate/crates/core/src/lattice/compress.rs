//! Down-compression along coordinate axes.

use std::collections::BTreeMap;

use smallvec::SmallVec;

use super::{LatticeSet, Point};
use crate::error::{Error, Result};

/// Slides every fiber parallel to `axis` onto `{0, 1, ..., m-1}`.
pub fn compress(set: &LatticeSet, axis: usize) -> Result<LatticeSet> {
    let k = set.dim();
    if axis >= k {
        return Err(Error::InvalidAxis { axis, dim: k });
    }
    let mut fibers: BTreeMap<SmallVec<[i64; 4]>, usize> = BTreeMap::new();
    for p in set {
        let mut key: SmallVec<[i64; 4]> = SmallVec::from_slice(p.coords());
        key[axis] = 0;
        *fibers.entry(key).or_default() += 1;
    }
    let mut pts = Vec::with_capacity(set.len());
    for (key, m) in fibers {
        for j in 0..m as i64 {
            let mut p = Point::new(key.iter().copied());
            p.set(axis, j);
            pts.push(p);
        }
    }
    LatticeSet::new(k, pts)
}

/// Compression along every axis in turn.
pub fn compress_all(set: &LatticeSet) -> Result<LatticeSet> {
    (0..set.dim()).try_fold(set.clone(), |acc, axis| compress(&acc, axis))
}

/// Whether `set` is a down-set of the nonnegative orthant.
pub fn is_down_set(set: &LatticeSet) -> bool {
    set.iter().all(|p| {
        (0..set.dim()).all(|i| {
            p[i] >= 0 && (p[i] == 0 || {
                let mut q = p.clone();
                q.set(i, p[i] - 1);
                set.contains(&q)
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumset::minkowski_sum;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let a = LatticeSet::from_arrays(&[[0, 0], [1, 1]]);
        assert_eq!(compress(&a, 0).unwrap(), LatticeSet::from_arrays(&[[0, 0], [0, 1]]));
        assert_eq!(compress(&LatticeSet::from_ints(&[0, 5, 9]), 0).unwrap(), LatticeSet::interval(0, 2));
        let down = LatticeSet::from_arrays(&[[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [0, 2]]);
        assert!(is_down_set(&down));
        assert_eq!(compress(&down, 0).unwrap(), down);
        assert_eq!(compress(&down, 1).unwrap(), down);
    }

    #[test]
    fn bad_axis() {
        let a = LatticeSet::from_ints(&[1]);
        assert_eq!(compress(&a, 1), Err(Error::InvalidAxis { axis: 1, dim: 1 }));
    }

    fn set2() -> impl Strategy<Value = LatticeSet> {
        proptest::collection::vec((-5i64..5, -5i64..5), 0..20)
            .prop_map(|v| LatticeSet::new(2, v.into_iter().map(|(a, b)| Point::from([a, b]))).unwrap())
    }

    proptest! {
        #[test]
        fn idempotent_and_cardinality_preserving(a in set2(), axis in 0usize..2) {
            let c = compress(&a, axis).unwrap();
            prop_assert_eq!(c.len(), a.len());
            prop_assert_eq!(compress(&c, axis).unwrap(), c);
        }

        #[test]
        fn full_compression_gives_down_set(a in set2()) {
            prop_assert!(is_down_set(&compress_all(&a).unwrap()));
        }

        #[test]
        fn compression_never_grows_sumsets(x in set2(), y in set2()) {
            let lhs = minkowski_sum(&compress_all(&x).unwrap(), &compress_all(&y).unwrap()).unwrap();
            let rhs = minkowski_sum(&x, &y).unwrap();
            prop_assert!(lhs.len() <= rhs.len());
        }
    }
}
