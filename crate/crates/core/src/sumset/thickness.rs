//! Bounded search for the number of parallel hyperplanes covering a set.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LatticeSet;

pub const DEFAULT_NORMAL_BOUND: u32 = 5;

/// Smallest number of parallel hyperplanes `<normal, x> = c` found to cover
/// the set, over primitive normals with coordinates in `[-bound, bound]`.
/// An upper bound on the true thickness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThicknessEstimate {
    pub count: usize,
    pub normal: Vec<i64>,
    pub exhaustive_up_to: u32,
}

/// Primitive vectors in `[-bound, bound]^k` whose first nonzero entry is positive,
/// in lexicographic order.
pub fn primitive_normals(k: usize, bound: u32) -> Vec<Vec<i64>> {
    let b = bound as i64;
    let mut out = Vec::new();
    let mut cur = vec![-b; k];
    loop {
        let first = cur.iter().find(|&&c| c != 0);
        if matches!(first, Some(&c) if c > 0) && cur.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1 {
            out.push(cur.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < b {
                cur[i] += 1;
                break;
            }
            cur[i] = -b;
        }
    }
}

/// Number of distinct values of `<normal, a>` over the set.
pub fn level_count(set: &LatticeSet, normal: &[i64]) -> Result<usize> {
    let mut values = set.iter().map(|p| p.dot(normal)).collect::<Result<Vec<i64>>>()?;
    values.sort_unstable();
    values.dedup();
    Ok(values.len())
}

pub fn thickness_upper(set: &LatticeSet, bound: u32) -> Result<ThicknessEstimate> {
    set.require_nonempty()?;
    if bound < 1 {
        return Err(Error::InvalidParameter("normal bound must be at least 1".into()));
    }
    let mut best: Option<(usize, Vec<i64>)> = None;
    for n in primitive_normals(set.dim(), bound) {
        let m = level_count(set, &n)?;
        if best.as_ref().is_none_or(|(b, _)| m < *b) {
            let done = m == 1;
            best = Some((m, n));
            if done {
                break;
            }
        }
    }
    let (count, normal) = best.expect("at least one primitive normal");
    Ok(ThicknessEstimate { count, normal, exhaustive_up_to: bound })
}

/// Whether the hyperplanes `<normal, x> = c`, one per value taken on the set, cover it.
pub fn covers(set: &LatticeSet, estimate: &ThicknessEstimate) -> Result<bool> {
    if estimate.normal.len() != set.dim() {
        return Err(Error::DimensionMismatch { expected: set.dim(), found: estimate.normal.len() });
    }
    Ok(level_count(set, &estimate.normal)? == estimate.count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::gap::Gap;

    #[test]
    fn planar_set() {
        let a = LatticeSet::from_arrays(&[[0, 0], [1, 0], [2, 0]]);
        let t = thickness_upper(&a, 1).unwrap();
        assert_eq!((t.count, t.normal.clone()), (1, vec![0, 1]));
        assert!(covers(&a, &t).unwrap());
    }

    #[test]
    fn square_box_needs_three() {
        let b = Gap::standard_box(&[3, 3]).unwrap().elements().unwrap();
        assert_eq!(thickness_upper(&b, 1).unwrap().count, 3);
        assert_eq!(thickness_upper(&b, 5).unwrap().count, 3);
    }

    #[test]
    fn diagonal() {
        let a = LatticeSet::from_arrays(&[[0, 0], [1, 1], [2, 2]]);
        let t = thickness_upper(&a, 1).unwrap();
        assert_eq!((t.count, t.normal), (1, vec![1, -1]));
    }

    #[test]
    fn normals_are_primitive_and_sign_normalized() {
        let ns = primitive_normals(2, 1);
        assert_eq!(ns, vec![vec![0, 1], vec![1, -1], vec![1, 0], vec![1, 1]]);
        assert_eq!(primitive_normals(1, 5), vec![vec![1]]);
        assert!(primitive_normals(3, 2).iter().all(|n| n.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1));
    }

    #[test]
    fn errors() {
        assert!(thickness_upper(&LatticeSet::empty(2), 2).is_err());
        assert!(thickness_upper(&LatticeSet::from_ints(&[1]), 0).is_err());
    }
}
