//! `f^□(z) = min_{x+y=z} f(x) + f(y)` and its restricted variant.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::LatticeFunction;
use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::lattice::{LatticeSet, Point};
use crate::sumset::minkowski_sum;

fn index_of(set: &LatticeSet) -> HashMap<&Point, usize> {
    set.iter().enumerate().map(|(i, p)| (p, i)).collect()
}

pub fn inf_convolution(f: &LatticeFunction) -> Result<LatticeFunction> {
    let a = f.domain();
    a.require_nonempty()?;
    let sum = minkowski_sum(a, a)?;
    let index = index_of(&sum);
    let mut best: Vec<Option<BigRational>> = vec![None; sum.len()];
    let pts = a.points();
    let vals = f.values();
    for i in 0..pts.len() {
        for j in i..pts.len() {
            let z = pts[i].checked_add(&pts[j])?;
            let v = &vals[i] + &vals[j];
            let slot = &mut best[index[&z]];
            if slot.as_ref().map_or(true, |b| v < *b) {
                *slot = Some(v);
            }
        }
    }
    LatticeFunction::new(sum, best.into_iter().map(|v| v.expect("every sum point has a split")).collect())
}

/// `g^□_W(z)`: minimum of `g(x_1) + g(x_2)` over `z = x_1 + x_2` with `x_1`
/// an interior lattice point of the simplex `T` and
/// `x_2 ∈ ((x_1 + W) ∩ T) ∪ V(T)`; zero when no such split exists.
pub fn restricted_inf_convolution(g: &LatticeFunction, w: &LatticeSet) -> Result<LatticeFunction> {
    let t = g.domain();
    t.require_nonempty()?;
    t.check_dim(w)?;
    let hull = Polytope::convex_hull(t)?;
    if hull.affine_dim() == 0 || !hull.is_simplex() {
        return Err(Error::NotSimplex);
    }
    if hull.lattice_points()? != *t {
        return Err(Error::InvalidParameter("domain must be all lattice points of its simplex".into()));
    }
    let vertices = hull.integer_vertices().ok_or(Error::NotSimplex)?;
    let interior = hull.interior().lattice_points()?;
    let sum = minkowski_sum(t, t)?;
    let index = index_of(&sum);
    let mut best: Vec<Option<BigRational>> = vec![None; sum.len()];
    for x1 in interior.iter() {
        let g1 = g.value(x1).expect("interior point in domain");
        let mut witnesses: Vec<Point> = Vec::with_capacity(w.len() + vertices.len());
        for s in w.iter() {
            let y = x1.checked_add(s)?;
            if t.contains(&y) {
                witnesses.push(y);
            }
        }
        witnesses.extend(vertices.iter().cloned());
        witnesses.sort();
        witnesses.dedup();
        for x2 in &witnesses {
            let z = x1.checked_add(x2)?;
            let v = g1 + g.value(x2).expect("witness in domain");
            let slot = &mut best[index[&z]];
            if slot.as_ref().map_or(true, |b| v < *b) {
                *slot = Some(v);
            }
        }
    }
    LatticeFunction::new(sum, best.into_iter().map(|v| v.unwrap_or_else(BigRational::zero)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn f1(values: &[i64]) -> LatticeFunction {
        LatticeFunction::new(
            LatticeSet::interval(0, values.len() as i64 - 1),
            values.iter().map(|&v| int(v)).collect(),
        )
        .unwrap()
    }

    fn vals(f: &LatticeFunction) -> Vec<BigRational> {
        f.values().to_vec()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// Looks up `z - x` for every `x` in the domain.
    fn oracle(f: &LatticeFunction) -> LatticeFunction {
        let sum = minkowski_sum(f.domain(), f.domain()).unwrap();
        let values = sum
            .iter()
            .map(|z| {
                f.iter()
                    .filter_map(|(x, fx)| {
                        let y = z.checked_sub(x).unwrap();
                        f.value(&y).map(|fy| fx + fy)
                    })
                    .min()
                    .unwrap()
            })
            .collect();
        LatticeFunction::new(sum, values).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(vals(&inf_convolution(&f1(&[0, 1, 0])).unwrap()), ints(&[0, 1, 0, 1, 0]));
        assert_eq!(vals(&inf_convolution(&f1(&[0, 1])).unwrap()), ints(&[0, 1, 2]));
        assert_eq!(vals(&inf_convolution(&f1(&[0, 0, 0, 0])).unwrap()), ints(&[0; 7]));
    }

    #[test]
    fn restricted_example() {
        let g = f1(&[0, 2, 0]);
        let w = LatticeSet::from_ints(&[0]);
        assert_eq!(vals(&restricted_inf_convolution(&g, &w).unwrap()), ints(&[0, 2, 4, 2, 0]));
    }

    #[test]
    fn restricted_rejects_non_simplex() {
        let sq = LatticeSet::from_arrays(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let g = LatticeFunction::zero(sq);
        assert!(matches!(
            restricted_inf_convolution(&g, &LatticeSet::from_arrays(&[[0, 0]])),
            Err(Error::NotSimplex)
        ));
    }

    fn function(k: usize) -> impl Strategy<Value = LatticeFunction> {
        proptest::collection::btree_map(proptest::collection::vec(-3i64..4, k), 0i64..6, 1..12).prop_map(
            move |m| {
                let (pts, vs): (Vec<_>, Vec<_>) = m.into_iter().unzip();
                LatticeFunction::new(
                    LatticeSet::new(k, pts.into_iter().map(Point::from)).unwrap(),
                    vs.into_iter().map(int).collect(),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn matches_oracle(f in (1usize..4).prop_flat_map(function)) {
            prop_assert_eq!(inf_convolution(&f).unwrap(), oracle(&f));
        }

        #[test]
        fn subadditive(f in (1usize..3).prop_flat_map(function)) {
            let c = inf_convolution(&f).unwrap();
            for (x, fx) in f.iter() {
                for (y, fy) in f.iter() {
                    prop_assert!(*c.value(&x.checked_add(y).unwrap()).unwrap() <= fx + fy);
                }
            }
        }
    }
}
