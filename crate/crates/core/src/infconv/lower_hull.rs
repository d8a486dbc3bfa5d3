//! The lower convex hull `f̂`, the largest convex function below `f`.

use num_rational::BigRational;

use super::LatticeFunction;
use crate::error::Result;
use crate::geometry::hull::affine_basis;
use crate::geometry::polytope::injective_coordinates;
use crate::geometry::Polytope;

/// Evaluates `f̂` on the domain of `f` from the lower facets of the lifted
/// graph `{(x, f(x))}`, with `x` written in coordinates of its affine hull.
pub fn lower_convex_hull(f: &LatticeFunction) -> Result<LatticeFunction> {
    let domain = f.domain();
    domain.require_nonempty()?;
    let pts: Vec<Vec<i64>> = domain.iter().map(|p| p.coords().to_vec()).collect();
    let basis = affine_basis(&pts)?;
    let r = basis.len() - 1;
    if r == 0 {
        return Ok(f.clone());
    }
    let p0 = &pts[basis[0]];
    let diffs: Vec<Vec<i128>> = basis[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(p0).map(|(&a, &b)| a as i128 - b as i128).collect())
        .collect();
    let cols = injective_coordinates(&diffs, domain.dim())?;
    let project = |p: &[i64]| -> Vec<BigRational> {
        cols.iter().map(|&c| BigRational::from_integer(p[c].into())).collect()
    };
    let lifted: Vec<Vec<BigRational>> = pts
        .iter()
        .zip(f.values())
        .map(|(p, v)| {
            let mut q = project(p);
            q.push(v.clone());
            q
        })
        .collect();
    let graph = Polytope::from_vertices(r + 1, &lifted)?;
    if !graph.is_full_dimensional() {
        // the graph is flat, so f is affine
        return Ok(f.clone());
    }
    // lower facets n_q · q + n_h h <= b with n_h < 0 give h >= (b - n_q · q) / n_h
    let lower: Vec<_> = graph.halfspaces().iter().filter(|h| h.normal[r] < 0).collect();
    let values = pts
        .iter()
        .map(|p| {
            let q = project(p);
            lower
                .iter()
                .map(|h| {
                    let nq: BigRational = h.normal[..r]
                        .iter()
                        .zip(&q)
                        .map(|(&a, x)| x * BigRational::from_integer(a.into()))
                        .sum();
                    (&h.offset - nq) / BigRational::from_integer(h.normal[r].into())
                })
                .max()
                .expect("a full-dimensional graph has a lower facet")
        })
        .collect();
    LatticeFunction::new(domain.clone(), values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{LatticeSet, Point};
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn f1(values: &[BigRational]) -> LatticeFunction {
        LatticeFunction::new(LatticeSet::interval(0, values.len() as i64 - 1), values.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn one_dimensional_examples() {
        let h = lower_convex_hull(&f1(&ints(&[0, 1, 0]))).unwrap();
        assert_eq!(h.values(), ints(&[0, 0, 0]).as_slice());
        let convex = f1(&ints(&[0, 0, 1]));
        assert_eq!(lower_convex_hull(&convex).unwrap(), convex);
        // (2, 1) lies above the chord from (0, 0) to (3, 0)
        let h = lower_convex_hull(&f1(&ints(&[0, 3, 1, 0]))).unwrap();
        assert_eq!(h.values(), ints(&[0, 0, 0, 0]).as_slice());
        let h = lower_convex_hull(&f1(&ints(&[0, 3, 1, 3]))).unwrap();
        assert_eq!(h.values(), &[int(0), ratio(1, 2), int(1), int(3)]);
    }

    #[test]
    fn flat_domain_in_the_plane() {
        let d = LatticeSet::from_arrays(&[[0, 0], [1, 1], [2, 2]]);
        let f = LatticeFunction::new(d, ints(&[2, 5, 0])).unwrap();
        assert_eq!(lower_convex_hull(&f).unwrap().values(), ints(&[2, 1, 0]).as_slice());
    }

    #[test]
    fn two_dimensional_bump() {
        let d = LatticeSet::from_arrays(&[[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [0, 2]]);
        let f = LatticeFunction::new(d, ints(&[0, 1, 0, 1, 1, 0])).unwrap();
        assert_eq!(lower_convex_hull(&f).unwrap().values(), ints(&[0; 6]).as_slice());
    }

    fn function(k: usize) -> impl Strategy<Value = LatticeFunction> {
        proptest::collection::btree_map(proptest::collection::vec(-2i64..3, k), (0i64..8, 1i64..4), 1..10)
            .prop_map(move |m| {
                let (pts, vs): (Vec<_>, Vec<_>) = m.into_iter().unzip();
                LatticeFunction::new(
                    LatticeSet::new(k, pts.into_iter().map(Point::from)).unwrap(),
                    vs.into_iter().map(|(p, q)| ratio(p, q)).collect(),
                )
                .unwrap()
            })
    }

    proptest! {
        #[test]
        fn below_idempotent_and_midpoint_convex(f in (1usize..4).prop_flat_map(function)) {
            let h = lower_convex_hull(&f).unwrap();
            for (a, b) in h.values().iter().zip(f.values()) {
                prop_assert!(a <= b);
            }
            prop_assert_eq!(&lower_convex_hull(&h).unwrap(), &h);
            for (x, hx) in h.iter() {
                for (y, hy) in h.iter() {
                    let s = x.checked_add(y).unwrap();
                    if s.coords().iter().all(|c| c % 2 == 0) {
                        let mid = Point::from(s.coords().iter().map(|c| c / 2).collect::<Vec<_>>());
                        if let Some(hm) = h.value(&mid) {
                            prop_assert!(hm * int(2) <= hx + hy);
                        }
                    }
                }
            }
        }
    }
}
