//! Direct transcriptions of definitions, used to cross-check the optimized
//! routines inside the randomized suites.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::geometry::Polytope;
use crate::infconv::LatticeFunction;
use crate::lattice::{LatticeSet, Point};
use crate::sumset::minkowski_sum_with;
use crate::sumset::SumBackend;

/// `f^□(z) = min over x ∈ A with z - x ∈ A of f(x) + f(z - x)`.
pub fn brute_inf_convolution(f: &LatticeFunction) -> Result<LatticeFunction> {
    let sum = minkowski_sum_with(f.domain(), f.domain(), SumBackend::Hash)?;
    let mut values = Vec::with_capacity(sum.len());
    for z in sum.iter() {
        let mut best: Option<BigRational> = None;
        for (x, fx) in f.iter() {
            if let Some(fy) = f.value(&z.checked_sub(x)?) {
                let v = fx + fy;
                if best.as_ref().map_or(true, |b| v < *b) {
                    best = Some(v);
                }
            }
        }
        values.push(best.expect("z lies in A + A"));
    }
    LatticeFunction::new(sum, values)
}

/// Restricted infimum convolution straight from its definition: for every
/// `z ∈ T + T` and interior `x_1`, test whether `x_2 = z - x_1` is a vertex
/// or lies in `(x_1 + W) ∩ T`.
pub fn brute_restricted(g: &LatticeFunction, w: &LatticeSet) -> Result<LatticeFunction> {
    let (sum, values) = brute_restricted_partial(g, w)?;
    LatticeFunction::new(sum, values.into_iter().map(|v| v.unwrap_or_else(BigRational::zero)).collect())
}

/// As [`brute_restricted`], with `None` where no admissible split exists.
pub fn brute_restricted_partial(
    g: &LatticeFunction,
    w: &LatticeSet,
) -> Result<(LatticeSet, Vec<Option<BigRational>>)> {
    let t = g.domain();
    let hull = Polytope::convex_hull(t)?;
    let vertices: Vec<Point> = hull.integer_vertices().unwrap_or_default();
    let interior = hull.interior().lattice_points()?;
    let sum = minkowski_sum_with(t, t, SumBackend::Hash)?;
    let mut values = Vec::with_capacity(sum.len());
    for z in sum.iter() {
        let mut best: Option<BigRational> = None;
        for x1 in interior.iter() {
            let x2 = z.checked_sub(x1)?;
            let Some(g2) = g.value(&x2) else { continue };
            let allowed = vertices.contains(&x2) || w.contains(&x2.checked_sub(x1)?);
            if allowed {
                let v = g.value(x1).expect("interior point in T") + g2;
                if best.as_ref().map_or(true, |b| v < *b) {
                    best = Some(v);
                }
            }
        }
        values.push(best);
    }
    Ok((sum, values))
}
