//! Extremal families: the degenerate example with negative deficit and
//! large gap, the lower-bound construction, and the functional example.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::convex_progression;
use crate::infconv::LatticeFunction;
use crate::lattice::{LatticeSet, Point};
use crate::rational::{self, int};
use crate::sumset::doubling::pow2;
use crate::sumset::doubling_deficit;

/// `({1..n_0} × {1..2n}^{k-1}) ∪ {(-1, 1, ..., 1)}`.
pub fn gen_degenerate_family(k: usize, n0: u64, n: u64) -> Result<LatticeSet> {
    if k < 2 || n0 == 0 || n == 0 {
        return Err(Error::InvalidParameter("need k >= 2 and n0, n >= 1".into()));
    }
    let mut lo = vec![1i64; k];
    let mut lens = vec![2 * n; k];
    lens[0] = n0;
    let mut pts = crate::lattice::gap::AxisBox::new(Point::from(lo.clone()), lens)?
        .elements()
        .into_points();
    lo[0] = -1;
    pts.push(Point::from(lo));
    LatticeSet::new(k, pts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateCheck {
    pub card: usize,
    pub deficit: i64,
    pub co_gap: u64,
    /// `(|A| - 1) / (2^{k-1} n_0)`.
    #[serde(with = "rational::serde_str")]
    pub predicted_gap: BigRational,
    pub holds: bool,
}

/// Verifies `d_k(A) < 0` and `|co(A) \ A| = (|A| - 1) / (2^{k-1} n_0)`.
pub fn check_degenerate_family(k: usize, n0: u64, n: u64) -> Result<DegenerateCheck> {
    let a = gen_degenerate_family(k, n0, n)?;
    let deficit = doubling_deficit(&a)?.deficit;
    let co_gap = convex_progression(&a)?.co_gap(&a);
    let predicted_gap = rational::ratio(a.len() as i64 - 1, pow2(k - 1)? * n0 as i64);
    let holds = deficit < 0 && int(co_gap as i64) == predicted_gap;
    Ok(DegenerateCheck { card: a.len(), deficit, co_gap, predicted_gap, holds })
}

/// Lattice points `x ∈ Z^m_{>=0}` with `Σ x <= n`.
fn scaled_simplex(m: usize, n: u64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                let used: i64 = p.iter().sum();
                (0..=n as i64 - used).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn simplex_vertices(m: usize, n: u64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; m]];
    for i in 0..m {
        let mut v = vec![0; m];
        v[i] = n as i64;
        out.push(v);
    }
    out
}

/// `n((T × [-2, 0]) ∪ (V(T) × {1})) ∩ Z^k` with `T` the standard
/// `(k-1)`-simplex; the height is the last coordinate.
pub fn gen_lowerbound_family(k: usize, n: u64) -> Result<LatticeSet> {
    if k < 2 || n == 0 {
        return Err(Error::InvalidParameter("need k >= 2 and n >= 1".into()));
    }
    let depth = 2 * n as i64;
    let mut pts = Vec::new();
    for base in scaled_simplex(k - 1, n) {
        for h in -depth..=0 {
            let mut p = base.clone();
            p.push(h);
            pts.push(Point::from(p));
        }
    }
    for mut v in simplex_vertices(k - 1, n) {
        v.push(n as i64);
        pts.push(Point::from(v));
    }
    LatticeSet::new(k, pts)
}

/// On `nΔ ∩ Z^{k-1}`: zero at the vertices and one elsewhere.
pub fn gen_functional_example(k: usize, n: u64) -> Result<LatticeFunction> {
    if k < 2 || n == 0 {
        return Err(Error::InvalidParameter("need k >= 2 and n >= 1".into()));
    }
    let vertices = simplex_vertices(k - 1, n);
    let pairs = scaled_simplex(k - 1, n)
        .into_iter()
        .map(|p| {
            let v = if vertices.contains(&p) { BigRational::zero() } else { BigRational::one() };
            (Point::from(p), v)
        })
        .collect();
    LatticeFunction::from_pairs(k - 1, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infconv::functional_deficit;
    use crate::rational::ratio;

    #[test]
    fn degenerate_small_case() {
        let a = gen_degenerate_family(2, 1, 3).unwrap();
        assert_eq!(a.len(), 7);
        let c = check_degenerate_family(2, 1, 3).unwrap();
        assert_eq!((c.card, c.deficit, c.co_gap, c.holds), (7, -10, 3, true));
        assert_eq!(convex_progression(&a).unwrap().co.len(), 10);
    }

    #[test]
    fn degenerate_identities() {
        for (k, n0, n) in [(2, 2, 4), (2, 1, 10), (3, 1, 2), (2, 3, 5), (3, 2, 3)] {
            let c = check_degenerate_family(k, n0, n).unwrap();
            assert!(c.holds, "k={k} n0={n0} n={n}: {c:?}");
        }
        assert_eq!(check_degenerate_family(2, 2, 4).unwrap().co_gap, 4);
        let c = check_degenerate_family(3, 1, 2).unwrap();
        assert_eq!((c.card, c.co_gap), (17, 4));
    }

    #[test]
    fn lowerbound_shapes() {
        let a = gen_lowerbound_family(2, 1).unwrap();
        assert_eq!(a.len(), 8);
        assert!(a.contains(&Point::from(vec![1, 1])));
        assert_eq!(gen_lowerbound_family(2, 2).unwrap().len(), 17);
        // 10 base points of 3Δ_2 times 7 heights plus 3 apexes
        assert_eq!(gen_lowerbound_family(3, 3).unwrap().len(), 73);
    }

    #[test]
    fn functional_examples() {
        let f = gen_functional_example(2, 2).unwrap();
        assert_eq!(f.values(), &[int(0), int(1), int(0)]);
        let r = functional_deficit(&f).unwrap();
        assert_eq!((r.hull_deficit, r.conv_deficit, r.ratio), (int(1), int(2), Some(ratio(1, 2))));
        let f = gen_functional_example(2, 1).unwrap();
        let r = functional_deficit(&f).unwrap();
        assert_eq!((r.hull_deficit, r.conv_deficit), (int(0), int(0)));
        let f = gen_functional_example(3, 2).unwrap();
        assert_eq!(f.domain().len(), 6);
        assert_eq!(f.sum(), int(3));
    }
}
