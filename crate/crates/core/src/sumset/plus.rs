//! The reference sums `X(+)Y = (X + min Y) ∪ (Y + max X)` and `A(+)A`.

use crate::error::{Error, Result};
use crate::lattice::fibers::rows;
use crate::lattice::{LatticeSet, Point};

/// `X(+)Y` on sorted rows; empty when either side is empty.
pub fn row_plus(x: &[i64], y: &[i64]) -> Result<Vec<i64>> {
    let (Some(&min_y), Some(&max_x)) = (y.first(), x.last()) else {
        return Ok(Vec::new());
    };
    let add = |a: i64, b: i64| a.checked_add(b).ok_or(Error::Overflow("row sum"));
    let mut out = x.iter().map(|&a| add(a, min_y)).collect::<Result<Vec<_>>>()?;
    // Y + max X starts at max X + min Y, the last element of X + min Y
    for &b in &y[1..] {
        out.push(add(b, max_x)?);
    }
    Ok(out)
}

pub fn plus_1d(x: &LatticeSet, y: &LatticeSet) -> Result<LatticeSet> {
    for s in [x, y] {
        if s.dim() != 1 {
            return Err(Error::InvalidDimension(s.dim(), "plus_1d needs one-dimensional sets"));
        }
    }
    let xs: Vec<i64> = x.iter().map(|p| p[0]).collect();
    let ys: Vec<i64> = y.iter().map(|p| p[0]).collect();
    let out = row_plus(&xs, &ys)?;
    Ok(LatticeSet::from_sorted(1, out.into_iter().map(|v| Point::from([v])).collect()))
}

/// All shift vectors `v ∈ {0,1}^{m}`.
pub(crate) fn binary_shifts(m: usize) -> impl Iterator<Item = Point> {
    (0u64..1 << m).map(move |mask| Point::new((0..m).map(|i| ((mask >> i) & 1) as i64)))
}

/// `A(+)A`: the union over `v ∈ {0}×{0,1}^{k-1}` and rows `x` of
/// `R_x (+) R_{x+v}`, placed over the projected point `2x + v`.
pub fn plus_structured(set: &LatticeSet) -> Result<LatticeSet> {
    if set.dim() < 2 {
        return Err(Error::InvalidDimension(set.dim(), "use plus_1d for k = 1"));
    }
    let decomposition = rows(set)?;
    let mut pts = Vec::new();
    for v in binary_shifts(set.dim() - 1) {
        for (x, rx) in decomposition.iter() {
            let xv = x.checked_add(&v)?;
            let Some(rxv) = decomposition.row(&xv) else { continue };
            let target = x.checked_add(&xv)?;
            for a in row_plus(rx, rxv)? {
                pts.push(Point::with_head(a, &target));
            }
        }
    }
    LatticeSet::new(set.dim(), pts)
}

/// `Σ_v Σ_x (|R_x| + |R_{x+v}| - 1)` over pairs of nonempty rows.
pub fn plus_structured_lower_bound(set: &LatticeSet) -> Result<usize> {
    let decomposition = rows(set)?;
    let mut total = 0;
    for v in binary_shifts(set.dim() - 1) {
        for (x, rx) in decomposition.iter() {
            if let Some(rxv) = decomposition.row(&x.checked_add(&v)?) {
                total += rx.len() + rxv.len() - 1;
            }
        }
    }
    Ok(total)
}
