//! `A_N = (1/N) Z^k ∩ Ã`, returned scaled by `N` so that it is integral.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::geometry::Polytope;
use crate::lattice::LatticeSet;

pub fn discretize(regions: &[Polytope], n: u64) -> Result<LatticeSet> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    let Some(first) = regions.first() else {
        return Err(Error::EmptySet);
    };
    let factor = BigRational::from_integer(n.into());
    let mut out = LatticeSet::empty(first.dim());
    for region in regions {
        let scaled = region.scaled(&factor)?;
        out = out.union(&scaled.lattice_points()?)?;
    }
    Ok(out)
}
