//! The convex progression `ĉo(A) = co(A) ∩ Λ_A` and its gap.

use serde::Serialize;

use super::polytope::Polytope;
use crate::error::Result;
use crate::lattice::io::set_to_json;
use crate::lattice::sublattice::affine_sublattice;
use crate::lattice::LatticeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullGapReport {
    /// Lattice points of the real convex hull.
    pub co: LatticeSet,
    /// `co` intersected with the affine lattice spanned by `A`.
    pub co_hat: LatticeSet,
    /// `|ĉo(A) \ A|`.
    pub gap: u64,
}

#[derive(Serialize)]
struct ReportJson {
    co: serde_json::Value,
    co_hat: serde_json::Value,
    gap: u64,
}

impl HullGapReport {
    /// `|co(A) \ A|`, the gap measured against all lattice points.
    pub fn co_gap(&self, a: &LatticeSet) -> u64 {
        self.co.difference_count(a) as u64
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            co: set_to_json(&self.co),
            co_hat: set_to_json(&self.co_hat),
            gap: self.gap,
        })
        .expect("report serializes")
    }
}

pub fn convex_progression(a: &LatticeSet) -> Result<HullGapReport> {
    a.require_nonempty()?;
    let co = Polytope::convex_hull(a)?.lattice_points()?;
    let lattice = affine_sublattice(a)?;
    let co_hat = co.filter(|p| lattice.contains(p));
    let gap = (co_hat.len() - a.len()) as u64;
    Ok(HullGapReport { co, co_hat, gap })
}
