//! Convex hulls, lattice points of polytopes, convex progressions, and the
//! discrete versus continuous comparison checks.

pub mod checks;
pub(crate) mod exact;
pub(crate) mod hull;
pub mod polytope;
pub mod progression;
pub mod simplex;
pub mod triangulate;

pub use checks::{boundary_straddle_count, hyperplane_box_check, volume_count_check, CountCheck, VolumeCountCheck};
pub use polytope::{HalfSpace, Polytope};
pub use progression::{convex_progression, HullGapReport};
pub use simplex::{covering_family_search, minimal_covering_levels, simplex_family, Covering, SimplexFamily};
pub use triangulate::triangulate_boundary;
