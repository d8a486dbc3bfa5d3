//! Exact computations around sumsets of integer lattice sets: doubling
//! deficits, convex progressions, row-structured reference sums, infimum
//! convolutions, and a harness that checks the associated inequalities on
//! exhaustive and randomized instances.

pub mod error;
pub mod geometry;
pub mod harness;
pub mod infconv;
pub mod lattice;
pub mod rational;
pub mod sumset;

pub use error::{Error, Result};
pub use lattice::{LatticeSet, Point};
