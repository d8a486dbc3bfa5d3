//! Nonnegative rational functions on lattice sets: infimum convolutions,
//! lower convex hulls, epigraph lifts and the functional deficit.

mod convolution;
mod deficit;
mod io;
mod lower_hull;

pub use convolution::{inf_convolution, restricted_inf_convolution};
pub use deficit::{epigraph_lift, functional_deficit, FunctionalDeficitReport};
pub use io::{function_from_json, function_to_json, parse_function, write_function};
pub use lower_hull::lower_convex_hull;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::convex_progression;
use crate::lattice::{LatticeSet, Point};

/// A function `domain -> Q_{>=0}`; `values[i]` belongs to `domain.points()[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeFunction {
    domain: LatticeSet,
    values: Vec<BigRational>,
}

impl LatticeFunction {
    /// Checks lengths and signs but not the shape of the domain.
    pub fn new(domain: LatticeSet, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != domain.len() {
            return Err(Error::InvalidParameter(format!(
                "{} values for {} domain points",
                values.len(),
                domain.len()
            )));
        }
        if values.iter().any(Signed::is_negative) {
            return Err(Error::InvalidParameter("function values must be nonnegative".into()));
        }
        Ok(LatticeFunction { domain, values })
    }

    /// As [`LatticeFunction::new`], additionally requiring `domain = ĉo(domain)`.
    pub fn on_convex_progression(domain: LatticeSet, values: Vec<BigRational>) -> Result<Self> {
        let gap = convex_progression(&domain)?.gap;
        if gap != 0 {
            return Err(Error::NotConvexProgression { gap: gap as usize });
        }
        Self::new(domain, values)
    }

    /// Builds from `(point, value)` pairs in any order.
    pub fn from_pairs(dim: usize, pairs: Vec<(Point, BigRational)>) -> Result<Self> {
        let mut pairs = pairs;
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidParameter("duplicate domain point".into()));
        }
        let (points, values): (Vec<Point>, Vec<BigRational>) = pairs.into_iter().unzip();
        Self::new(LatticeSet::new(dim, points)?, values)
    }

    pub fn zero(domain: LatticeSet) -> Self {
        let values = vec![BigRational::zero(); domain.len()];
        LatticeFunction { domain, values }
    }

    pub fn domain(&self) -> &LatticeSet {
        &self.domain
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, p: &Point) -> Option<&BigRational> {
        self.domain.points().binary_search(p).ok().map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &BigRational)> {
        self.domain.iter().zip(&self.values)
    }

    pub fn sum(&self) -> BigRational {
        self.values.iter().sum()
    }

    pub fn max(&self) -> BigRational {
        self.values.iter().max().cloned().unwrap_or_else(BigRational::zero)
    }
}
