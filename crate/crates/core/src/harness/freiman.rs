//! The one-dimensional `3|A| - 4` statement: if `d_1(A) <= |A| - 4` then
//! `|ĉo(A) \ A| <= d_1(A) + 1`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::convex_progression;
use crate::lattice::LatticeSet;
use crate::sumset::doubling_deficit;

pub const DEFAULT_FREIMAN_CAP: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreimanCheck {
    pub card: usize,
    /// `d_1(A) <= |A| - 4`.
    pub hypothesis: bool,
    pub d1: i64,
    pub gap: u64,
    /// `gap <= d_1 + 1`, evaluated whether or not the hypothesis holds.
    pub conclusion_holds: bool,
}

impl FreimanCheck {
    pub fn violation(&self) -> bool {
        self.hypothesis && !self.conclusion_holds
    }

    fn from_parts(card: usize, d1: i64, gap: u64) -> Self {
        FreimanCheck {
            card,
            hypothesis: d1 <= card as i64 - 4,
            d1,
            gap,
            conclusion_holds: gap as i64 <= d1 + 1,
        }
    }
}

pub fn check_freiman(a: &LatticeSet) -> Result<FreimanCheck> {
    if a.dim() != 1 {
        return Err(Error::InvalidDimension(a.dim(), "the 3k-4 check is one-dimensional"));
    }
    let d1 = doubling_deficit(a)?.deficit;
    let gap = convex_progression(a)?.gap;
    Ok(FreimanCheck::from_parts(a.len(), d1, gap))
}

/// The contrapositive form `d_1(A) >= min(|A| - 3, gap - 1)`.
pub fn row_bound_holds(check: &FreimanCheck) -> bool {
    check.d1 >= (check.card as i64 - 3).min(check.gap as i64 - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreimanEnumeration {
    pub n: u32,
    pub sets: u64,
    pub hypothesis_sets: u64,
    /// Classes up to dilation by the gcd and the reflection `x ↦ N - x`.
    pub distinct_reduced: u64,
    pub violations: u64,
    pub first_violation: Option<Vec<i64>>,
}

fn members(mask: u64) -> impl Iterator<Item = u32> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// Checks the statement on `A` given as a bitmask of `{0, ..., N}` containing
/// both ends.
pub(crate) fn check_mask(mask: u64, n: u32) -> FreimanCheck {
    let mut sum: u64 = 0;
    let mut g = 0u32;
    for a in members(mask) {
        sum |= mask << a;
        g = g.gcd(&a);
    }
    let card = mask.count_ones() as usize;
    let d1 = sum.count_ones() as i64 - 2 * card as i64;
    // Λ_A = gZ and co(A) = [0, N]
    let hat = if n == 0 { 1 } else { (n / g) as u64 + 1 };
    FreimanCheck::from_parts(card, d1, hat - card as u64)
}

fn canonical(mask: u64, n: u32) -> u64 {
    let g = members(mask).fold(0u32, |g, a| g.gcd(&a)).max(1);
    let m = n / g;
    let reduced = members(mask).fold(0u64, |acc, a| acc | 1 << (a / g));
    let reflected = members(reduced).fold(0u64, |acc, a| acc | 1 << (m - a));
    reduced.min(reflected) | (m as u64) << 40
}

/// All `A ⊆ {0, ..., N}` with `0, N ∈ A`.
pub fn enumerate_freiman(n: u32, cap: u32) -> Result<FreimanEnumeration> {
    if n > cap || n > 30 {
        return Err(Error::CapExceeded { cap: cap.min(30) as usize });
    }
    let ends: u64 = 1 | 1 << n;
    let inner = n.saturating_sub(1);
    let mut out = FreimanEnumeration {
        n,
        sets: 0,
        hypothesis_sets: 0,
        distinct_reduced: 0,
        violations: 0,
        first_violation: None,
    };
    let mut classes = BTreeSet::new();
    for bits in 0u64..1 << inner {
        let mask = ends | bits << 1;
        let c = check_mask(mask, n);
        out.sets += 1;
        out.hypothesis_sets += c.hypothesis as u64;
        if c.violation() {
            out.violations += 1;
            out.first_violation.get_or_insert_with(|| members(mask).map(i64::from).collect());
        }
        classes.insert(canonical(mask, n));
    }
    out.distinct_reduced = classes.len() as u64;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c = check_freiman(&LatticeSet::from_ints(&[0, 1, 2, 4])).unwrap();
        assert_eq!((c.hypothesis, c.d1, c.gap, c.conclusion_holds), (true, 0, 1, true));
        let c = check_freiman(&LatticeSet::from_ints(&[0, 1, 3])).unwrap();
        assert!(!c.hypothesis);
        assert_eq!(c.d1, 0);
        let c = check_freiman(&LatticeSet::interval(0, 9)).unwrap();
        assert_eq!((c.d1, c.gap, c.conclusion_holds), (-1, 0, true));
    }

    #[test]
    fn bitmask_path_matches_general_path() {
        for n in 0..=9u32 {
            for bits in 0u64..1 << n.saturating_sub(1) {
                let mask = 1 | 1 << n | bits << 1;
                let vals: Vec<i64> = members(mask).map(i64::from).collect();
                let general = check_freiman(&LatticeSet::from_ints(&vals)).unwrap();
                assert_eq!(check_mask(mask, n), general, "{vals:?}");
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let e = enumerate_freiman(0, 16).unwrap();
        assert_eq!((e.sets, e.violations, e.hypothesis_sets), (1, 0, 0));
        let e = enumerate_freiman(5, 16).unwrap();
        assert_eq!((e.sets, e.violations), (16, 0));
        assert!(enumerate_freiman(17, 16).is_err());
    }

    #[test]
    fn reflection_classes() {
        // {0,1,3} and {0,2,3} are mirror images; {0,3} reduces to {0,1}
        let e = enumerate_freiman(3, 16).unwrap();
        assert_eq!(e.sets, 4);
        assert_eq!(e.distinct_reduced, 3);
    }

    #[test]
    fn row_bound() {
        for n in 1..=10u32 {
            for bits in 0u64..1 << (n - 1) {
                assert!(row_bound_holds(&check_mask(1 | 1 << n | bits << 1, n)));
            }
        }
    }
}
