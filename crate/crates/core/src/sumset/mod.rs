//! Minkowski sums and the quantities built from them.

pub mod bounds;
pub mod doubling;
pub mod plus;
pub mod thickness;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::lattice::{LatticeSet, Point};

pub use doubling::{doubling_deficit, DoublingReport};

/// Largest bounding-box volume handled by the dense backend.
pub const BITSET_VOLUME_LIMIT: u128 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumBackend {
    Hash,
    SortedMerge,
    Bitset,
}

/// `A + C`, choosing the dense backend when the bounding box of the result is
/// small enough.
pub fn minkowski_sum(a: &LatticeSet, c: &LatticeSet) -> Result<LatticeSet> {
    a.check_dim(c)?;
    let backend = match sum_box(a, c)? {
        Some((_, _, vol)) if vol <= BITSET_VOLUME_LIMIT => SumBackend::Bitset,
        _ => SumBackend::Hash,
    };
    minkowski_sum_with(a, c, backend)
}

pub fn minkowski_sum_with(a: &LatticeSet, c: &LatticeSet, backend: SumBackend) -> Result<LatticeSet> {
    a.check_dim(c)?;
    if a.is_empty() || c.is_empty() {
        return Ok(LatticeSet::empty(a.dim()));
    }
    match backend {
        SumBackend::Hash => hash_sum(a, c),
        SumBackend::SortedMerge => merge_sum(a, c),
        SumBackend::Bitset => bitset_sum(a, c),
    }
}

/// Bounding box of `A + C` and its volume.
fn sum_box(a: &LatticeSet, c: &LatticeSet) -> Result<Option<(Point, Vec<u64>, u128)>> {
    let (Some((alo, ahi)), Some((clo, chi))) = (a.bounding_box(), c.bounding_box()) else {
        return Ok(None);
    };
    let lo = alo.checked_add(&clo)?;
    let hi = ahi.checked_add(&chi)?;
    let mut sides = Vec::with_capacity(a.dim());
    let mut vol: u128 = 1;
    for i in 0..a.dim() {
        let side = (hi[i] as i128 - lo[i] as i128 + 1) as u128;
        sides.push(u64::try_from(side).map_err(|_| Error::Overflow("sumset bounding box"))?);
        vol = vol.saturating_mul(side);
    }
    Ok(Some((lo, sides, vol)))
}

fn hash_sum(a: &LatticeSet, c: &LatticeSet) -> Result<LatticeSet> {
    let mut acc: HashSet<Point> = HashSet::with_capacity(a.len() + c.len());
    for p in a {
        for q in c {
            acc.insert(p.checked_add(q)?);
        }
    }
    let mut pts: Vec<Point> = acc.into_iter().collect();
    pts.sort_unstable();
    Ok(LatticeSet::from_sorted(a.dim(), pts))
}

/// k-way merge of the sorted translates `p + C`.
fn merge_sum(a: &LatticeSet, c: &LatticeSet) -> Result<LatticeSet> {
    let cs = c.points();
    let mut heap = BinaryHeap::with_capacity(a.len());
    for (i, p) in a.iter().enumerate() {
        heap.push(Reverse((p.checked_add(&cs[0])?, i, 0usize)));
    }
    let mut out: Vec<Point> = Vec::new();
    while let Some(Reverse((s, i, j))) = heap.pop() {
        if out.last() != Some(&s) {
            out.push(s);
        }
        if j + 1 < cs.len() {
            heap.push(Reverse((a.points()[i].checked_add(&cs[j + 1])?, i, j + 1)));
        }
    }
    Ok(LatticeSet::from_sorted(a.dim(), out))
}

fn bitset_sum(a: &LatticeSet, c: &LatticeSet) -> Result<LatticeSet> {
    let (lo, sides, vol) = sum_box(a, c)?.expect("both nonempty");
    if vol > BITSET_VOLUME_LIMIT {
        return Err(Error::InvalidParameter(format!("bitset volume {vol} above limit")));
    }
    let k = a.dim();
    // row-major with coordinate 0 most significant, so increasing index is lexicographic
    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * sides[i + 1] as usize;
    }
    let offset = |p: &Point, base: &Point| -> usize {
        (0..k).map(|i| (p[i] - base[i]) as usize * strides[i]).sum()
    };
    let (alo, _) = a.bounding_box().expect("nonempty");
    let (clo, _) = c.bounding_box().expect("nonempty");
    let a_idx: Vec<usize> = a.iter().map(|p| offset(p, &alo)).collect();
    let c_idx: Vec<usize> = c.iter().map(|p| offset(p, &clo)).collect();
    let mut bits = vec![0u64; (vol as usize).div_ceil(64)];
    for &x in &a_idx {
        for &y in &c_idx {
            let z = x + y;
            bits[z >> 6] |= 1 << (z & 63);
        }
    }
    let mut pts = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let z = (w << 6) | word.trailing_zeros() as usize;
            word &= word - 1;
            let mut rem = z;
            let coords = (0..k).map(|i| {
                let q = rem / strides[i];
                rem %= strides[i];
                lo[i] + q as i64
            });
            pts.push(Point::new(coords));
        }
    }
    Ok(LatticeSet::from_sorted(k, pts))
}
